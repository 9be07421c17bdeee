#pragma once

#include "circuit.hpp"

#include <cstddef>
#include <vector>

namespace qcla
{

enum class schedule_policy
{
  /// Slices hold either only Toffolis or only NOT/CNOT gates.
  typed,
  /// Any gates may share a slice as long as their wires are disjoint.
  mixed
};

/// Each slice lists gate indices in original order.
using slicing = std::vector<std::vector<std::size_t>>;

/*! \brief Greedy as-soon-as-possible list scheduling into time-slices.
 *
 * A gate is placed in the earliest slice that comes after every slice already
 * holding a gate on one of its wires (so gates sharing a wire never reorder
 * and never share a slice). Gates on disjoint wires may move ahead of earlier
 * gates. Under `schedule_policy::typed` the slice must also hold gates of the
 * same class (Toffoli vs. NOT/CNOT); a new slice is opened at the end when
 * none qualifies.
 */
inline slicing schedule_asap( circuit const& c, schedule_policy policy = schedule_policy::typed )
{
  c.validate();
  auto const& layout = c.layout();
  std::vector<long> last( layout.width(), -1 );
  std::vector<bool> slice_is_toffoli;
  slicing slices;

  for ( std::size_t gi = 0; gi < c.gates().size(); ++gi )
  {
    auto const& g = c.gates()[gi];
    long earliest = 0;
    g.foreach_wire( [&]( wire w ) { earliest = std::max( earliest, last[layout.flat( w )] + 1 ); } );

    auto slot = static_cast<std::size_t>( earliest );
    bool const toff = g.kind == gate_kind::toffoli;
    if ( policy == schedule_policy::typed )
    {
      while ( slot < slices.size() && slice_is_toffoli[slot] != toff )
        ++slot;
    }
    if ( slot == slices.size() )
    {
      slices.emplace_back();
      slice_is_toffoli.push_back( toff );
    }
    slices[slot].push_back( gi );
    g.foreach_wire( [&]( wire w ) { last[layout.flat( w )] = static_cast<long>( slot ); } );
  }
  return slices;
}

/// Reorders the gates slice by slice; the result is equivalent to `c`.
inline circuit flatten_slicing( circuit const& c, slicing const& slices )
{
  circuit out( c.layout() );
  out.set_variant( c.variant() );
  for ( auto const& s : slices )
    for ( auto gi : s )
      out.append( c.gates()[gi] );
  return out;
}

} // namespace qcla
