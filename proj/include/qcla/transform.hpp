#pragma once

/*!
  \file transform.hpp
  \brief Circuit-to-circuit passes: inversion, constant propagation, lightcones.
*/

#include "circuit.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace qcla
{

/// Gate list reversed. Every gate in the set is self-inverse.
inline circuit invert( circuit const& c )
{
  c.validate();
  circuit out( c.layout() );
  out.set_variant( c.variant() );
  for ( auto it = c.gates().rbegin(); it != c.gates().rend(); ++it )
    out.append( *it );
  return out;
}

/// Keeps the gates whose indices are listed (ascending), preserving order.
inline circuit select_gates( circuit const& c, std::vector<std::size_t> const& indices )
{
  circuit out( c.layout() );
  for ( auto i : indices )
    out.append( c.gates().at( i ) );
  return out;
}

/*! \brief Gates that can influence the final value of `sink`.
 *
 * Backward sweep: a gate whose target is marked joins the cone and marks its
 * controls. Returns ascending gate indices.
 */
inline std::vector<std::size_t> lightcone( circuit const& c, wire sink )
{
  if ( !c.layout().contains( sink ) )
    throw validation_error( "lightcone sink outside the layout" );
  auto const& layout = c.layout();
  std::vector<bool> marked( layout.width(), false );
  marked[layout.flat( sink )] = true;

  std::vector<std::size_t> cone;
  for ( std::size_t i = c.gates().size(); i-- > 0; )
  {
    auto const& g = c.gates()[i];
    if ( !marked[layout.flat( g.target )] )
      continue;
    cone.push_back( i );
    for ( auto w : g.control_wires() )
      marked[layout.flat( w )] = true;
  }
  std::reverse( cone.begin(), cone.end() );
  return cone;
}

namespace detail
{

/// Per-wire knowledge tracked by constant propagation.
struct wire_fact
{
  enum class kind : std::uint8_t
  {
    unknown,
    constant,
    copy
  };
  kind k{ kind::unknown };
  bool value{ false };    // logical value when constant
  bool physical{ false }; // value actually held on the wire while constant/copy
  std::uint32_t source{ 0 }; // flat index of the copied wire when copy
};

} // namespace detail

/*! \brief Compile-time evaluation of wires with known values.
 *
 * Wires listed in `constants` start with the given value. Walking the gates
 * in order:
 *  - a control known 0 deletes the gate, a control known 1 is dropped
 *    (Toffoli becomes CNOT, CNOT becomes NOT);
 *  - a gate whose target stays compile-time-known only updates the tracked
 *    value and emits nothing;
 *  - a CNOT from an unknown wire into a wire known to be 0 records a copy and
 *    emits nothing: later reads use the source, the same CNOT again returns
 *    the wire to 0, and any other write to either wire first materializes the
 *    copy.
 *
 * The result agrees with `c` on every wire not listed in `constants`, for
 * every assignment of the remaining inputs. Listed wires may end with a
 * different physical value.
 */
inline circuit constant_propagate( circuit const& c, std::map<wire, bool> const& constants )
{
  using detail::wire_fact;
  c.validate();
  auto const& layout = c.layout();
  std::vector<wire_fact> facts( layout.width() );
  for ( auto const& [w, v] : constants )
  {
    if ( !layout.contains( w ) )
      throw validation_error( "constant wire outside the layout" );
    facts[layout.flat( w )] = { wire_fact::kind::constant, v, v, 0 };
  }

  circuit out( layout );
  out.set_variant( c.variant() );
  auto const at = [&]( std::uint32_t f ) { return layout.unflat( f ); };

  // bring the physical wire in line with its logical value and forget what we knew
  auto materialize = [&]( std::uint32_t f, phase tag ) {
    auto& fact = facts[f];
    if ( fact.k == wire_fact::kind::copy )
    {
      if ( facts[fact.source].k != wire_fact::kind::unknown )
        throw std::logic_error( "constant_propagate: copy source lost its value" );
      if ( fact.physical )
        out.append( gate::make_not( at( f ), tag ) );
      out.append( gate::make_cnot( at( fact.source ), at( f ), tag ) );
    }
    else if ( fact.k == wire_fact::kind::constant && fact.value != fact.physical )
    {
      out.append( gate::make_not( at( f ), tag ) );
    }
    fact = {};
  };

  auto release_copies_of = [&]( std::uint32_t f, phase tag ) {
    for ( std::uint32_t i = 0; i < facts.size(); ++i )
      if ( facts[i].k == wire_fact::kind::copy && facts[i].source == f )
        materialize( i, tag );
  };

  for ( auto const& g : c.gates() )
  {
    auto const t = layout.flat( g.target );
    if ( facts[t].k == wire_fact::kind::unknown )
      release_copies_of( t, g.tag );

    // resolve controls
    bool dead = false;
    std::vector<std::uint32_t> live;
    for ( auto cw : g.control_wires() )
    {
      auto f = layout.flat( cw );
      auto const& fact = facts[f];
      if ( fact.k == wire_fact::kind::constant )
      {
        if ( !fact.value )
          dead = true;
        continue;
      }
      if ( fact.k == wire_fact::kind::copy )
        f = fact.source;
      if ( std::find( live.begin(), live.end(), f ) == live.end() )
        live.push_back( f );
    }
    if ( dead )
      continue;

    auto& tf = facts[t];
    if ( tf.k == wire_fact::kind::constant )
    {
      if ( live.empty() )
      {
        tf.value = !tf.value;
        continue;
      }
      if ( live.size() == 1 && !tf.value && !tf.physical )
      {
        tf = { wire_fact::kind::copy, false, false, live[0] };
        continue;
      }
      materialize( t, g.tag );
    }
    else if ( tf.k == wire_fact::kind::copy )
    {
      if ( live.size() == 1 && live[0] == tf.source )
      {
        tf = { wire_fact::kind::constant, false, tf.physical, 0 };
        continue;
      }
      materialize( t, g.tag );
    }

    // controls that are copies of the target read the target's value before the write
    for ( auto& f : live )
    {
      if ( f == t )
        throw std::logic_error( "constant_propagate: control resolves to the target" );
    }

    switch ( live.size() )
    {
    case 0:
      out.append( gate::make_not( g.target, g.tag ) );
      break;
    case 1:
      out.append( gate::make_cnot( at( live[0] ), g.target, g.tag ) );
      break;
    default:
      out.append( gate::make_toffoli( at( live[0] ), at( live[1] ), g.target, g.tag ) );
      break;
    }
  }
  return out;
}

} // namespace qcla
