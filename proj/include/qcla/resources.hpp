#pragma once

#include "circuit.hpp"
#include "schedule.hpp"

#include <cstdint>

namespace qcla
{

struct resource_report
{
  std::uint64_t toffoli_count{ 0 };
  std::uint64_t cnot_count{ 0 };
  std::uint64_t not_count{ 0 };
  std::uint64_t total_slices{ 0 };
  /// Slices containing at least one Toffoli.
  std::uint64_t toffoli_slices{ 0 };
  std::uint64_t ancilla_count{ 0 };

  std::uint64_t gate_count() const noexcept { return toffoli_count + cnot_count + not_count; }
  bool same_counts( resource_report const& o ) const noexcept
  {
    return toffoli_count == o.toffoli_count && cnot_count == o.cnot_count && not_count == o.not_count && ancilla_count == o.ancilla_count;
  }
  bool operator==( resource_report const& ) const = default;
};

inline resource_report measure_resources( circuit const& c, schedule_policy policy = schedule_policy::typed )
{
  resource_report r;
  for ( auto const& g : c.gates() )
  {
    switch ( g.kind )
    {
    case gate_kind::toffoli:
      ++r.toffoli_count;
      break;
    case gate_kind::cnot:
      ++r.cnot_count;
      break;
    case gate_kind::not_gate:
      ++r.not_count;
      break;
    }
  }
  auto const slices = schedule_asap( c, policy );
  r.total_slices = slices.size();
  for ( auto const& s : slices )
  {
    for ( auto gi : s )
    {
      if ( c.gates()[gi].kind == gate_kind::toffoli )
      {
        ++r.toffoli_slices;
        break;
      }
    }
  }
  r.ancilla_count = c.layout().ancilla_count();
  return r;
}

} // namespace qcla
