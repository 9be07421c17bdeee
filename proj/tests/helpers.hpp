#pragma once

#include <qcla/qcla.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace qcla::test
{

/// Runs `c` on every assignment of the wires in `free` (all other wires from `base`), 64 at a time.
/// `check` receives the initial and final lanes plus the number of live lanes.
inline void for_all_assignments( circuit const& c, std::vector<std::uint32_t> const& free, std::vector<std::uint64_t> const& base,
                                 std::function<void( std::vector<std::uint64_t> const&, std::vector<std::uint64_t> const&, unsigned )> const& check )
{
  compiled_circuit const cc( c );
  std::uint64_t const total = std::uint64_t{ 1 } << free.size();
  for ( std::uint64_t start = 0; start < total; start += 64 )
  {
    unsigned const live = static_cast<unsigned>( std::min<std::uint64_t>( 64, total - start ) );
    auto lanes = base;
    for ( unsigned k = 0; k < live; ++k )
      for ( std::size_t f = 0; f < free.size(); ++f )
        if ( ( ( start + k ) >> f ) & 1u )
          lanes[free[f]] |= std::uint64_t{ 1 } << k;
    auto const before = lanes;
    cc.apply_lanes( lanes );
    check( before, lanes, live );
  }
}

inline std::vector<std::uint32_t> all_wires( register_layout const& layout )
{
  std::vector<std::uint32_t> w( layout.width() );
  for ( std::uint32_t i = 0; i < w.size(); ++i )
    w[i] = i;
  return w;
}

inline std::uint64_t lane_mask( unsigned live )
{
  return live == 64 ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << live ) - 1;
}

} // namespace qcla::test
