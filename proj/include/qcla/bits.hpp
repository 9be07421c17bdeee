#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace qcla
{

/// Number of ones in the binary expansion of n.
constexpr int popcount( std::uint64_t n ) noexcept
{
  return std::popcount( n );
}

/// floor(log2(n)) for n >= 1, -1 for n == 0.
constexpr int floor_log2( std::uint64_t n ) noexcept
{
  return n == 0 ? -1 : std::bit_width( n ) - 1;
}

/// ceil(log2(n)) for n >= 1.
constexpr int ceil_log2( std::uint64_t n ) noexcept
{
  return n <= 1 ? 0 : std::bit_width( n - 1 );
}

/*! \brief floor(log2(n / 3)) in exact integer arithmetic.
 *
 * Largest t with 3 * 2^t <= n. For n < 3 the real-valued logarithm is
 * negative; we return floor(log2(n/3)) there too (-1 for n = 2, -2 for n = 1,
 * and a large negative value for n = 0).
 */
constexpr int floor_log2_third( std::uint64_t n ) noexcept
{
  if ( n == 0 )
    return -1000;
  if ( n < 3 )
    return n == 2 ? -1 : -2;
  int t = 0;
  while ( ( std::uint64_t{ 3 } << ( t + 1 ) ) <= n )
    ++t;
  return t;
}

/// Highest C-round level of the carry network: largest t with 3 * 2^(t-1) <= n, 0 if none.
constexpr int carry_round_top( std::uint64_t n ) noexcept
{
  int t = 0;
  while ( ( std::uint64_t{ 3 } << t ) <= n )
    ++t;
  return t;
}

/// n - w(n) - floor(log2 n), clamped at zero: ancillae of the n-bit carry network.
constexpr std::uint64_t carry_network_ancillae( std::uint64_t n ) noexcept
{
  if ( n == 0 )
    return 0;
  const auto v = static_cast<std::int64_t>( n ) - popcount( n ) - floor_log2( n );
  return v > 0 ? static_cast<std::uint64_t>( v ) : 0;
}

} // namespace qcla
