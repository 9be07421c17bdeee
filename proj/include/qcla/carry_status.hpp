#pragma once

/*!
  \file carry_status.hpp
  \brief Three-valued carry status (kill / propagate / generate) and its merge.
*/

#include <array>
#include <cstdint>
#include <utility>

namespace qcla
{

enum class carry_status : std::uint8_t
{
  kill,
  propagate,
  generate
};

inline constexpr std::array<carry_status, 3> all_carry_statuses{ carry_status::kill, carry_status::propagate,
                                                                 carry_status::generate };

/// Status of [i, j) from [i, k) (`lower`) and [k, j) (`upper`).
constexpr carry_status merge( carry_status lower, carry_status upper ) noexcept
{
  return upper == carry_status::propagate ? lower : upper;
}

/// Status of a single bit position.
constexpr carry_status bit_status( bool a, bool b ) noexcept
{
  if ( a && b )
    return carry_status::generate;
  return a != b ? carry_status::propagate : carry_status::kill;
}

/// Two-bit encoding (p, g).
constexpr std::pair<bool, bool> encode( carry_status s ) noexcept
{
  return { s == carry_status::propagate, s == carry_status::generate };
}

constexpr carry_status decode( bool p, bool g ) noexcept
{
  return g ? carry_status::generate : p ? carry_status::propagate : carry_status::kill;
}

/// Status of the interval [i, j) of the operands, folded bit by bit.
constexpr carry_status interval_status( std::uint64_t a, std::uint64_t b, unsigned i, unsigned j ) noexcept
{
  auto s = carry_status::propagate;
  for ( unsigned q = i; q < j; ++q )
    s = merge( s, bit_status( ( a >> q ) & 1u, ( b >> q ) & 1u ) );
  return s;
}

} // namespace qcla
