#pragma once

/*!
  \file adders.hpp
  \brief Out-of-place and in-place carry-lookahead adders, their mod 2^n and
         incoming-carry variants, and subtractors.

  Register layouts (all registers always present, possibly empty):

  | variant      | registers                                             |
  |--------------|-------------------------------------------------------|
  | out-of-place | A[n] B[n] Z[n+1] X [Y]   (Z[n] for mod 2^n)           |
  | in-place     | A[n] B[n] Z[1] C[n-1] X [Y]   (Z[0] for mod 2^n)      |

  In-place adders write the low sum bits into B and the high bit into Z;
  C holds the intermediate carries and is returned to zero.
*/

#include "bits.hpp"
#include "carry_network.hpp"
#include "circuit.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qcla
{

namespace detail
{

struct adder_registers
{
  std::vector<wire> a, b, z, c, x;
  std::optional<wire> y;
};

inline adder_registers collect_registers( register_layout const& layout )
{
  adder_registers r;
  r.a = register_wires( layout, layout.id( "A" ) );
  r.b = register_wires( layout, layout.id( "B" ) );
  r.z = register_wires( layout, layout.id( "Z" ) );
  if ( auto c = layout.find( "C" ) )
    r.c = register_wires( layout, *c );
  r.x = register_wires( layout, layout.id( "X" ) );
  if ( auto y = layout.find( "Y" ) )
    r.y = wire{ *y, 0 };
  return r;
}

inline void require_width( std::uint32_t n, std::uint32_t min, char const* what )
{
  if ( n < min )
    throw validation_error( std::string( what ) + " requires n >= " + std::to_string( min ) + ", got " + std::to_string( n ) );
}

/// Network over positions 1..m, G[j] = g(j), P0[j] = p(j).
template<typename GFn, typename PFn>
void network( circuit& c, std::uint32_t m, GFn&& g, PFn&& p, std::vector<wire> const& x, network_direction dir )
{
  if ( m < 1 )
    return;
  carry_network_wires w;
  w.g.resize( m + 1 );
  w.p0.resize( m );
  for ( std::uint32_t j = 1; j <= m; ++j )
    w.g[j] = g( j );
  for ( std::uint32_t j = 1; j < m; ++j )
    w.p0[j] = p( j );
  w.x = x;
  append_carry_network( c, m, w, dir );
}

} // namespace detail

/*! \brief Out-of-place adder Z = a + b (+ y).
 *
 * With `mod2n` the high bit is dropped: an (n-1)-bit core plus two CNOTs
 * produce Z[n-1], and Z has n bits.
 */
inline circuit gen_add_oop( std::uint32_t n, bool incoming_carry = false, bool mod2n = false )
{
  detail::require_width( n, 1, "out-of-place adder" );
  auto const core = mod2n ? n - 1 : n;     // real bit positions inside the carry network
  auto const width = incoming_carry ? core + 1 : core;
  auto const out_bits = mod2n ? n : n + 1;

  register_layout layout;
  layout.add( "A", n, register_role::input_a );
  layout.add( "B", n, register_role::input_b );
  layout.add( "Z", out_bits, register_role::output );
  layout.add( "X", width >= 1 ? static_cast<std::uint32_t>( carry_network_ancillae( width ) ) : 0, register_role::ancilla );
  if ( incoming_carry )
    layout.add( "Y", 1, register_role::carry_in );
  auto const r = detail::collect_registers( layout );
  circuit c( layout );

  // bit i sits at network position i + off
  std::uint32_t const off = incoming_carry ? 1 : 0;
  auto const G = [&]( std::uint32_t j ) { return r.z[j - off]; };

  c.begin_phase( phase::init );
  if ( incoming_carry )
    c.add_cnot( *r.y, r.z[0] );
  for ( std::uint32_t i = 0; i < core; ++i )
    c.add_toffoli( r.a[i], r.b[i], r.z[i + 1] );
  for ( std::uint32_t i = 1 - off; i < core; ++i )
    c.add_cnot( r.a[i], r.b[i] );

  detail::network( c, width, G, [&]( std::uint32_t j ) { return r.b[j - off]; }, r.x, network_direction::forward );

  c.begin_phase( phase::sum );
  for ( std::uint32_t i = 0; i < core; ++i )
    c.add_cnot( r.b[i], r.z[i] );
  c.begin_phase( phase::fixup );
  if ( !incoming_carry && core >= 1 )
    c.add_cnot( r.a[0], r.z[0] );
  for ( std::uint32_t i = 1 - off; i < core; ++i )
    c.add_cnot( r.a[i], r.b[i] );
  if ( mod2n )
  {
    c.add_cnot( r.a[n - 1], r.z[n - 1] );
    c.add_cnot( r.b[n - 1], r.z[n - 1] );
  }
  c.set_current_phase( phase::none );
  return c;
}

/*! \brief In-place adder: B <- low n bits of a + b (+ y), Z[0] <- high bit.
 *
 * With `mod2n` no high bit is computed and Z is empty.
 */
inline circuit gen_add_ip( std::uint32_t n, bool incoming_carry = false, bool mod2n = false )
{
  detail::require_width( n, 1, "in-place adder" );
  // forward network width and the reversed network width
  std::uint32_t const off = incoming_carry ? 1 : 0;
  std::uint32_t const fwd = ( mod2n ? n - 1 : n ) + off;
  std::uint32_t const rev = n - 1 + off;

  register_layout layout;
  layout.add( "A", n, register_role::input_a );
  layout.add( "B", n, register_role::input_b );
  layout.add( "Z", mod2n ? 0 : 1, register_role::output );
  layout.add( "C", n - 1, register_role::ancilla );
  auto const anc = [&]( std::uint32_t m ) { return m >= 1 ? carry_network_ancillae( m ) : 0; };
  layout.add( "X", static_cast<std::uint32_t>( std::max( anc( fwd ), anc( rev ) ) ), register_role::ancilla );
  if ( incoming_carry )
    layout.add( "Y", 1, register_role::carry_in );
  auto const r = detail::collect_registers( layout );
  circuit c( layout );

  // G[j] for network position j: Y at position 1 when present, then C, then Z
  auto const G = [&]( std::uint32_t j ) -> wire {
    if ( incoming_carry && j == 1 )
      return *r.y;
    auto const k = j - 1 - off; // index into C
    return k < n - 1 ? r.c[k] : r.z.at( 0 );
  };
  auto const P = [&]( std::uint32_t j ) { return r.b[j - off]; };

  c.begin_phase( phase::init );
  for ( std::uint32_t i = 0; i + off < fwd; ++i )
    c.add_toffoli( r.a[i], r.b[i], G( i + 1 + off ) );
  for ( std::uint32_t i = 0; i < n; ++i )
    c.add_cnot( r.a[i], r.b[i] );

  detail::network( c, fwd, G, P, r.x, network_direction::forward );

  c.begin_phase( phase::sum );
  for ( std::uint32_t i = 1 - off; i < n; ++i )
    c.add_cnot( G( i + off ), r.b[i] );
  c.begin_phase( phase::negate );
  for ( std::uint32_t i = 0; i + 1 < n; ++i )
    c.add_not( r.b[i] );
  c.begin_phase( phase::fixup );
  for ( std::uint32_t i = 1 - off; i + 1 < n; ++i )
    c.add_cnot( r.a[i], r.b[i] );

  detail::network( c, rev, G, P, r.x, network_direction::inverse );

  c.begin_phase( phase::fixup );
  for ( std::uint32_t i = 1 - off; i + 1 < n; ++i )
    c.add_cnot( r.a[i], r.b[i] );
  for ( std::uint32_t i = 0; i + 1 < n; ++i )
    c.add_toffoli( r.a[i], r.b[i], G( i + 1 + off ) );
  c.begin_phase( phase::negate );
  for ( std::uint32_t i = 0; i + 1 < n; ++i )
    c.add_not( r.b[i] );
  c.set_current_phase( phase::none );
  return c;
}

/*! \brief Subtractor: complement A, add, complement A and the output bits.
 *
 * The (n+1)-bit result (Z out-of-place; B then Z[0] in place) is 2^n + a - b.
 */
inline circuit gen_sub( std::uint32_t n, bool in_place = false )
{
  auto const add = in_place ? gen_add_ip( n ) : gen_add_oop( n );
  auto const& layout = add.layout();
  auto const r = detail::collect_registers( layout );
  circuit c( layout );

  c.begin_phase( phase::negate, "negate_in" );
  for ( auto w : r.a )
    c.add_not( w );
  std::size_t next = 0;
  auto const& bs = add.barriers();
  for ( std::size_t i = 0; i < add.gates().size(); ++i )
  {
    while ( next < bs.size() && bs[next].position == i )
      c.add_barrier( bs[next++].name );
    c.append( add.gates()[i] );
  }
  c.begin_phase( phase::negate, "negate_out" );
  for ( auto w : r.a )
    c.add_not( w );
  if ( in_place )
    for ( auto w : r.b )
      c.add_not( w );
  for ( auto w : r.z )
    c.add_not( w );
  c.set_current_phase( phase::none );
  return c;
}

} // namespace qcla
