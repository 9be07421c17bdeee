#pragma once

/*!
  \file mersenne.hpp
  \brief Addition modulo 2^n - 1 with end-around carry.

  Carry positions are cyclic: G[j] lives on wire j mod n, so G[n] and G[0]
  coincide and the wrap-around carry c_0 = g[0, n] lands on bit 0.
*/

#include "adders.hpp"
#include "comparator.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace qcla
{

/// Which bit pattern a zero sum is produced as.
enum class zero_rep : std::uint8_t
{
  ones,  // 1...1
  zeros  // 0...0
};

inline std::string_view to_string( zero_rep r ) noexcept { return r == zero_rep::ones ? "ones" : "zeros"; }

namespace detail
{

/// Network gates over a cyclic carry register. `g(j)` must map j and j + n alike.
template<typename GFn>
std::vector<std::pair<phase, std::vector<gate>>> mersenne_network( padded_tree const& tree, GFn&& g, zero_rep rep )
{
  auto const n = tree.positions();
  auto const k = tree.k();
  std::vector<std::pair<phase, std::vector<gate>>> out;
  out.emplace_back( phase::p, tree.p_gates() );

  auto gg = tree.g_gates( g );
  if ( rep == zero_rep::zeros )
  {
    // XOR p[0, n] into c_0 alongside the last G gate that writes G[n]
    std::size_t last = 0;
    for ( std::size_t i = 0; i < gg.size(); ++i )
      if ( gg[i].target == g( n ) )
        last = i;
    gg.insert( gg.begin() + static_cast<std::ptrdiff_t>( last ),
               gate::make_toffoli( tree.p( k - 1, 0 ).value(), tree.p( k - 1, 1 ).value(), g( n ), phase::g ) );
  }
  out.emplace_back( phase::g, std::move( gg ) );

  std::vector<gate> cg;
  for ( int t = k; t >= 1; --t )
  {
    for ( std::uint64_t m = 0; m < ( std::uint64_t{ 1 } << ( k - t ) ); ++m )
    {
      auto const j = ( m << t ) + ( std::uint64_t{ 1 } << ( t - 1 ) );
      if ( j >= n )
        continue;
      auto const from = m > 0 ? g( m << t ) : g( n );
      cg.push_back( gate::make_toffoli( from, tree.p( t - 1, 2 * m ).value(), g( j ), phase::c ) );
    }
  }
  out.emplace_back( phase::c, std::move( cg ) );

  std::vector<gate> pinv( tree.p_gates().rbegin(), tree.p_gates().rend() );
  for ( auto& x : pinv )
    x.tag = phase::p_inverse;
  out.emplace_back( phase::p_inverse, std::move( pinv ) );
  return out;
}

inline void append_phases( circuit& c, std::vector<std::pair<phase, std::vector<gate>>> const& phases, bool reversed )
{
  if ( !reversed )
  {
    for ( auto const& [ph, gs] : phases )
    {
      c.begin_phase( ph );
      c.append_all( gs );
    }
  }
  else
  {
    for ( auto it = phases.rbegin(); it != phases.rend(); ++it )
    {
      auto const ph = it->first == phase::p_inverse ? phase::p : it->first == phase::p ? phase::p_inverse : it->first;
      c.begin_phase( ph );
      for ( auto g = it->second.rbegin(); g != it->second.rend(); ++g )
      {
        auto copy = *g;
        copy.tag = ph;
        c.append( copy );
      }
    }
  }
  c.set_current_phase( phase::none );
}

} // namespace detail

/*! \brief Adder modulo 2^n - 1.
 *
 * Out-of-place: A[n] B[n] Z[n] X, result in Z.
 * In-place: A[n] B[n] Z[0] C[n] X, result in B; the forward pass uses `rep`
 * and the undo pass the other representation. In place, b must not be the
 * zero pattern the undo pass cannot produce: b != 1...1 for zeros, b != 0
 * for ones.
 */
inline circuit gen_add_mersenne( std::uint32_t n, bool in_place, zero_rep rep )
{
  detail::require_width( n, 2, "mod 2^n - 1 adder" );
  std::uint32_t const ra = 0, rb = 1, rz = 2, rc = 3, rx = in_place ? 4 : 3;
  std::uint32_t const rcarry = in_place ? rc : rz;

  std::uint32_t xs = 0;
  padded_tree const tree(
      n, [&]( std::uint32_t i ) { return wire{ rb, i }; }, [&] { return wire{ rx, xs++ }; }, true );

  register_layout layout;
  layout.add( "A", n, register_role::input_a );
  layout.add( "B", n, register_role::input_b );
  layout.add( "Z", in_place ? 0 : n, register_role::output );
  if ( in_place )
    layout.add( "C", n, register_role::ancilla );
  layout.add( "X", xs, register_role::ancilla );

  auto const G = [&]( std::uint64_t j ) { return wire{ rcarry, static_cast<std::uint32_t>( j % n ) }; };
  circuit c( layout );

  auto init = [&] {
    for ( std::uint32_t i = 0; i < n; ++i )
      c.add_toffoli( { ra, i }, { rb, i }, G( i + 1 ) );
  };
  auto a_into_b = [&] {
    for ( std::uint32_t i = 0; i < n; ++i )
      c.add_cnot( { ra, i }, { rb, i } );
  };

  c.begin_phase( phase::init );
  init();
  a_into_b();
  detail::append_phases( c, detail::mersenne_network( tree, G, rep ), false );

  if ( !in_place )
  {
    c.begin_phase( phase::sum );
    for ( std::uint32_t i = 0; i < n; ++i )
      c.add_cnot( { rb, i }, G( i ) );
    c.begin_phase( phase::fixup );
    a_into_b();
    c.set_current_phase( phase::none );
    return c;
  }

  auto const other = rep == zero_rep::zeros ? zero_rep::ones : zero_rep::zeros;
  c.begin_phase( phase::sum );
  for ( std::uint32_t i = 0; i < n; ++i )
    c.add_cnot( G( i ), { rb, i } );
  c.begin_phase( phase::negate );
  for ( std::uint32_t i = 0; i < n; ++i )
    c.add_not( { rb, i } );
  c.begin_phase( phase::fixup );
  a_into_b();
  detail::append_phases( c, detail::mersenne_network( tree, G, other ), true );
  c.begin_phase( phase::fixup );
  a_into_b();
  init();
  c.begin_phase( phase::negate );
  for ( std::uint32_t i = 0; i < n; ++i )
    c.add_not( { rb, i } );
  c.set_current_phase( phase::none );
  return c;
}

} // namespace qcla
