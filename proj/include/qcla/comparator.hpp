#pragma once

/*!
  \file comparator.hpp
  \brief Padded interval tree, comparator, and the unsimplified padded reference.
*/

#include "adders.hpp"
#include "bits.hpp"
#include "carry_network.hpp"
#include "circuit.hpp"
#include "transform.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace qcla
{

/*! \brief Interval tree over positions 0..N-1 padded to 2^k, k = ceil(log N).
 *
 * Padded positions carry p = 1, g = 0. P(t, m) is
 *  - absent (constant 1) when the block starts at or beyond N,
 *  - an alias of P(t-1, 2m) when only its lower half is real,
 *  - otherwise a fresh X wire written by one Toffoli.
 * Block 0 is built only when `need_zero` is set.
 */
class padded_tree
{
public:
  template<typename P0Fn, typename AllocFn>
  padded_tree( std::uint32_t positions, P0Fn&& p0, AllocFn&& alloc, bool need_zero )
      : n_( positions ), k_( ceil_log2( positions ) )
  {
    levels_.resize( k_ );
    levels_[0].resize( std::size_t{ 1 } << k_ );
    for ( std::uint32_t i = 0; i < n_; ++i )
      if ( i > 0 || need_zero )
        levels_[0][i] = p0( i );
    for ( int t = 1; t < k_; ++t )
    {
      levels_[t].resize( std::size_t{ 1 } << ( k_ - t ) );
      for ( std::uint64_t m = need_zero ? 0 : 1; m < levels_[t].size(); ++m )
      {
        auto const lo = m << t;
        auto const mid = lo + ( std::uint64_t{ 1 } << ( t - 1 ) );
        if ( lo >= n_ )
          continue;
        if ( mid >= n_ )
        {
          levels_[t][m] = levels_[t - 1][2 * m];
          continue;
        }
        wire const x = alloc();
        levels_[t][m] = x;
        gates_.push_back( gate::make_toffoli( *levels_[t - 1][2 * m], *levels_[t - 1][2 * m + 1], x, phase::p ) );
      }
    }
  }

  std::uint32_t positions() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  /// Wire holding p over block m of level t; nothing when the block is all padding.
  std::optional<wire> p( int t, std::uint64_t m ) const { return levels_.at( t ).at( m ); }

  /// Forward P gates in execution order.
  std::vector<gate> const& p_gates() const noexcept { return gates_; }

  /*! \brief G-round gates on the truncated tree.
   *
   * For t = 1..k and each block whose midpoint is a real position:
   * G[min(end, N)] ^= G[mid] P(t-1, 2m+1). `g(j)` maps positions to wires.
   */
  template<typename GFn>
  std::vector<gate> g_gates( GFn&& g ) const
  {
    std::vector<gate> out;
    for ( int t = 1; t <= k_; ++t )
    {
      for ( std::uint64_t m = 0; m < ( std::uint64_t{ 1 } << ( k_ - t ) ); ++m )
      {
        auto const lo = m << t;
        auto const mid = lo + ( std::uint64_t{ 1 } << ( t - 1 ) );
        if ( mid >= n_ )
          continue;
        auto const end = std::min<std::uint64_t>( lo + ( std::uint64_t{ 1 } << t ), n_ );
        out.push_back( gate::make_toffoli( g( mid ), p( t - 1, 2 * m + 1 ).value(), g( end ), phase::g ) );
      }
    }
    return out;
  }

private:
  std::uint32_t n_;
  int k_;
  std::vector<std::vector<std::optional<wire>>> levels_;
  std::vector<gate> gates_;
};

namespace detail
{

/// Gates of `gs` that can affect `sink`, in order.
inline std::vector<gate> gate_lightcone( std::vector<gate> const& gs, wire sink )
{
  std::vector<wire> marked{ sink };
  std::vector<gate> keep;
  for ( auto it = gs.rbegin(); it != gs.rend(); ++it )
  {
    if ( std::find( marked.begin(), marked.end(), it->target ) == marked.end() )
      continue;
    keep.push_back( *it );
    for ( auto w : it->control_wires() )
      if ( std::find( marked.begin(), marked.end(), w ) == marked.end() )
        marked.push_back( w );
  }
  std::reverse( keep.begin(), keep.end() );
  return keep;
}

} // namespace detail

/*! \brief Comparator: Z[0] <- [a >= b + y].
 *
 * Layout A[n] B[n] Z[1] C[n-1] X [Y]. Computes the carry-out of a' + b (+ y)
 * with a' the complement of a, then complements it.
 */
inline circuit gen_compare( std::uint32_t n, bool incoming_carry = false )
{
  detail::require_width( n, 2, "comparator" );
  std::uint32_t const off = incoming_carry ? 1 : 0;
  std::uint32_t const N = n + off;

  // register ids follow declaration order; X is sized once the tree is built
  std::uint32_t const ra = 0, rb = 1, rz = 2, rc = 3, rx = 4;
  std::uint32_t xs = 0;
  padded_tree const tree(
      N, [&]( std::uint32_t i ) { return wire{ rb, i - off }; }, [&] { return wire{ rx, xs++ }; }, false );

  register_layout layout;
  layout.add( "A", n, register_role::input_a );
  layout.add( "B", n, register_role::input_b );
  layout.add( "Z", 1, register_role::output );
  layout.add( "C", n - 1, register_role::ancilla );
  layout.add( "X", xs, register_role::ancilla );
  std::optional<wire> y;
  if ( incoming_carry )
    y = wire{ layout.add( "Y", 1, register_role::carry_in ), 0 };

  auto const G = [&]( std::uint64_t j ) -> wire {
    if ( j == N )
      return { rz, 0 };
    if ( incoming_carry && j == 1 )
      return *y;
    return { rc, static_cast<std::uint32_t>( j - 1 - off ) };
  };
  wire const sink = G( N );

  circuit c( layout );
  c.begin_phase( phase::negate );
  for ( std::uint32_t i = 0; i < n; ++i )
    c.add_not( { ra, i } );
  c.begin_phase( phase::init );
  for ( std::uint32_t i = 0; i < n; ++i )
    c.add_toffoli( { ra, i }, { rb, i }, G( i + 1 + off ) );
  for ( std::uint32_t i = 1 - off; i < n; ++i )
    c.add_cnot( { ra, i }, { rb, i } );

  c.begin_phase( phase::p );
  c.append_all( tree.p_gates() );

  auto const cone = detail::gate_lightcone( tree.g_gates( G ), sink );
  c.begin_phase( phase::g );
  c.append_all( cone );
  c.begin_phase( phase::g, "Gundo" );
  for ( auto it = cone.rbegin(); it != cone.rend(); ++it )
    if ( it->target != sink )
      c.append( *it );

  c.begin_phase( phase::p_inverse );
  for ( auto it = tree.p_gates().rbegin(); it != tree.p_gates().rend(); ++it )
  {
    auto g = *it;
    g.tag = phase::p_inverse;
    c.append( g );
  }

  c.begin_phase( phase::fixup );
  for ( std::uint32_t i = 1 - off; i < n; ++i )
    c.add_cnot( { ra, i }, { rb, i } );
  for ( std::uint32_t i = 0; i + 1 < n; ++i )
    c.add_toffoli( { ra, i }, { rb, i }, G( i + 1 + off ) );
  c.begin_phase( phase::negate );
  for ( std::uint32_t i = 0; i < n; ++i )
    c.add_not( { ra, i } );
  c.add_not( sink );
  c.set_current_phase( phase::none );
  return c;
}

/*! \brief Comparator built at the full padded width W = 2^ceil(log n).
 *
 * A and B have W bits, Z[0] is G[W], C holds G[1..W-1] and X the ordinary
 * W-bit network ancillae. No padding is resolved here: feeding it to
 * constant_propagate together with padded_constants() yields the compiled
 * circuit on the real wires.
 */
inline circuit gen_compare_padded_reference( std::uint32_t n )
{
  detail::require_width( n, 2, "comparator" );
  std::uint32_t const W = std::uint32_t{ 1 } << ceil_log2( n );
  ancilla_map const amap( W );

  register_layout layout;
  auto const ra = layout.add( "A", W, register_role::input_a );
  auto const rb = layout.add( "B", W, register_role::input_b );
  auto const rz = layout.add( "Z", 1, register_role::output );
  auto const rc = layout.add( "C", W - 1, register_role::ancilla );
  auto const rx = layout.add( "X", amap.size(), register_role::ancilla );

  carry_network_wires w;
  w.g.resize( W + 1 );
  w.p0.resize( W );
  for ( std::uint32_t j = 1; j < W; ++j )
    w.g[j] = { rc, j - 1 };
  w.g[W] = { rz, 0 };
  for ( std::uint32_t j = 1; j < W; ++j )
    w.p0[j] = { rb, j };
  w.x = register_wires( layout, rx );
  wire const sink = w.g[W];

  auto const phases = carry_network_phases( W, w );
  auto const& pg = phases[0].second;
  auto const& gg = phases[1].second;

  circuit c( layout );
  c.set_variant( "compare-reference n=" + std::to_string( n ) );
  c.begin_phase( phase::negate );
  for ( std::uint32_t i = 0; i < W; ++i )
    c.add_not( { ra, i } );
  c.begin_phase( phase::init );
  for ( std::uint32_t i = 0; i < W; ++i )
    c.add_toffoli( { ra, i }, { rb, i }, w.g[i + 1] );
  for ( std::uint32_t i = 1; i < W; ++i )
    c.add_cnot( { ra, i }, { rb, i } );
  c.begin_phase( phase::p );
  c.append_all( pg );
  auto const cone = detail::gate_lightcone( gg, sink );
  c.begin_phase( phase::g );
  c.append_all( cone );
  c.begin_phase( phase::g, "Gundo" );
  for ( auto it = cone.rbegin(); it != cone.rend(); ++it )
    if ( it->target != sink )
      c.append( *it );
  c.begin_phase( phase::p_inverse );
  for ( auto it = pg.rbegin(); it != pg.rend(); ++it )
  {
    auto g = *it;
    g.tag = phase::p_inverse;
    c.append( g );
  }
  c.begin_phase( phase::fixup );
  for ( std::uint32_t i = 1; i < W; ++i )
    c.add_cnot( { ra, i }, { rb, i } );
  for ( std::uint32_t i = 0; i + 1 < W; ++i )
    c.add_toffoli( { ra, i }, { rb, i }, w.g[i + 1] );
  c.begin_phase( phase::negate );
  for ( std::uint32_t i = 0; i < W; ++i )
    c.add_not( { ra, i } );
  c.add_not( sink );
  c.set_current_phase( phase::none );
  return c;
}

/// Known wires of the padded reference: padding bits of A and B, plus every C and X ancilla, are 0.
inline std::map<wire, bool> padded_constants( circuit const& reference, std::uint32_t n )
{
  auto const& layout = reference.layout();
  std::map<wire, bool> k;
  auto const W = layout[layout.id( "A" )].size;
  for ( std::uint32_t i = n; i < W; ++i )
  {
    k[layout.at( "A", i )] = false;
    k[layout.at( "B", i )] = false;
  }
  for ( auto name : { "C", "X" } )
    for ( auto w : register_wires( layout, layout.id( name ) ) )
      k[w] = false;
  return k;
}

} // namespace qcla
