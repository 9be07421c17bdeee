#pragma once

/*!
  \file carry_network.hpp
  \brief Logarithmic-depth carry-status network: P, G, C and P-inverse rounds.

  Positions are 1-based. On entry G[i] = g[i-1, i] for 1 <= i <= n and
  P0[i] = p[i, i+1] for 1 <= i < n. The forward network leaves G[i] = c_i and
  returns P0 and the X ancillae to their entry values.
*/

#include "bits.hpp"
#include "circuit.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qcla
{

enum class round_kind : std::uint8_t
{
  p,
  g,
  c,
  p_inverse
};

enum class network_direction : std::uint8_t
{
  forward,
  inverse
};

struct carry_network_spec
{
  std::uint32_t n{ 1 };
  network_direction direction{ network_direction::forward };
};

/*! \brief Placement of the P_t[m] values (t >= 1) in the X register.
 *
 * Levels are contiguous, t = 1 first, blocks in increasing m.
 */
class ancilla_map
{
public:
  explicit ancilla_map( std::uint32_t n ) : n_( n )
  {
    if ( n < 1 )
      throw validation_error( "carry network width must be >= 1" );
    std::uint32_t next = 0;
    for ( int t = 1; t < floor_log2( n ); ++t )
    {
      level_offset_.push_back( next );
      auto const blocks = n >> t;
      next += blocks > 1 ? blocks - 1 : 0;
    }
    size_ = next;
  }

  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return size_; }

  /// X index of P_t[m], or nothing when (t, m) is not stored.
  std::optional<std::uint32_t> slot( int t, std::uint32_t m ) const noexcept
  {
    if ( t < 1 || t > static_cast<int>( level_offset_.size() ) || m < 1 || m >= ( n_ >> t ) )
      return std::nullopt;
    return level_offset_[t - 1] + ( m - 1 );
  }

private:
  std::uint32_t n_;
  std::uint32_t size_{ 0 };
  std::vector<std::uint32_t> level_offset_;
};

/// Physical wires the network acts on. `g` and `p0` are indexed by position (entry 0 unused).
struct carry_network_wires
{
  std::vector<wire> g;  // size n + 1
  std::vector<wire> p0; // size n
  std::vector<wire> x;  // at least ancilla_map(n).size()
};

namespace detail
{

inline wire p_wire( carry_network_wires const& w, ancilla_map const& amap, int t, std::uint32_t m )
{
  if ( t == 0 )
    return w.p0.at( m );
  return w.x.at( *amap.slot( t, m ) );
}

inline void check_wires( carry_network_wires const& w, ancilla_map const& amap )
{
  auto const n = amap.n();
  if ( w.g.size() != n + 1 || w.p0.size() != n || w.x.size() < amap.size() )
    throw validation_error( "carry network wire vectors do not match width " + std::to_string( n ) );
}

} // namespace detail

/// Valid levels per round kind: P and Pinv 1..floor(log n)-1, G 1..floor(log n), C 1..carry_round_top(n).
inline int round_level_max( round_kind kind, std::uint32_t n ) noexcept
{
  switch ( kind )
  {
  case round_kind::p:
  case round_kind::p_inverse:
    return floor_log2( n ) - 1;
  case round_kind::g:
    return floor_log2( n );
  case round_kind::c:
    return carry_round_top( n );
  }
  return 0;
}

/*! \brief Toffolis of one round at level t. Out-of-range t yields an empty list.
 *
 * P:  P_t[m] ^= P_{t-1}[2m] P_{t-1}[2m+1],         1 <= m < floor(n/2^t)
 * G:  G[2^t m + 2^t] ^= G[2^t m + 2^(t-1)] P_{t-1}[2m+1],  0 <= m < floor(n/2^t)
 * C:  G[2^t m + 2^(t-1)] ^= G[2^t m] P_{t-1}[2m],  1 <= m <= floor((n - 2^(t-1))/2^t)
 * Pinv: the P round's gates (the round is self-inverse).
 */
inline std::vector<gate> enumerate_round_gates( round_kind kind, int t, std::uint32_t n, ancilla_map const& amap,
                                                carry_network_wires const& w )
{
  if ( n < 1 )
    throw validation_error( "carry network width must be >= 1" );
  if ( amap.n() != n )
    throw validation_error( "ancilla map width mismatch" );
  detail::check_wires( w, amap );

  std::vector<gate> out;
  if ( t < 1 || t > round_level_max( kind, n ) )
    return out;

  auto const P = [&]( int level, std::uint32_t m ) { return detail::p_wire( w, amap, level, m ); };
  std::uint64_t const step = std::uint64_t{ 1 } << t;
  std::uint64_t const half = step >> 1;

  switch ( kind )
  {
  case round_kind::p:
  case round_kind::p_inverse:
  {
    auto const tag = kind == round_kind::p ? phase::p : phase::p_inverse;
    for ( std::uint32_t m = 1; m < ( n >> t ); ++m )
      out.push_back( gate::make_toffoli( P( t - 1, 2 * m ), P( t - 1, 2 * m + 1 ), P( t, m ), tag ) );
    break;
  }
  case round_kind::g:
    for ( std::uint32_t m = 0; m < ( n >> t ); ++m )
      out.push_back( gate::make_toffoli( w.g[step * m + half], P( t - 1, 2 * m + 1 ), w.g[step * m + step], phase::g ) );
    break;
  case round_kind::c:
    for ( std::uint64_t m = 1; m <= ( n - half ) / step; ++m )
      out.push_back( gate::make_toffoli( w.g[step * m], P( t - 1, static_cast<std::uint32_t>( 2 * m ) ), w.g[step * m + half], phase::c ) );
    break;
  }
  return out;
}

/// All four phases in execution order, forward direction.
inline std::vector<std::pair<round_kind, std::vector<gate>>> carry_network_phases( std::uint32_t n, carry_network_wires const& w )
{
  ancilla_map const amap( n );
  std::vector<std::pair<round_kind, std::vector<gate>>> phases;
  auto collect = [&]( round_kind kind, int from, int to, int dir ) {
    std::vector<gate> gs;
    for ( int t = from; dir > 0 ? t <= to : t >= to; t += dir )
    {
      auto r = enumerate_round_gates( kind, t, n, amap, w );
      gs.insert( gs.end(), r.begin(), r.end() );
    }
    phases.emplace_back( kind, std::move( gs ) );
  };
  collect( round_kind::p, 1, round_level_max( round_kind::p, n ), 1 );
  collect( round_kind::g, 1, round_level_max( round_kind::g, n ), 1 );
  collect( round_kind::c, round_level_max( round_kind::c, n ), 1, -1 );
  collect( round_kind::p_inverse, round_level_max( round_kind::p_inverse, n ), 1, -1 );
  return phases;
}

/*! \brief Appends the n-bit network to `c`, with a barrier opening each phase.
 *
 * The inverse direction is the exact gate reversal; its barriers are named
 * after the phase whose gates they precede (P, C, G, Pinv). The circuit's
 * current phase tag is left at `phase::none`.
 */
inline void append_carry_network( circuit& c, std::uint32_t n, carry_network_wires const& w,
                                  network_direction direction = network_direction::forward )
{
  auto phases = carry_network_phases( n, w );
  auto const to_phase = []( round_kind k ) {
    switch ( k )
    {
    case round_kind::p:
      return phase::p;
    case round_kind::g:
      return phase::g;
    case round_kind::c:
      return phase::c;
    case round_kind::p_inverse:
      return phase::p_inverse;
    }
    return phase::none;
  };

  if ( direction == network_direction::forward )
  {
    for ( auto const& [kind, gs] : phases )
    {
      c.begin_phase( to_phase( kind ) );
      c.append_all( gs );
    }
  }
  else
  {
    // reversed Pinv is the P phase in order, reversed P is Pinv
    static constexpr phase renamed[] = { phase::p_inverse, phase::g, phase::c, phase::p };
    for ( auto it = phases.rbegin(); it != phases.rend(); ++it )
    {
      auto const ph = renamed[static_cast<int>( it->first )];
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

/*! \brief Standalone network circuit.
 *
 * Registers: G[0..n] (output role, index = position, G[0] unused),
 * P[0..n-1] (input-b role, P[i] = P0[i], P[0] unused), X (ancilla).
 */
inline circuit build_carry_network( carry_network_spec const& spec )
{
  if ( spec.n < 1 )
    throw validation_error( "carry network width must be >= 1" );
  auto const n = spec.n;
  ancilla_map const amap( n );
  register_layout layout;
  auto const rg = layout.add( "G", n + 1, register_role::output );
  auto const rp = layout.add( "P", n, register_role::input_b );
  auto const rx = layout.add( "X", amap.size(), register_role::ancilla );

  carry_network_wires w{ register_wires( layout, rg ), register_wires( layout, rp ), register_wires( layout, rx ) };
  circuit c( layout );
  c.set_variant( "carry-network n=" + std::to_string( n ) );
  append_carry_network( c, n, w, spec.direction );
  return c;
}

/// Wires of the standalone layout produced by build_carry_network.
inline carry_network_wires standalone_network_wires( register_layout const& layout )
{
  return { register_wires( layout, layout.id( "G" ) ), register_wires( layout, layout.id( "P" ) ),
           register_wires( layout, layout.id( "X" ) ) };
}

} // namespace qcla
