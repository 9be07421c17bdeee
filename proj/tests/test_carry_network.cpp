#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace qcla;

namespace
{

std::vector<wire> targets( std::vector<gate> const& gs )
{
  std::vector<wire> t;
  for ( auto const& g : gs )
    t.push_back( g.target );
  return t;
}

/// Runs `c` (standalone layout) on 64 operand pairs at a time; `check(a, b, lanes, lane)`.
template<typename Check>
void for_all_operands( circuit const& c, std::uint32_t n, Check&& check )
{
  auto const& l = c.layout();
  auto const rg = l.id( "G" ), rp = l.id( "P" );
  compiled_circuit const cc( c );
  std::uint64_t const total = std::uint64_t{ 1 } << ( 2 * n );
  for ( std::uint64_t start = 0; start < total; start += 64 )
  {
    std::vector<std::uint64_t> lanes( l.width(), 0 );
    unsigned const live = static_cast<unsigned>( std::min<std::uint64_t>( 64, total - start ) );
    for ( unsigned k = 0; k < live; ++k )
    {
      auto const v = start + k;
      auto const a = v >> n, b = v & ( ( std::uint64_t{ 1 } << n ) - 1 );
      for ( std::uint32_t i = 0; i < n; ++i )
      {
        bool const ai = ( a >> i ) & 1u, bi = ( b >> i ) & 1u;
        if ( ai && bi )
          lanes[l.flat( { rg, i + 1 } )] |= std::uint64_t{ 1 } << k;
        if ( i >= 1 && ai != bi )
          lanes[l.flat( { rp, i } )] |= std::uint64_t{ 1 } << k;
      }
    }
    auto const before = lanes;
    cc.apply_lanes( lanes );
    for ( unsigned k = 0; k < live; ++k )
    {
      auto const v = start + k;
      check( v >> n, v & ( ( std::uint64_t{ 1 } << n ) - 1 ), before, lanes, k );
    }
  }
}

bool lane( std::vector<std::uint64_t> const& lanes, std::uint32_t pos, unsigned k )
{
  return ( lanes[pos] >> k ) & 1u;
}

} // namespace

TEST( RoundGates, Examples )
{
  ancilla_map const a4( 4 );
  auto const net4 = build_carry_network( { 4 } );
  auto const w4 = standalone_network_wires( net4.layout() );
  auto const g = enumerate_round_gates( round_kind::g, 1, 4, a4, w4 );
  ASSERT_EQ( g.size(), 2u );
  EXPECT_TRUE( g[0].same_action( gate::make_toffoli( w4.g[1], w4.p0[1], w4.g[2] ) ) );
  EXPECT_TRUE( g[1].same_action( gate::make_toffoli( w4.g[3], w4.p0[3], w4.g[4] ) ) );

  ancilla_map const a2( 2 );
  auto const w2 = standalone_network_wires( build_carry_network( { 2 } ).layout() );
  EXPECT_TRUE( enumerate_round_gates( round_kind::p, 1, 2, a2, w2 ).empty() );

  ancilla_map const a10( 10 );
  auto const w10 = standalone_network_wires( build_carry_network( { 10 } ).layout() );
  auto const c = enumerate_round_gates( round_kind::c, 1, 10, a10, w10 );
  EXPECT_EQ( c.size(), 4u );
  EXPECT_EQ( targets( c ), ( std::vector<wire>{ w10.g[3], w10.g[5], w10.g[7], w10.g[9] } ) );
}

TEST( RoundGates, OutOfRangeLevelsAreEmpty )
{
  ancilla_map const a( 10 );
  auto const w = standalone_network_wires( build_carry_network( { 10 } ).layout() );
  for ( auto kind : { round_kind::p, round_kind::g, round_kind::c, round_kind::p_inverse } )
  {
    EXPECT_TRUE( enumerate_round_gates( kind, 0, 10, a, w ).empty() );
    EXPECT_TRUE( enumerate_round_gates( kind, round_level_max( kind, 10 ) + 1, 10, a, w ).empty() );
    EXPECT_FALSE( enumerate_round_gates( kind, 1, 10, a, w ).empty() );
  }
  EXPECT_THROW( ancilla_map( 0 ), validation_error );
  EXPECT_THROW( build_carry_network( { 0 } ), validation_error );
}

TEST( AncillaMap, InjectiveAndSized )
{
  for ( std::uint32_t n = 1; n <= 300; ++n )
  {
    ancilla_map const a( n );
    EXPECT_EQ( a.size(), carry_network_ancillae( n ) ) << n;
    std::vector<bool> used( a.size(), false );
    for ( int t = 1; t < floor_log2( n ); ++t )
      for ( std::uint32_t m = 1; m < ( n >> t ); ++m )
      {
        auto const s = a.slot( t, m );
        ASSERT_TRUE( s.has_value() );
        ASSERT_LT( *s, a.size() );
        EXPECT_FALSE( used[*s] );
        used[*s] = true;
      }
  }
}

TEST( CarryNetwork, SmallExamples )
{
  EXPECT_EQ( build_carry_network( { 1 } ).size(), 0u );
  auto const two = build_carry_network( { 2 } );
  ASSERT_EQ( two.size(), 1u );
  auto const w = standalone_network_wires( two.layout() );
  EXPECT_TRUE( two.gates()[0].same_action( gate::make_toffoli( w.g[1], w.p0[1], w.g[2] ) ) );
  auto const r = measure_resources( build_carry_network( { 10 } ) );
  EXPECT_EQ( r.toffoli_count, 24u );
  EXPECT_EQ( r.toffoli_slices, 7u );
  EXPECT_EQ( r.ancilla_count, 5u );
}

TEST( CarryNetwork, InverseIsExactReversal )
{
  for ( std::uint32_t n = 1; n <= 40; ++n )
  {
    auto const f = build_carry_network( { n } );
    auto const i = build_carry_network( { n, network_direction::inverse } );
    ASSERT_EQ( f.size(), i.size() );
    for ( std::size_t k = 0; k < f.size(); ++k )
      ASSERT_TRUE( f.gates()[k].same_action( i.gates()[f.size() - 1 - k] ) );
  }
}

TEST( CarryNetwork, FinalCarriesExhaustive )
{
  for ( std::uint32_t n = 1; n <= 10; ++n )
  {
    auto const c = build_carry_network( { n } );
    auto const& l = c.layout();
    auto const rg = l.id( "G" ), rp = l.id( "P" ), rx = l.id( "X" );
    std::size_t bad = 0;
    for_all_operands( c, n, [&]( std::uint64_t a, std::uint64_t b, auto const& before, auto const& after, unsigned k ) {
      std::uint64_t const carries = ( a + b ) ^ a ^ b;
      for ( std::uint32_t j = 1; j <= n; ++j )
        bad += lane( after, l.flat( { rg, j } ), k ) != bool( ( carries >> j ) & 1u );
      for ( std::uint32_t i = 0; i < n; ++i )
        bad += lane( after, l.flat( { rp, i } ), k ) != lane( before, l.flat( { rp, i } ), k );
      for ( std::uint32_t i = 0; i < l[rx].size; ++i )
        bad += lane( after, l.flat( { rx, i } ), k );
    } );
    EXPECT_EQ( bad, 0u ) << n;
  }
}

TEST( CarryNetwork, BoundaryBetweenGAndCRounds )
{
  for ( std::uint32_t n = 1; n <= 10; ++n )
  {
    auto const full = build_carry_network( { n } );
    std::vector<std::size_t> prefix;
    for ( std::size_t i = 0; i < full.size(); ++i )
      if ( full.gates()[i].tag == phase::p || full.gates()[i].tag == phase::g )
        prefix.push_back( i );
    auto const c = select_gates( full, prefix );
    auto const& l = c.layout();
    auto const rg = l.id( "G" );
    std::size_t bad = 0;
    for_all_operands( c, n, [&]( std::uint64_t a, std::uint64_t b, auto const&, auto const& after, unsigned k ) {
      for ( std::uint32_t j = 1; j <= n; ++j )
      {
        auto const i = ( j - 1 ) & j;
        bool const expected = interval_status( a, b, i, j ) == carry_status::generate;
        bad += lane( after, l.flat( { rg, j } ), k ) != expected;
      }
    } );
    EXPECT_EQ( bad, 0u ) << n;
  }
}

TEST( CarryNetwork, SizeAndDepthFormulas )
{
  for ( std::uint32_t n = 1; n <= 1024; ++n )
  {
    auto const r = measure_resources( build_carry_network( { n } ) );
    auto const size = 4 * static_cast<long>( n ) - 3 * popcount( n ) - 3 * floor_log2( n ) - 1;
    ASSERT_EQ( static_cast<long>( r.toffoli_count ), size ) << n;
    ASSERT_EQ( r.ancilla_count, carry_network_ancillae( n ) ) << n;
    if ( n >= 4 )
    {
      auto const depth = static_cast<std::size_t>( floor_log2( n ) + floor_log2_third( n ) + 3 );
      ASSERT_EQ( r.toffoli_slices, depth ) << n;
    }
  }
}
