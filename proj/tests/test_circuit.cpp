#include "helpers.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace qcla;

TEST( Bits, Helpers )
{
  EXPECT_EQ( popcount( 10 ), 2 );
  EXPECT_EQ( floor_log2( 1 ), 0 );
  EXPECT_EQ( floor_log2( 10 ), 3 );
  EXPECT_EQ( ceil_log2( 1 ), 0 );
  EXPECT_EQ( ceil_log2( 7 ), 3 );
  EXPECT_EQ( ceil_log2( 8 ), 3 );
  EXPECT_EQ( ceil_log2( 9 ), 4 );
  EXPECT_EQ( floor_log2_third( 3 ), 0 );
  EXPECT_EQ( floor_log2_third( 5 ), 0 );
  EXPECT_EQ( floor_log2_third( 6 ), 1 );
  EXPECT_EQ( floor_log2_third( 10 ), 1 );
  EXPECT_EQ( floor_log2_third( 12 ), 2 );
  EXPECT_EQ( floor_log2_third( 2 ), -1 );
  EXPECT_EQ( carry_round_top( 1 ), 0 );
  EXPECT_EQ( carry_round_top( 2 ), 0 );
  EXPECT_EQ( carry_round_top( 3 ), 1 );
  EXPECT_EQ( carry_round_top( 10 ), 2 );
  EXPECT_EQ( carry_round_top( 12 ), 3 );
  EXPECT_EQ( carry_network_ancillae( 10 ), 5u );
  EXPECT_EQ( carry_network_ancillae( 2 ), 0u );
}

TEST( Bits, CarryRoundTopMatchesThirdLog )
{
  for ( std::uint64_t n = 3; n <= 4096; ++n )
    ASSERT_EQ( carry_round_top( n ), 1 + floor_log2_third( n ) ) << n;
}

TEST( Layout, Validation )
{
  register_layout l;
  l.add( "A", 3, register_role::input_a );
  EXPECT_THROW( l.add( "A", 1, register_role::input_b ), validation_error );
  EXPECT_THROW( l.add( "1bad", 1, register_role::input_b ), validation_error );
  EXPECT_THROW( l.add( "Y", 2, register_role::carry_in ), validation_error );
  l.add( "Y", 1, register_role::carry_in );
  EXPECT_THROW( l.add( "Y2", 1, register_role::carry_in ), validation_error );
  l.add( "E", 0, register_role::ancilla );
  l.add( "X", 2, register_role::ancilla );
  EXPECT_EQ( l.width(), 6u );
  EXPECT_EQ( l.ancilla_count(), 2u );
  EXPECT_EQ( l.unflat( 4 ), ( wire{ 3, 0 } ) );
  for ( std::uint32_t i = 0; i < l.width(); ++i )
    EXPECT_EQ( l.flat( l.unflat( i ) ), i );
  EXPECT_THROW( l.at( "A", 3 ), validation_error );
  EXPECT_EQ( l.wire_name( l.at( "X", 1 ) ), "X[1]" );
}

TEST( Circuit, GateValidation )
{
  register_layout l;
  l.add( "A", 2, register_role::input_a );
  circuit c( l );
  EXPECT_THROW( c.add_cnot( { 0, 0 }, { 0, 0 } ), validation_error );
  EXPECT_THROW( c.add_toffoli( { 0, 1 }, { 0, 1 }, { 0, 0 } ), validation_error );
  EXPECT_THROW( c.add_not( { 0, 2 } ), validation_error );
  EXPECT_THROW( c.add_not( { 1, 0 } ), validation_error );
  EXPECT_THROW( c.add_barrier( "two words" ), validation_error );
  c.add_cnot( { 0, 0 }, { 0, 1 } );
  EXPECT_EQ( c.size(), 1u );
}

TEST( Circuit, PhaseTagsFollowBarriers )
{
  register_layout l;
  l.add( "A", 2, register_role::input_a );
  circuit c( l );
  c.add_not( { 0, 0 } );
  c.begin_phase( phase::g );
  c.add_not( { 0, 1 } );
  EXPECT_EQ( c.gates()[0].tag, phase::none );
  EXPECT_EQ( c.gates()[1].tag, phase::g );
  EXPECT_EQ( c.barrier_position( "G" ), 1u );
}

TEST( Schedule, Examples )
{
  register_layout l;
  l.add( "A", 4, register_role::input_a );
  circuit empty( l );
  EXPECT_TRUE( schedule_asap( empty ).empty() );

  circuit two( l );
  two.add_cnot( { 0, 0 }, { 0, 1 } );
  two.add_cnot( { 0, 2 }, { 0, 3 } );
  EXPECT_EQ( schedule_asap( two ).size(), 1u );
  EXPECT_EQ( schedule_asap( two, schedule_policy::mixed ).size(), 1u );

  auto const net = build_carry_network( { 10 } );
  auto const slices = schedule_asap( net );
  EXPECT_EQ( slices.size(), 7u );
  for ( auto const& s : slices )
    for ( auto gi : s )
      EXPECT_EQ( net.gates()[gi].kind, gate_kind::toffoli );
}

TEST( Schedule, TypedSlicesAreHomogeneous )
{
  auto const c = generate( parse_variant( "add-ip", 8 ) );
  for ( auto const& s : schedule_asap( c ) )
  {
    bool const t = c.gates()[s.front()].kind == gate_kind::toffoli;
    for ( auto gi : s )
      EXPECT_EQ( c.gates()[gi].kind == gate_kind::toffoli, t );
  }
  EXPECT_EQ( measure_resources( c ).toffoli_slices, 15u );
  EXPECT_GT( measure_resources( c, schedule_policy::mixed ).toffoli_slices, 15u );
}

TEST( Schedule, FlattenedSlicingIsEquivalent )
{
  std::mt19937_64 rng( 7 );
  for ( auto id : all_variant_ids )
  {
    auto const c = generate( parse_variant( id, 5 ) );
    for ( auto policy : { schedule_policy::typed, schedule_policy::mixed } )
    {
      auto const slices = schedule_asap( c, policy );
      auto const flat = flatten_slicing( c, slices );
      ASSERT_EQ( flat.size(), c.size() );
      for ( int trial = 0; trial < 20; ++trial )
      {
        bit_state s( c.layout().width() );
        for ( std::size_t i = 0; i < s.size(); ++i )
          s.set( i, rng() & 1u );
        EXPECT_EQ( run( c, s ).words(), run( flat, s ).words() ) << id;
      }
      for ( auto const& slice : slices )
      {
        std::set<std::uint32_t> used;
        for ( auto gi : slice )
          c.gates()[gi].foreach_wire( [&]( wire w ) { EXPECT_TRUE( used.insert( c.layout().flat( w ) ).second ) << id; } );
      }
    }
  }
}

TEST( Resources, Examples )
{
  register_layout l;
  l.add( "A", 3, register_role::input_a );
  l.add( "X", 2, register_role::ancilla );
  circuit c( l );
  auto const empty = measure_resources( c );
  EXPECT_EQ( empty.gate_count(), 0u );
  EXPECT_EQ( empty.total_slices, 0u );
  EXPECT_EQ( empty.ancilla_count, 2u );

  c.add_toffoli( { 0, 0 }, { 0, 1 }, { 1, 0 } );
  c.add_cnot( { 0, 2 }, { 1, 1 } );
  c.add_not( { 0, 0 } );
  auto const r = measure_resources( c );
  EXPECT_EQ( r.toffoli_count, 1u );
  EXPECT_EQ( r.cnot_count, 1u );
  EXPECT_EQ( r.not_count, 1u );
  EXPECT_EQ( r.toffoli_slices, 1u );
  EXPECT_EQ( r.total_slices, 2u );
  c.add_toffoli( { 0, 0 }, { 0, 2 }, { 1, 1 } );
  auto const typed = measure_resources( c );
  EXPECT_EQ( typed.toffoli_slices, 2u );
  EXPECT_EQ( typed.total_slices, 3u );
  EXPECT_EQ( measure_resources( c, schedule_policy::mixed ).total_slices, 3u );

  auto const add10 = measure_resources( generate( parse_variant( "add", 10 ) ) );
  EXPECT_EQ( add10.toffoli_count, 34u );
  EXPECT_EQ( add10.ancilla_count, 5u );
  EXPECT_EQ( add10.toffoli_slices, 8u );
}

TEST( Resources, InverseHasSameCounts )
{
  for ( auto id : all_variant_ids )
  {
    auto const c = generate( parse_variant( id, 9 ) );
    auto const a = measure_resources( c );
    auto const b = measure_resources( invert( c ) );
    EXPECT_TRUE( a.same_counts( b ) ) << id;
  }
}
