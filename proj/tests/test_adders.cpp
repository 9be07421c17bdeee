#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace qcla;

namespace
{

sim_result sim( std::string_view id, std::uint32_t n, unsigned a, unsigned b, unsigned y = 0 )
{
  auto const r = parse_variant( id, n );
  return run_operands( generate( r ), r, { a, b, y } );
}

resource_report resources( std::string_view id, std::uint32_t n )
{
  return measure_resources( generate( parse_variant( id, n ) ) );
}

std::size_t toffolis_between( circuit const& c, std::string_view from, std::string_view to )
{
  auto const lo = c.barrier_position( from ), hi = c.barrier_position( to );
  std::size_t k = 0;
  for ( auto i = *lo; i < *hi; ++i )
    k += c.gates()[i].kind == gate_kind::toffoli;
  return k;
}

} // namespace

TEST( OutOfPlaceAdder, Examples )
{
  auto const r = sim( "add", 4, 5, 7 );
  EXPECT_EQ( r.value, 12 );
  EXPECT_EQ( r.registers.at( "A" ), 5 );
  EXPECT_EQ( r.registers.at( "B" ), 7 );
  EXPECT_EQ( r.registers.at( "X" ), 0 );
  EXPECT_TRUE( r.restored && r.clean );
  EXPECT_EQ( sim( "add-ic", 4, 15, 1, 1 ).value, 17 );

  auto const c = resources( "add", 10 );
  EXPECT_EQ( c.toffoli_count, 34u );
  EXPECT_EQ( c.cnot_count, 29u );
  EXPECT_EQ( c.ancilla_count, 5u );
  EXPECT_EQ( c.total_slices, 11u );
  EXPECT_EQ( c.toffoli_slices, 8u );
  EXPECT_EQ( resources( "add", 8 ).toffoli_count, 27u );
  EXPECT_EQ( resources( "add", 8 ).toffoli_slices, 8u );
}

TEST( InPlaceAdder, Examples )
{
  auto const c = resources( "add-ip", 10 );
  EXPECT_EQ( c.toffoli_count, 63u );
  EXPECT_EQ( c.cnot_count, 35u );
  EXPECT_EQ( c.not_count, 18u );
  EXPECT_EQ( c.ancilla_count, 14u );
  EXPECT_EQ( resources( "add-ip", 8 ).toffoli_count, 46u );
  EXPECT_EQ( resources( "add-ip", 8 ).toffoli_slices, 15u );

  auto const r = sim( "add-ip", 4, 9, 9 );
  EXPECT_EQ( r.registers.at( "B" ), 2 );
  EXPECT_EQ( r.registers.at( "Z" ), 1 );
  EXPECT_EQ( r.value, 18 );
}

TEST( ModularAdder, Examples )
{
  auto const c = resources( "add-mod2n", 10 );
  EXPECT_EQ( c.toffoli_count, 29u );
  EXPECT_EQ( c.cnot_count, 28u );
  EXPECT_EQ( c.ancilla_count, 4u );
  EXPECT_EQ( resources( "add-mod2n-ip", 8 ).toffoli_count, 38u );
  EXPECT_EQ( resources( "add-mod2n-ip", 8 ).toffoli_slices, 14u );
  EXPECT_EQ( sim( "add-mod2n", 4, 9, 9 ).value, 2 );
  EXPECT_EQ( sim( "add-mod2n-ip", 4, 9, 9 ).value, 2 );
}

TEST( Subtractor, Examples )
{
  for ( unsigned a = 0; a < 16; ++a )
  {
    auto const r = sim( "sub", 4, a, a );
    EXPECT_EQ( r.value, 16 );
  }
  EXPECT_EQ( sim( "sub", 4, 3, 5 ).value, 14 );
  EXPECT_EQ( sim( "sub-ip", 4, 3, 5 ).value, 14 );
  for ( std::uint32_t n = 1; n <= 64; ++n )
  {
    EXPECT_EQ( resources( "sub", n ).toffoli_count, resources( "add", n ).toffoli_count ) << n;
    EXPECT_EQ( resources( "sub-ip", n ).toffoli_count, resources( "add-ip", n ).toffoli_count ) << n;
  }
}

TEST( Comparator, Examples )
{
  EXPECT_EQ( sim( "compare", 3, 3, 3 ).value, 1 );
  EXPECT_EQ( sim( "compare", 3, 2, 5 ).value, 0 );
  EXPECT_EQ( resources( "compare", 8 ).toffoli_count, 34u );
  auto const c = generate( parse_variant( "compare", 7 ) );
  EXPECT_EQ( toffolis_between( c, "G", "Gundo" ), 6u );
  EXPECT_EQ( toffolis_between( c, "Gundo", "Pinv" ), 4u );
}

TEST( Comparator, SignAgreesWithSubtractor )
{
  for ( std::uint32_t n = 2; n <= 5; ++n )
  {
    auto const rc = parse_variant( "compare", n ), rs = parse_variant( "sub", n );
    auto const cc = generate( rc ), cs = generate( rs );
    for ( unsigned a = 0; a < ( 1u << n ); ++a )
      for ( unsigned b = 0; b < ( 1u << n ); ++b )
      {
        auto const high = run_operands( cs, rs, { a, b, 0 } ).value >> n;
        ASSERT_EQ( run_operands( cc, rc, { a, b, 0 } ).value, high ) << n << " " << a << " " << b;
      }
  }
}

TEST( Mersenne, Examples )
{
  auto const c = resources( "mersenne-ones", 7 );
  EXPECT_EQ( c.toffoli_count, 29u );
  EXPECT_EQ( c.cnot_count, 21u );
  EXPECT_EQ( c.ancilla_count, 5u );
  auto const ip = resources( "mersenne-ip-ones", 7 );
  EXPECT_EQ( ip.toffoli_count, 59u );
  EXPECT_EQ( ip.cnot_count, 28u );
  EXPECT_EQ( ip.not_count, 14u );
  EXPECT_EQ( ip.ancilla_count, 12u );
  EXPECT_EQ( resources( "mersenne-ip-zeros", 7 ).toffoli_count, 59u );

  EXPECT_EQ( sim( "mersenne-ones", 3, 5, 4 ).value, 2 );
  EXPECT_EQ( sim( "mersenne-zeros", 3, 5, 4 ).value, 2 );
  EXPECT_EQ( sim( "mersenne-zeros", 3, 3, 4 ).value, 0 );
  EXPECT_EQ( sim( "mersenne-ones", 3, 3, 4 ).value, 7 );
  EXPECT_EQ( sim( "mersenne-ones", 3, 0, 0 ).value, 0 );
}

TEST( Mersenne, CongruenceIndependentOfRepresentation )
{
  for ( std::uint32_t n = 2; n <= 6; ++n )
  {
    unsigned const m = ( 1u << n ) - 1;
    for ( auto id : { "mersenne-ones", "mersenne-zeros" } )
    {
      auto const r = parse_variant( id, n );
      auto const c = generate( r );
      for ( unsigned a = 0; a <= m; ++a )
        for ( unsigned b = 0; b <= m; ++b )
        {
          auto const v = run_operands( c, r, { a, b, 0 } ).value;
          ASSERT_EQ( unsigned( v ) % m, ( a + b ) % m ) << id << " " << a << " " << b;
        }
    }
  }
}

TEST( Mersenne, RepresentationOfZero )
{
  for ( std::uint32_t n = 2; n <= 6; ++n )
  {
    unsigned const m = ( 1u << n ) - 1;
    for ( unsigned a = 0; a <= m; ++a )
    {
      EXPECT_EQ( sim( "mersenne-zeros", n, a, m ^ a ).value, 0 );
      EXPECT_EQ( sim( "mersenne-ones", n, a, m - a ).value, m );
    }
    EXPECT_EQ( sim( "mersenne-ones", n, 0, 0 ).value, 0 );
  }
}

TEST( Mersenne, InPlaceDomain )
{
  for ( std::uint32_t n = 2; n <= 4; ++n )
  {
    unsigned const m = ( 1u << n ) - 1;
    for ( auto id : { "mersenne-ip-ones", "mersenne-ip-zeros" } )
    {
      auto const r = parse_variant( id, n );
      unsigned const excluded = *r.rep == zero_rep::zeros ? m : 0;
      auto const c = generate( r );
      for ( unsigned a = 0; a <= m; ++a )
        for ( unsigned b = 0; b <= m; ++b )
        {
          operand_assignment const ops{ a, b, 0 };
          EXPECT_EQ( in_domain( r, ops ), b != excluded ) << id;
          if ( !in_domain( r, ops ) )
            continue;
          auto const res = run_operands( c, r, ops );
          EXPECT_EQ( res.value, oracle_eval( r, ops ) ) << id << " " << a << " " << b;
          EXPECT_TRUE( res.restored && res.clean ) << id;
        }
    }
  }
}

TEST( Adders, ExhaustiveSmallWidths )
{
  for ( auto id : all_variant_ids )
    for ( std::uint32_t n = 1; n <= 6; ++n )
    {
      auto r = parse_variant( id, n );
      try
      {
        r.validate();
      }
      catch ( validation_error const& )
      {
        continue;
      }
      auto const res = exhaustive_check( r );
      EXPECT_TRUE( res.pass ) << id << " n=" << n << " " << ( res.first_failure ? res.first_failure->describe() : "" );
    }
}

TEST( Adders, IncomingCarrySavesOneToffoli )
{
  for ( std::uint32_t n = 1; n <= 64; ++n )
    EXPECT_EQ( resources( "add-ic", n ).toffoli_count + 1, resources( "add", n + 1 ).toffoli_count ) << n;
}

TEST( Adders, InvalidRequests )
{
  EXPECT_THROW( gen_add_oop( 0 ), validation_error );
  EXPECT_THROW( gen_add_ip( 0 ), validation_error );
  EXPECT_THROW( gen_sub( 0 ), validation_error );
  EXPECT_THROW( gen_compare( 1 ), validation_error );
  EXPECT_THROW( gen_add_mersenne( 1, false, zero_rep::ones ), validation_error );
  EXPECT_THROW( generate( parse_variant( "compare", 1 ) ), validation_error );
  EXPECT_THROW( parse_variant( "add-ic-ip", 4 ), validation_error );
  EXPECT_THROW( parse_variant( "mersenne-twos", 4 ), validation_error );
  EXPECT_THROW( generate( parse_variant( "sub-ic", 4 ) ), validation_error );
  adder_request r;
  r.function = adder_function::add_mersenne;
  r.n = 4;
  EXPECT_THROW( r.validate(), validation_error );
  r.rep = zero_rep::ones;
  r.incoming_carry = true;
  EXPECT_THROW( r.validate(), validation_error );
}

TEST( Adders, VariantIdsRoundTrip )
{
  for ( auto id : all_variant_ids )
  {
    auto const r = parse_variant( id, 9 );
    EXPECT_EQ( r.variant_id(), id );
    EXPECT_EQ( parse_variant_tag( variant_tag( r ) ), r );
    EXPECT_EQ( generate( r ).variant(), std::string( id ) + " n=9" );
  }
  EXPECT_FALSE( parse_variant_tag( "add" ).has_value() );
  EXPECT_FALSE( parse_variant_tag( "add n=" ).has_value() );
  EXPECT_FALSE( parse_variant_tag( "add n=4 extra" ).has_value() );
}
