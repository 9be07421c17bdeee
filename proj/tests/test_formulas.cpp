#include <qcla/qcla.hpp>
#include <qcla/report_json.hpp>

#include <gtest/gtest.h>

using namespace qcla;

TEST( Formulas, Examples )
{
  auto const add = formula_eval( "add", 10 );
  ASSERT_TRUE( add.entry.has_value() );
  EXPECT_EQ( add.entry->toffoli, 34 );
  EXPECT_EQ( add.entry->ancillae, 5 );

  auto const ipic = formula_eval( "add-ip-ic", 8 );
  ASSERT_TRUE( ipic.entry.has_value() );
  EXPECT_EQ( ipic.entry->toffoli, 54 );
  EXPECT_EQ( ipic.entry->toffoli_depth, 16 );

  auto const cmp = formula_eval( "compare", 16 );
  ASSERT_TRUE( cmp.entry.has_value() );
  EXPECT_EQ( cmp.entry->toffoli, 79 );
}

TEST( Formulas, BelowValidityIsExplicit )
{
  auto const f = formula_eval( "add", 6 );
  EXPECT_FALSE( f.entry.has_value() );
  EXPECT_EQ( f.note, "formula not guaranteed for n < 7" );
  EXPECT_TRUE( formula_eval( "carry-network", 2 ).entry.has_value() );
}

TEST( Formulas, SpecializedAgreesWithGeneralAtPowersOfTwo )
{
  auto const bad = formula_consistency( 3, 10 );
  for ( auto const& b : bad )
    ADD_FAILURE() << b.variant << " k=" << b.k << " " << b.field << ": " << b.specialized << " vs " << b.general;
  for ( auto id : all_variant_ids )
  {
    if ( auto t = power_of_two_eval( id, 3 ) )
    {
      EXPECT_EQ( t->toffoli, formula_eval( id, 8 ).entry->toffoli ) << id;
    }
  }
}

TEST( Formulas, PopcountIdentity )
{
  EXPECT_EQ( 10 - popcount( 10 ), 5 + 2 + 1 );
  EXPECT_EQ( 1 - popcount( 1 ), 0 );
  EXPECT_TRUE( popcount_identity_check( 1'000'000 ) );
}

TEST( VerifyFamily, Examples )
{
  auto const add = verify_family( "add", 7, 64 );
  EXPECT_TRUE( add.pass() );
  EXPECT_EQ( add.rows.size(), 58u );
  for ( auto const& r : add.rows )
    EXPECT_TRUE( r.depth_exact() ) << r.expected.n;

  auto const net = verify_family( "carry-network", 10, 10 );
  ASSERT_EQ( net.rows.size(), 1u );
  EXPECT_EQ( net.rows[0].measured.toffoli_count, 24u );
  EXPECT_TRUE( net.rows[0].toffoli_ok() );
  EXPECT_TRUE( net.rows[0].depth_exact() );
  EXPECT_NE( format_report_text( net ).find( "24 toffoli (expected 24)" ), std::string::npos );

  auto const cmp = verify_family( "compare", 8, 64 );
  EXPECT_TRUE( cmp.pass() );
  for ( auto const& r : cmp.rows )
  {
    EXPECT_TRUE( r.toffoli_ok() && r.cnot_ok() && r.not_ok() && r.ancillae_ok() ) << r.expected.n;
    ASSERT_TRUE( r.expected.alt_toffoli_depth.has_value() );
  }

  auto const low = verify_family( "add", 3, 7 );
  EXPECT_EQ( low.skipped.size(), 4u );
  EXPECT_EQ( low.rows.size(), 1u );
  EXPECT_THROW( verify_family( "add", 9, 8 ), validation_error );
}

TEST( VerifyFamily, Json )
{
  auto const j = to_json( verify_family( "add", 10, 11 ) );
  EXPECT_EQ( j["variant"], "add" );
  EXPECT_EQ( j["pass"], true );
  ASSERT_EQ( j["records"].size(), 2u );
  EXPECT_EQ( j["records"][0]["measured"]["toffoli_count"], 34 );
  EXPECT_EQ( j["records"][0]["expected"]["cnot"], 29 );
  auto const r = to_json( measure_resources( generate( parse_variant( "add", 10 ) ) ) );
  EXPECT_EQ( r["ancilla_count"], 5 );
}
