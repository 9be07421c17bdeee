#pragma once

/*!
  \file formulas.hpp
  \brief Closed-form resource counts and the harness comparing them with
         measured circuits.

  Terms: w(n) popcount, L(n) = floor(log2 n), L3(n) = floor(log2(n/3)).
*/

#include "bits.hpp"
#include "generate.hpp"
#include "resources.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace qcla
{

struct formula_entry
{
  std::string variant;
  std::uint32_t n{ 0 };
  std::int64_t toffoli{ 0 };
  std::int64_t toffoli_depth{ 0 };
  std::int64_t ancillae{ 0 };
  std::optional<std::int64_t> cnot;
  std::optional<std::int64_t> nots;
  /// Second depth candidate where two closed forms disagree (comparators).
  std::optional<std::int64_t> alt_toffoli_depth;
  std::uint32_t validity{ 7 };

  /// Upper bound the measured Toffoli depth must respect.
  std::int64_t depth_bound() const { return alt_toffoli_depth ? std::max( toffoli_depth, *alt_toffoli_depth ) : toffoli_depth; }
};

/// Formula values, or the reason none are guaranteed.
struct formula_result
{
  std::optional<formula_entry> entry;
  std::string note;

  explicit operator bool() const noexcept { return entry.has_value(); }
};

namespace detail
{

inline std::int64_t w( std::int64_t n ) { return popcount( static_cast<std::uint64_t>( n ) ); }
inline std::int64_t L( std::int64_t n ) { return floor_log2( static_cast<std::uint64_t>( n ) ); }
inline std::int64_t L3( std::int64_t n ) { return floor_log2_third( static_cast<std::uint64_t>( n ) ); }

/// Formula values at any n (no validity check).
inline formula_entry raw_formula( std::string_view id, std::uint32_t n_ )
{
  auto const req = parse_variant( id, n_ );
  std::int64_t const n = n_;
  formula_entry e;
  e.variant = std::string( id );
  e.n = n_;
  e.validity = 7;

  auto set = [&]( std::int64_t t, std::int64_t d, std::int64_t a, std::optional<std::int64_t> c, std::optional<std::int64_t> x ) {
    e.toffoli = t;
    e.toffoli_depth = d;
    e.ancillae = a;
    e.cnot = c;
    e.nots = x;
  };

  switch ( req.function )
  {
  case adder_function::add:
  case adder_function::subtract:
  {
    bool const sub = req.function == adder_function::subtract;
    if ( !req.in_place && !req.incoming_carry )
      set( 5 * n - 3 * w( n ) - 3 * L( n ) - 1, L( n ) + L3( n ) + 4, n - w( n ) - L( n ), 3 * n - 1, sub ? 3 * n + 1 : 0 );
    else if ( !req.in_place )
      // CNOT count not asserted
      set( 5 * n - 3 * w( n + 1 ) - 3 * L( n + 1 ) + 3, L( n + 1 ) + L3( n + 1 ) + 4, n - w( n + 1 ) - L( n + 1 ) + 1, std::nullopt, 0 );
    else if ( !req.incoming_carry )
      set( 10 * n - 3 * w( n ) - 3 * w( n - 1 ) - 3 * L( n ) - 3 * L( n - 1 ) - 7, L( n ) + L( n - 1 ) + L3( n ) + L3( n - 1 ) + 8,
           2 * n - w( n ) - L( n ) - 1, 4 * n - 5, sub ? 5 * n - 1 : 2 * n - 2 );
    else
      set( 10 * n - 3 * w( n ) - 3 * w( n + 1 ) - 3 * L( n ) - 3 * L( n + 1 ) + 1, L( n ) + L( n + 1 ) + L3( n ) + L3( n + 1 ) + 8,
           2 * n - w( n + 1 ) - L( n + 1 ), 4 * n - 2, 2 * n - 2 );
    break;
  }
  case adder_function::add_mod2n:
    if ( !req.in_place && !req.incoming_carry )
      set( 5 * n - 3 * w( n - 1 ) - 3 * L( n - 1 ) - 6, L( n - 1 ) + L3( n - 1 ) + 4, n - w( n - 1 ) - L( n - 1 ) - 1, 3 * n - 2, 0 );
    else if ( !req.in_place )
      set( 5 * n - 3 * w( n ) - 3 * L( n ) - 2, L( n ) + L3( n ) + 4, n - w( n ) - L( n ), std::nullopt, 0 );
    else if ( !req.incoming_carry )
      set( 10 * n - 6 * w( n - 1 ) - 6 * L( n - 1 ) - 12, 2 * L( n - 1 ) + 2 * L3( n - 1 ) + 8, 2 * n - w( n - 1 ) - L( n - 1 ) - 2, 4 * n - 5,
           2 * n - 2 );
    else
      set( 10 * n - 6 * w( n ) - 6 * L( n ) - 4, 2 * L( n ) + 2 * L3( n ) + 8, 2 * n - w( n ) - L( n ) - 1, 4 * n - 2, 2 * n - 2 );
    break;
  case adder_function::compare:
    if ( !req.incoming_carry )
    {
      set( 6 * n - w( n - 1 ) - 2 * L( n - 1 ) - 7, 2 * L( n ) + 5, 2 * n - L( n - 1 ) - 3, 2 * n - 2, 2 * n + 1 );
      e.alt_toffoli_depth = 2 * L( n - 1 ) + 5;
    }
    else
    {
      set( 6 * n - w( n ) - 2 * L( n ) - 3, 2 * L( n + 1 ) + 5, 2 * n - L( n ) - 2, 2 * n, 2 * n + 1 );
      e.alt_toffoli_depth = 2 * L( n ) + 5;
    }
    break;
  case adder_function::add_mersenne:
    if ( req.in_place )
      set( 10 * n - 11, 3 * L( n - 1 ) + L3( n - 1 ) + 12, 2 * n - 2, 4 * n, 2 * n );
    else if ( *req.rep == zero_rep::ones )
      set( 5 * n - 6, 2 * L( n - 1 ) + 5, n - 2, 3 * n, 0 );
    else
      set( 5 * n - 5, L( n - 1 ) + L3( n - 1 ) + 7, n - 2, 3 * n, 0 );
    break;
  case adder_function::carry_network:
    set( 4 * n - 3 * w( n ) - 3 * L( n ) - 1, L( n ) + L3( n ) + 3, std::max<std::int64_t>( 0, n - w( n ) - L( n ) ), 0, 0 );
    e.validity = 1;
    break;
  }
  return e;
}

} // namespace detail

/// Formula values for a variant at width n; empty with a note below the validity threshold.
inline formula_result formula_eval( std::string_view variant, std::uint32_t n )
{
  auto e = detail::raw_formula( variant, n );
  if ( n < e.validity )
    return { std::nullopt, "formula not guaranteed for n < " + std::to_string( e.validity ) };
  return { std::move( e ), {} };
}

/// Power-of-two specialization (n = 2^k, k >= 3) of the size, depth and ancilla rows.
struct power_of_two_entry
{
  std::int64_t toffoli{ 0 };
  std::int64_t toffoli_depth{ 0 };
  std::int64_t ancillae{ 0 };
};

inline std::optional<power_of_two_entry> power_of_two_eval( std::string_view variant, int k )
{
  std::int64_t const n = std::int64_t{ 1 } << k;
  std::int64_t const K = k;
  auto const req = parse_variant( variant, static_cast<std::uint32_t>( n ) );
  switch ( req.function )
  {
  case adder_function::add:
    if ( !req.in_place )
      return req.incoming_carry ? power_of_two_entry{ 5 * n - 3 * K - 3, 2 * K + 2, n - K - 1 } : power_of_two_entry{ 5 * n - 3 * K - 4, 2 * K + 2, n - K - 1 };
    return req.incoming_carry ? power_of_two_entry{ 10 * n - 6 * K - 8, 4 * K + 4, 2 * n - K - 2 } : power_of_two_entry{ 10 * n - 9 * K - 7, 4 * K + 3, 2 * n - K - 2 };
  case adder_function::add_mod2n:
    if ( !req.in_place )
      return req.incoming_carry ? power_of_two_entry{ 5 * n - 3 * K - 5, 2 * K + 2, n - K - 1 } : power_of_two_entry{ 5 * n - 6 * K - 3, 2 * K + 1, n - 2 * K };
    return req.incoming_carry ? power_of_two_entry{ 10 * n - 6 * K - 10, 4 * K + 4, 2 * n - K - 2 } : power_of_two_entry{ 10 * n - 12 * K - 6, 4 * K + 2, 2 * n - 2 * K - 1 };
  case adder_function::add_mersenne:
    if ( *req.rep != zero_rep::ones )
      return std::nullopt;
    return req.in_place ? power_of_two_entry{ 10 * n - 11, 4 * K + 7, 2 * n - 2 } : power_of_two_entry{ 5 * n - 6, 2 * K + 3, n - 2 };
  case adder_function::compare:
    return req.incoming_carry ? power_of_two_entry{ 6 * n - 2 * K - 4, 2 * K + 5, 2 * n - K - 2 } : power_of_two_entry{ 6 * n - 3 * K - 5, 2 * K + 5, 2 * n - K - 2 };
  case adder_function::subtract:
  case adder_function::carry_network:
    return std::nullopt;
  }
  return std::nullopt;
}

struct formula_inconsistency
{
  std::string variant;
  int k{ 0 };
  std::string field;
  std::int64_t specialized{ 0 };
  std::int64_t general{ 0 };
};

/// Every (variant, k, field) where the power-of-two row differs from the general row.
inline std::vector<formula_inconsistency> formula_consistency( int k_lo = 3, int k_hi = 10 )
{
  std::vector<formula_inconsistency> out;
  for ( auto id : all_variant_ids )
    for ( int k = k_lo; k <= k_hi; ++k )
    {
      auto const t1 = power_of_two_eval( id, k );
      if ( !t1 )
        continue;
      auto const t2 = detail::raw_formula( id, std::uint32_t{ 1 } << k );
      if ( t1->toffoli != t2.toffoli )
        out.push_back( { std::string( id ), k, "toffoli", t1->toffoli, t2.toffoli } );
      if ( t1->toffoli_depth != t2.toffoli_depth )
        out.push_back( { std::string( id ), k, "toffoli_depth", t1->toffoli_depth, t2.toffoli_depth } );
      if ( t1->ancillae != t2.ancillae )
        out.push_back( { std::string( id ), k, "ancillae", t1->ancillae, t2.ancillae } );
    }
  return out;
}

/// n - w(n) == sum_{i>=1} floor(n / 2^i) for every 1 <= n <= limit.
inline bool popcount_identity_check( std::uint64_t limit )
{
  for ( std::uint64_t n = 1; n <= limit; ++n )
  {
    std::uint64_t sum = 0;
    for ( auto m = n >> 1; m > 0; m >>= 1 )
      sum += m;
    if ( n - static_cast<std::uint64_t>( popcount( n ) ) != sum )
      return false;
  }
  return true;
}

/// One (variant, n) comparison.
struct verify_row
{
  formula_entry expected;
  resource_report measured;

  bool toffoli_ok() const { return measured.toffoli_count == static_cast<std::uint64_t>( expected.toffoli ); }
  bool ancillae_ok() const { return measured.ancilla_count == static_cast<std::uint64_t>( expected.ancillae ); }
  bool cnot_ok() const { return !expected.cnot || measured.cnot_count == static_cast<std::uint64_t>( *expected.cnot ); }
  bool not_ok() const { return !expected.nots || measured.not_count == static_cast<std::uint64_t>( *expected.nots ); }
  bool depth_ok() const { return static_cast<std::int64_t>( measured.toffoli_slices ) <= expected.depth_bound(); }
  bool depth_exact() const { return static_cast<std::int64_t>( measured.toffoli_slices ) == expected.toffoli_depth; }
  bool pass() const { return toffoli_ok() && ancillae_ok() && cnot_ok() && not_ok() && depth_ok(); }

  /// Remark for depth results that are correct but not tight, or that split two candidate formulas.
  std::string depth_note() const
  {
    auto const d = static_cast<std::int64_t>( measured.toffoli_slices );
    if ( expected.alt_toffoli_depth && *expected.alt_toffoli_depth != expected.toffoli_depth )
    {
      auto const lo = std::min( expected.toffoli_depth, *expected.alt_toffoli_depth );
      auto const hi = std::max( expected.toffoli_depth, *expected.alt_toffoli_depth );
      std::ostringstream os;
      os << "depth formulas disagree (summary " << expected.toffoli_depth << ", construction " << *expected.alt_toffoli_depth << "); measured " << d;
      if ( d == lo )
        os << " meets the lower";
      else if ( d > lo && d < hi )
        os << " lies between them";
      return os.str();
    }
    if ( d < expected.toffoli_depth )
      return "measured depth below formula";
    return {};
  }
};

struct family_report
{
  std::string variant;
  std::vector<verify_row> rows;
  std::vector<std::string> skipped; // widths below formula validity

  bool pass() const
  {
    return std::all_of( rows.begin(), rows.end(), []( verify_row const& r ) { return r.pass(); } );
  }
};

/// Measures the generated circuit at every n in [lo, hi] and compares with the formulas.
inline family_report verify_family( std::string_view variant, std::uint32_t lo, std::uint32_t hi )
{
  if ( lo > hi )
    throw validation_error( "empty range" );
  family_report rep;
  rep.variant = std::string( variant );
  for ( std::uint32_t n = lo; n <= hi; ++n )
  {
    auto const f = formula_eval( variant, n );
    if ( !f )
    {
      rep.skipped.push_back( "n=" + std::to_string( n ) + ": " + f.note );
      continue;
    }
    rep.rows.push_back( { *f.entry, measure_resources( generate( parse_variant( variant, n ) ) ) } );
  }
  return rep;
}

/// Width grid used for scale checks: [7, 64] densely, then powers of two to 1024.
inline std::vector<std::uint32_t> standard_width_grid()
{
  std::vector<std::uint32_t> g;
  for ( std::uint32_t n = 7; n <= 64; ++n )
    g.push_back( n );
  for ( std::uint32_t n = 128; n <= 1024; n *= 2 )
    g.push_back( n );
  return g;
}

inline std::string format_report_text( family_report const& rep )
{
  std::ostringstream os;
  auto const show = []( std::uint64_t measured, char const* what, std::optional<std::int64_t> expected, bool ok ) {
    std::ostringstream s;
    s << "  " << measured << ' ' << what;
    if ( expected )
      s << " (expected " << *expected << ")" << ( ok ? "" : "  <-- mismatch" );
    else
      s << " (not asserted)";
    s << '\n';
    return s.str();
  };
  for ( auto const& s : rep.skipped )
    os << rep.variant << ' ' << s << '\n';
  for ( auto const& r : rep.rows )
  {
    os << rep.variant << " n=" << r.expected.n << ": " << ( r.pass() ? "ok" : "MISMATCH" ) << '\n';
    os << show( r.measured.toffoli_count, "toffoli", r.expected.toffoli, r.toffoli_ok() );
    os << show( r.measured.cnot_count, "cnot", r.expected.cnot, r.cnot_ok() );
    os << show( r.measured.not_count, "not", r.expected.nots, r.not_ok() );
    os << show( r.measured.ancilla_count, "ancillae", r.expected.ancillae, r.ancillae_ok() );
    os << "  " << r.measured.toffoli_slices << " toffoli slices (bound " << r.expected.depth_bound() << ", "
       << ( r.depth_exact() ? "exact" : r.depth_ok() ? "within" : "EXCEEDED" ) << ")";
    if ( auto note = r.depth_note(); !note.empty() )
      os << "; " << note;
    os << '\n' << "  " << r.measured.total_slices << " total slices\n";
  }
  return os.str();
}

} // namespace qcla
