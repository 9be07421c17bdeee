#pragma once

/*!
  \file simulate.hpp
  \brief Classical simulation on basis states, operand encoding, oracles and
         exhaustive / randomized checking.
*/

#include "circuit.hpp"
#include "generate.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qcla
{

using big_uint = boost::multiprecision::cpp_int;

/// One bit per wire, 64 wires per word.
class bit_state
{
public:
  bit_state() = default;
  explicit bit_state( std::size_t bits ) : bits_( bits ), words_( ( bits + 63 ) / 64, 0 ) {}

  std::size_t size() const noexcept { return bits_; }
  bool get( std::size_t i ) const noexcept { return ( words_[i >> 6] >> ( i & 63 ) ) & 1u; }
  void set( std::size_t i, bool v ) noexcept
  {
    auto const mask = std::uint64_t{ 1 } << ( i & 63 );
    words_[i >> 6] = v ? ( words_[i >> 6] | mask ) : ( words_[i >> 6] & ~mask );
  }
  void flip( std::size_t i ) noexcept { words_[i >> 6] ^= std::uint64_t{ 1 } << ( i & 63 ); }

  bool operator==( bit_state const& ) const = default;

  std::vector<std::uint64_t> const& words() const noexcept { return words_; }

private:
  std::size_t bits_{ 0 };
  std::vector<std::uint64_t> words_;
};

/// Gate list lowered to flat wire indices.
class compiled_circuit
{
public:
  explicit compiled_circuit( circuit const& c ) : width_( c.layout().width() )
  {
    c.validate();
    ops_.reserve( c.size() );
    auto const& layout = c.layout();
    for ( auto const& g : c.gates() )
    {
      op o{ static_cast<std::uint8_t>( g.num_controls() ), 0, 0, layout.flat( g.target ) };
      auto cs = g.control_wires();
      if ( cs.size() > 0 )
        o.c0 = layout.flat( cs[0] );
      if ( cs.size() > 1 )
        o.c1 = layout.flat( cs[1] );
      ops_.push_back( o );
    }
  }

  std::uint32_t width() const noexcept { return width_; }

  void apply( bit_state& s ) const
  {
    if ( s.size() != width_ )
      throw validation_error( "state has " + std::to_string( s.size() ) + " bits, layout has " + std::to_string( width_ ) );
    for ( auto const& o : ops_ )
    {
      if ( ( o.controls < 1 || s.get( o.c0 ) ) && ( o.controls < 2 || s.get( o.c1 ) ) )
        s.flip( o.t );
    }
  }

  /// Runs 64 independent basis states at once: lanes[w] bit k is wire w of state k.
  void apply_lanes( std::vector<std::uint64_t>& lanes ) const
  {
    if ( lanes.size() != width_ )
      throw validation_error( "lane vector does not match layout width" );
    for ( auto const& o : ops_ )
    {
      switch ( o.controls )
      {
      case 0:
        lanes[o.t] = ~lanes[o.t];
        break;
      case 1:
        lanes[o.t] ^= lanes[o.c0];
        break;
      default:
        lanes[o.t] ^= lanes[o.c0] & lanes[o.c1];
        break;
      }
    }
  }

private:
  struct op
  {
    std::uint8_t controls;
    std::uint32_t c0, c1, t;
  };
  std::uint32_t width_;
  std::vector<op> ops_;
};

/// Applies every gate in order to a copy of `state`.
inline bit_state run( circuit const& c, bit_state state )
{
  compiled_circuit( c ).apply( state );
  return state;
}

struct operand_assignment
{
  big_uint a{ 0 };
  big_uint b{ 0 };
  unsigned y{ 0 };
};

/// Decoded outcome of one run.
struct sim_result
{
  big_uint value{ 0 };                        // result per the variant contract
  std::map<std::string, big_uint> registers;  // final register contents
  bool restored{ true };                      // inputs not written by the contract are unchanged
  bool clean{ true };                         // ancilla registers are zero
};

namespace detail
{

inline big_uint read_register( bit_state const& s, register_layout const& layout, std::uint32_t reg )
{
  big_uint v = 0;
  for ( std::uint32_t i = layout[reg].size; i-- > 0; )
  {
    v <<= 1;
    if ( s.get( layout.offset( reg ) + i ) )
      v |= 1;
  }
  return v;
}

inline void write_register( bit_state& s, register_layout const& layout, std::uint32_t reg, big_uint const& v )
{
  for ( std::uint32_t i = 0; i < layout[reg].size; ++i )
    s.set( layout.offset( reg ) + i, boost::multiprecision::bit_test( v, i ) );
}

inline big_uint pow2( unsigned n )
{
  big_uint v = 1;
  return v << n;
}

inline bool is_mersenne_ip( adder_request const& r )
{
  return r.function == adder_function::add_mersenne && r.in_place;
}

} // namespace detail

/// Whether the operands lie in the circuit's input domain (range checks plus the in-place mod 2^n - 1 restriction).
inline bool in_domain( adder_request const& r, operand_assignment const& ops )
{
  auto const lim = detail::pow2( r.n );
  if ( ops.a >= lim || ops.b >= lim || ops.y > 1 || ( ops.y && !r.incoming_carry ) )
    return false;
  if ( detail::is_mersenne_ip( r ) )
  {
    if ( *r.rep == zero_rep::zeros && ops.b == lim - 1 )
      return false;
    if ( *r.rep == zero_rep::ones && ops.b == 0 )
      return false;
  }
  return true;
}

/// Expected decoded value for `r` on `ops`.
inline big_uint oracle_eval( adder_request const& r, operand_assignment const& ops )
{
  r.validate();
  auto const lim = detail::pow2( r.n );
  if ( ops.a >= lim || ops.b >= lim || ops.y > 1 )
    throw validation_error( "operand out of range for n=" + std::to_string( r.n ) );
  big_uint const y = ops.y;
  switch ( r.function )
  {
  case adder_function::add:
    return ops.a + ops.b + y;
  case adder_function::add_mod2n:
    return ( ops.a + ops.b + y ) % lim;
  case adder_function::subtract:
    return lim + ops.a - ops.b;
  case adder_function::compare:
    return ops.a >= ops.b + y ? 1 : 0;
  case adder_function::add_mersenne:
  {
    big_uint s = ops.a + ops.b;
    if ( s >= lim || ( *r.rep == zero_rep::zeros && s == lim - 1 ) )
      s -= lim - 1;
    return s;
  }
  case adder_function::carry_network:
  {
    big_uint const carries = ( ops.a + ops.b ) ^ ops.a ^ ops.b;
    return carries & ( detail::pow2( r.n + 1 ) - 2 );
  }
  }
  throw validation_error( "unknown variant" );
}

/*! \brief Initial state for the operands.
 *
 * Adders: a into A, b into B, y into Y, zeros elsewhere. Carry network: the
 * bit-level generate values g[i-1, i] into G[i] and propagate values
 * p[i, i+1] into P[i].
 */
inline bit_state encode_operands( circuit const& c, adder_request const& r, operand_assignment const& ops )
{
  auto const& layout = c.layout();
  bit_state s( layout.width() );
  if ( r.function == adder_function::carry_network )
  {
    auto const g = layout.id( "G" ), p = layout.id( "P" );
    for ( std::uint32_t i = 0; i < r.n; ++i )
    {
      bool const ai = bit_test( ops.a, i ), bi = bit_test( ops.b, i );
      s.set( layout.offset( g ) + i + 1, ai && bi );
      if ( i >= 1 )
        s.set( layout.offset( p ) + i, ai != bi );
    }
    return s;
  }
  detail::write_register( s, layout, layout.id( "A" ), ops.a );
  detail::write_register( s, layout, layout.id( "B" ), ops.b );
  if ( auto y = layout.find( "Y" ) )
    detail::write_register( s, layout, *y, ops.y );
  return s;
}

/// Interprets a final state per the contract of `r`, comparing against the initial state.
inline sim_result decode_result( circuit const& c, adder_request const& r, bit_state const& before, bit_state const& after )
{
  auto const& layout = c.layout();
  sim_result res;
  for ( std::uint32_t reg = 0; reg < layout.size(); ++reg )
  {
    auto const& decl = layout[reg];
    res.registers[decl.name] = detail::read_register( after, layout, reg );
    bool const written = decl.role == register_role::output || ( decl.role == register_role::input_b && r.in_place );
    if ( decl.role == register_role::ancilla )
      res.clean = res.clean && res.registers[decl.name] == 0;
    else if ( !written )
      res.restored = res.restored && res.registers[decl.name] == detail::read_register( before, layout, reg );
  }
  auto const& regs = res.registers;
  if ( r.function == adder_function::carry_network )
    res.value = regs.at( "G" );
  else if ( r.in_place )
    res.value = regs.at( "B" ) | ( regs.at( "Z" ) << r.n );
  else
    res.value = regs.at( "Z" );
  return res;
}

inline sim_result run_operands( circuit const& c, adder_request const& r, operand_assignment const& ops )
{
  auto const lim = detail::pow2( r.n );
  if ( ops.a >= lim || ops.b >= lim || ops.y > 1 )
    throw validation_error( "operand out of range for n=" + std::to_string( r.n ) );
  if ( ops.y && !c.layout().find( "Y" ) )
    throw validation_error( "carry-in given but the circuit has no carry-in register" );
  auto const before = encode_operands( c, r, ops );
  return decode_result( c, r, before, run( c, before ) );
}

/// The variant request recorded in a circuit's tag.
inline adder_request request_of( circuit const& c )
{
  auto r = parse_variant_tag( c.variant() );
  if ( !r )
    throw validation_error( "circuit carries no recognizable variant tag ('" + c.variant() + "')" );
  return *r;
}

inline sim_result run_operands( circuit const& c, operand_assignment const& ops )
{
  return run_operands( c, request_of( c ), ops );
}

struct counterexample
{
  operand_assignment input;
  big_uint expected{ 0 };
  sim_result actual;

  std::string describe() const
  {
    std::ostringstream os;
    os << "a=" << input.a << " b=" << input.b << " y=" << input.y << " expected=" << expected << " got=" << actual.value
       << " restored=" << ( actual.restored ? "true" : "false" ) << " clean=" << ( actual.clean ? "true" : "false" );
    for ( auto const& [name, v] : actual.registers )
      os << ' ' << name << '=' << v;
    return os.str();
  }
};

struct check_result
{
  bool pass{ true };
  std::uint64_t inputs{ 0 };
  std::optional<counterexample> first_failure;
};

inline constexpr std::uint32_t exhaustive_width_limit = 12;

/*! \brief Every in-domain (a, b, y) in lexicographic order, 64 inputs per pass.
 *
 * Reports the first mismatch (lowest (a, b, y)) with a full decode.
 */
inline check_result exhaustive_check( circuit const& c, adder_request const& r )
{
  r.validate();
  if ( r.n > exhaustive_width_limit )
    throw validation_error( "exhaustive check limited to n <= " + std::to_string( exhaustive_width_limit ) );
  compiled_circuit const cc( c );
  auto const& layout = c.layout();
  std::uint64_t const lim = std::uint64_t{ 1 } << r.n;
  unsigned const ys = r.incoming_carry ? 2 : 1;

  std::vector<operand_assignment> batch;
  check_result out;

  auto flush = [&]() -> bool {
    if ( batch.empty() )
      return true;
    std::vector<std::uint64_t> lanes( cc.width(), 0 );
    std::vector<bit_state> before;
    before.reserve( batch.size() );
    for ( std::size_t k = 0; k < batch.size(); ++k )
    {
      before.push_back( encode_operands( c, r, batch[k] ) );
      for ( std::uint32_t w = 0; w < cc.width(); ++w )
        if ( before.back().get( w ) )
          lanes[w] |= std::uint64_t{ 1 } << k;
    }
    cc.apply_lanes( lanes );
    for ( std::size_t k = 0; k < batch.size(); ++k )
    {
      bit_state after( layout.width() );
      for ( std::uint32_t w = 0; w < cc.width(); ++w )
        after.set( w, ( lanes[w] >> k ) & 1u );
      auto res = decode_result( c, r, before[k], after );
      auto expected = oracle_eval( r, batch[k] );
      ++out.inputs;
      if ( res.value != expected || !res.restored || !res.clean )
      {
        out.pass = false;
        out.first_failure = counterexample{ batch[k], expected, std::move( res ) };
        return false;
      }
    }
    batch.clear();
    return true;
  };

  for ( std::uint64_t a = 0; a < lim; ++a )
    for ( std::uint64_t b = 0; b < lim; ++b )
      for ( unsigned y = 0; y < ys; ++y )
      {
        operand_assignment ops{ a, b, y };
        if ( !in_domain( r, ops ) )
          continue;
        batch.push_back( ops );
        if ( batch.size() == 64 && !flush() )
          return out;
      }
  flush();
  return out;
}

inline check_result exhaustive_check( adder_request const& r )
{
  r.validate();
  if ( r.n > exhaustive_width_limit )
    throw validation_error( "exhaustive check limited to n <= " + std::to_string( exhaustive_width_limit ) );
  return exhaustive_check( generate( r ), r );
}

/// Seed for randomized checks: QCLA_SEED when set, a fixed default otherwise.
inline std::uint64_t default_seed()
{
  if ( char const* s = std::getenv( "QCLA_SEED" ) )
  {
    try
    {
      return std::stoull( s, nullptr, 0 );
    }
    catch ( std::exception const& )
    {
    }
  }
  return 0x5eed'c1a0'2004ull;
}

inline big_uint random_bits( std::mt19937_64& rng, unsigned n )
{
  big_uint v = 0;
  for ( unsigned done = 0; done < n; done += 64 )
  {
    auto word = rng();
    auto const take = std::min( 64u, n - done );
    if ( take < 64 )
      word &= ( std::uint64_t{ 1 } << take ) - 1;
    v |= big_uint( word ) << done;
  }
  return v;
}

/// `count` uniformly random in-domain inputs checked against the oracle.
inline check_result random_check( circuit const& c, adder_request const& r, std::size_t count, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  compiled_circuit const cc( c );
  check_result out;
  while ( out.inputs < count )
  {
    operand_assignment ops{ random_bits( rng, r.n ), random_bits( rng, r.n ), r.incoming_carry ? unsigned( rng() & 1u ) : 0u };
    if ( !in_domain( r, ops ) )
      continue;
    auto const before = encode_operands( c, r, ops );
    auto after = before;
    cc.apply( after );
    auto res = decode_result( c, r, before, after );
    auto expected = oracle_eval( r, ops );
    ++out.inputs;
    if ( res.value != expected || !res.restored || !res.clean )
    {
      out.pass = false;
      out.first_failure = counterexample{ ops, expected, std::move( res ) };
      return out;
    }
  }
  return out;
}

} // namespace qcla
