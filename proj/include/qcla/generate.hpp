#pragma once

/*!
  \file generate.hpp
  \brief Request type covering every circuit family, variant ids, and dispatch.
*/

#include "adders.hpp"
#include "carry_network.hpp"
#include "comparator.hpp"
#include "mersenne.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace qcla
{

enum class adder_function : std::uint8_t
{
  add,
  add_mod2n,
  add_mersenne,
  subtract,
  compare,
  carry_network
};

inline std::string_view to_string( adder_function f ) noexcept
{
  switch ( f )
  {
  case adder_function::add:
    return "add";
  case adder_function::add_mod2n:
    return "add-mod2n";
  case adder_function::add_mersenne:
    return "add-mersenne";
  case adder_function::subtract:
    return "subtract";
  case adder_function::compare:
    return "compare";
  case adder_function::carry_network:
    return "carry-network";
  }
  return "?";
}

inline std::optional<adder_function> parse_adder_function( std::string_view s ) noexcept
{
  for ( auto f : { adder_function::add, adder_function::add_mod2n, adder_function::add_mersenne, adder_function::subtract,
                   adder_function::compare, adder_function::carry_network } )
    if ( to_string( f ) == s )
      return f;
  return std::nullopt;
}

struct adder_request
{
  std::uint32_t n{ 1 };
  adder_function function{ adder_function::add };
  bool in_place{ false };
  bool incoming_carry{ false };
  std::optional<zero_rep> rep; // add-mersenne only

  bool operator==( adder_request const& ) const = default;

  /// Throws validation_error when the combination is not a supported circuit.
  void validate() const
  {
    auto fail = [&]( std::string const& why ) { throw validation_error( std::string( to_string( function ) ) + ": " + why ); };
    if ( n < 1 )
      fail( "n must be >= 1" );
    if ( rep && function != adder_function::add_mersenne )
      fail( "zero representation applies only to add-mersenne" );
    switch ( function )
    {
    case adder_function::add:
    case adder_function::add_mod2n:
      break;
    case adder_function::add_mersenne:
      if ( n < 2 )
        fail( "n must be >= 2" );
      if ( incoming_carry )
        fail( "incoming carry is not defined" );
      if ( !rep )
        fail( "a zero representation (ones or zeros) is required" );
      break;
    case adder_function::subtract:
      if ( incoming_carry )
        fail( "incoming carry is not supported" );
      break;
    case adder_function::compare:
      if ( n < 2 )
        fail( "n must be >= 2" );
      if ( in_place )
        fail( "there is no in-place comparator" );
      break;
    case adder_function::carry_network:
      if ( in_place || incoming_carry )
        fail( "takes no in-place or incoming-carry options" );
      break;
    }
  }

  /// Short identifier, e.g. "add-ip-ic", "mersenne-ip-zeros", "compare".
  std::string variant_id() const
  {
    std::string id;
    switch ( function )
    {
    case adder_function::add:
      id = "add";
      break;
    case adder_function::add_mod2n:
      id = "add-mod2n";
      break;
    case adder_function::subtract:
      id = "sub";
      break;
    case adder_function::compare:
      id = "compare";
      break;
    case adder_function::carry_network:
      return "carry-network";
    case adder_function::add_mersenne:
      return std::string( "mersenne-" ) + ( in_place ? "ip-" : "" ) + std::string( to_string( rep.value_or( zero_rep::ones ) ) );
    }
    if ( in_place )
      id += "-ip";
    if ( incoming_carry )
      id += "-ic";
    return id;
  }
};

/// Every variant id, in a fixed order.
inline constexpr std::array<std::string_view, 17> all_variant_ids{
    "add", "add-ip", "add-ic", "add-ip-ic", "add-mod2n", "add-mod2n-ip", "add-mod2n-ic", "add-mod2n-ip-ic", "sub", "sub-ip",
    "compare", "compare-ic", "mersenne-ones", "mersenne-zeros", "mersenne-ip-ones", "mersenne-ip-zeros", "carry-network" };

/// Request for a variant id at width n; throws validation_error for unknown ids.
inline adder_request parse_variant( std::string_view id, std::uint32_t n )
{
  adder_request r;
  r.n = n;
  auto strip_suffix = [&]( std::string_view suffix ) {
    if ( id.size() > suffix.size() && id.substr( id.size() - suffix.size() ) == suffix )
    {
      id.remove_suffix( suffix.size() );
      return true;
    }
    return false;
  };
  if ( id.starts_with( "mersenne-" ) )
  {
    r.function = adder_function::add_mersenne;
    auto rest = id.substr( 9 );
    if ( rest.starts_with( "ip-" ) )
    {
      r.in_place = true;
      rest.remove_prefix( 3 );
    }
    if ( rest == "ones" )
      r.rep = zero_rep::ones;
    else if ( rest == "zeros" )
      r.rep = zero_rep::zeros;
    else
      throw validation_error( "unknown variant '" + std::string( id ) + "'" );
    return r;
  }
  std::string const original( id );
  r.incoming_carry = strip_suffix( "-ic" );
  r.in_place = strip_suffix( "-ip" );
  if ( id == "add" )
    r.function = adder_function::add;
  else if ( id == "add-mod2n" )
    r.function = adder_function::add_mod2n;
  else if ( id == "sub" )
    r.function = adder_function::subtract;
  else if ( id == "compare" )
    r.function = adder_function::compare;
  else if ( id == "carry-network" )
    r.function = adder_function::carry_network;
  else
    throw validation_error( "unknown variant '" + original + "'" );
  if ( r.variant_id() != original )
    throw validation_error( "unknown variant '" + original + "'" );
  return r;
}

/// Text of the variant pragma stored in circuit::variant(): "<id> n=<n>".
inline std::string variant_tag( adder_request const& r )
{
  return r.variant_id() + " n=" + std::to_string( r.n );
}

/// Inverse of variant_tag; nothing when the text is not a well-formed tag.
inline std::optional<adder_request> parse_variant_tag( std::string_view tag )
{
  std::istringstream is{ std::string( tag ) };
  std::string id, width, extra;
  if ( !( is >> id >> width ) || ( is >> extra ) || !width.starts_with( "n=" ) )
    return std::nullopt;
  try
  {
    auto const n = std::stoul( width.substr( 2 ) );
    if ( width.size() == 2 || width.find_first_not_of( "0123456789", 2 ) != std::string::npos || n > 1u << 20 )
      return std::nullopt;
    return parse_variant( id, static_cast<std::uint32_t>( n ) );
  }
  catch ( std::exception const& )
  {
    return std::nullopt;
  }
}

/// Builds the circuit for a validated request and stamps its variant tag.
inline circuit generate( adder_request const& r )
{
  r.validate();
  circuit c = [&] {
    switch ( r.function )
    {
    case adder_function::add:
      return r.in_place ? gen_add_ip( r.n, r.incoming_carry ) : gen_add_oop( r.n, r.incoming_carry );
    case adder_function::add_mod2n:
      return r.in_place ? gen_add_ip( r.n, r.incoming_carry, true ) : gen_add_oop( r.n, r.incoming_carry, true );
    case adder_function::subtract:
      return gen_sub( r.n, r.in_place );
    case adder_function::compare:
      return gen_compare( r.n, r.incoming_carry );
    case adder_function::add_mersenne:
      return gen_add_mersenne( r.n, r.in_place, *r.rep );
    case adder_function::carry_network:
      return build_carry_network( { r.n, network_direction::forward } );
    }
    throw validation_error( "unknown adder function" );
  }();
  c.set_variant( variant_tag( r ) );
  return c;
}

} // namespace qcla
