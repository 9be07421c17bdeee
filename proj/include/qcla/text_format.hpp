#pragma once

/*!
  \file text_format.hpp
  \brief Native line-oriented circuit format (read/write) and OpenQASM 2.0 export.

  Native format:

      # variant add n=4
      reg A 4 input-a
      reg B 4 input-b
      barrier P
      not A[0]
      cnot A[0] B[0]
      ccx A[0] B[0] Z[1]

  Register lines must precede gate and barrier lines. A barrier whose name is
  a phase name (P, G, C, Pinv, init, sum, fixup, negate) tags the following
  gates with that phase.
*/

#include "circuit.hpp"

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcla
{

/// Raised by the native-format parser; carries the 1-based offending line.
class parse_error : public std::runtime_error
{
public:
  parse_error( std::size_t line, std::string const& msg )
      : std::runtime_error( "line " + std::to_string( line ) + ": " + msg ), line_( line ) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

inline void write_native( std::ostream& os, circuit const& c )
{
  if ( !c.variant().empty() )
    os << "# variant " << c.variant() << '\n';
  auto const& layout = c.layout();
  for ( auto const& r : layout.registers() )
    os << "reg " << r.name << ' ' << r.size << ' ' << to_string( r.role ) << '\n';

  auto const& bs = c.barriers();
  std::size_t next_barrier = 0;
  auto flush_barriers = [&]( std::size_t pos ) {
    while ( next_barrier < bs.size() && bs[next_barrier].position == pos )
      os << "barrier " << bs[next_barrier++].name << '\n';
  };
  for ( std::size_t i = 0; i < c.gates().size(); ++i )
  {
    flush_barriers( i );
    auto const& g = c.gates()[i];
    switch ( g.kind )
    {
    case gate_kind::not_gate:
      os << "not";
      break;
    case gate_kind::cnot:
      os << "cnot";
      break;
    case gate_kind::toffoli:
      os << "ccx";
      break;
    }
    g.foreach_wire( [&]( wire w ) { os << ' ' << layout.wire_name( w ); } );
    os << '\n';
  }
  flush_barriers( c.gates().size() );
}

inline std::string to_native( circuit const& c )
{
  std::ostringstream os;
  write_native( os, c );
  return os.str();
}

namespace detail
{

inline std::vector<std::string_view> split_ws( std::string_view s )
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while ( i < s.size() )
  {
    while ( i < s.size() && ( s[i] == ' ' || s[i] == '\t' || s[i] == '\r' ) )
      ++i;
    auto j = i;
    while ( j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r' )
      ++j;
    if ( j > i )
      out.push_back( s.substr( i, j - i ) );
    i = j;
  }
  return out;
}

inline bool parse_u32( std::string_view s, std::uint32_t& v )
{
  if ( s.empty() || s.size() > 10 )
    return false;
  auto [p, ec] = std::from_chars( s.data(), s.data() + s.size(), v );
  return ec == std::errc{} && p == s.data() + s.size();
}

} // namespace detail

/// Strict parser for the native format. Any unknown token is an error.
inline circuit read_native( std::istream& is )
{
  register_layout layout;
  std::string variant;
  std::string raw;
  std::size_t lineno = 0;
  bool body_started = false;

  struct body_line
  {
    std::size_t line;
    std::string text;
  };
  std::vector<body_line> body;

  while ( std::getline( is, raw ) )
  {
    ++lineno;
    std::string_view line = raw;
    if ( auto h = line.find( '#' ); h != std::string_view::npos )
    {
      auto comment = detail::split_ws( line.substr( h + 1 ) );
      if ( comment.size() >= 2 && comment[0] == "variant" && variant.empty() )
      {
        auto rest = line.substr( h + 1 );
        rest.remove_prefix( rest.find( "variant" ) + 7 );
        while ( !rest.empty() && ( rest.front() == ' ' || rest.front() == '\t' ) )
          rest.remove_prefix( 1 );
        while ( !rest.empty() && ( rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\r' ) )
          rest.remove_suffix( 1 );
        variant = std::string( rest );
      }
      line = line.substr( 0, h );
    }
    auto tok = detail::split_ws( line );
    if ( tok.empty() )
      continue;
    if ( tok[0] == "reg" )
    {
      if ( body_started )
        throw parse_error( lineno, "register declared after the first gate or barrier" );
      if ( tok.size() != 4 )
        throw parse_error( lineno, "expected 'reg <name> <size> <role>'" );
      std::uint32_t size = 0;
      if ( !detail::parse_u32( tok[2], size ) )
        throw parse_error( lineno, "invalid register size '" + std::string( tok[2] ) + "'" );
      auto role = parse_register_role( tok[3] );
      if ( !role )
        throw parse_error( lineno, "unknown register role '" + std::string( tok[3] ) + "'" );
      try
      {
        layout.add( std::string( tok[1] ), size, *role );
      }
      catch ( validation_error const& e )
      {
        throw parse_error( lineno, e.what() );
      }
      continue;
    }
    body_started = true;
    body.push_back( { lineno, std::string( line ) } );
  }

  circuit c( layout );
  c.set_variant( variant );

  auto parse_wire = [&]( std::string_view s, std::size_t ln ) {
    auto lb = s.find( '[' );
    if ( lb == std::string_view::npos || s.back() != ']' || lb == 0 )
      throw parse_error( ln, "malformed wire '" + std::string( s ) + "'" );
    auto name = s.substr( 0, lb );
    std::uint32_t idx = 0;
    if ( !detail::parse_u32( s.substr( lb + 1, s.size() - lb - 2 ), idx ) )
      throw parse_error( ln, "malformed wire index in '" + std::string( s ) + "'" );
    auto reg = layout.find( name );
    if ( !reg )
      throw parse_error( ln, "unknown register '" + std::string( name ) + "'" );
    wire w{ *reg, idx };
    if ( !layout.contains( w ) )
      throw parse_error( ln, "wire '" + std::string( s ) + "' out of range" );
    return w;
  };

  for ( auto const& [ln, text] : body )
  {
    auto tok = detail::split_ws( text );
    auto const& op = tok[0];
    try
    {
      if ( op == "barrier" )
      {
        if ( tok.size() != 2 )
          throw parse_error( ln, "expected 'barrier <name>'" );
        c.add_barrier( std::string( tok[1] ) );
        c.set_current_phase( parse_phase( tok[1] ).value_or( phase::none ) );
      }
      else if ( op == "not" )
      {
        if ( tok.size() != 2 )
          throw parse_error( ln, "'not' takes one wire" );
        c.add_not( parse_wire( tok[1], ln ) );
      }
      else if ( op == "cnot" )
      {
        if ( tok.size() != 3 )
          throw parse_error( ln, "'cnot' takes two wires" );
        c.add_cnot( parse_wire( tok[1], ln ), parse_wire( tok[2], ln ) );
      }
      else if ( op == "ccx" )
      {
        if ( tok.size() != 4 )
          throw parse_error( ln, "'ccx' takes three wires" );
        c.add_toffoli( parse_wire( tok[1], ln ), parse_wire( tok[2], ln ), parse_wire( tok[3], ln ) );
      }
      else
      {
        throw parse_error( ln, "unknown token '" + std::string( op ) + "'" );
      }
    }
    catch ( validation_error const& e )
    {
      throw parse_error( ln, e.what() );
    }
  }
  return c;
}

inline circuit from_native( std::string const& text )
{
  std::istringstream is( text );
  return read_native( is );
}

/// OpenQASM 2.0: one qreg per non-empty register, x / cx / ccx gates, barriers as comments.
inline void write_qasm( std::ostream& os, circuit const& c )
{
  auto const& layout = c.layout();
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if ( !c.variant().empty() )
    os << "// variant " << c.variant() << '\n';
  for ( auto const& r : layout.registers() )
    if ( r.size > 0 )
      os << "qreg " << r.name << '[' << r.size << "]; // " << to_string( r.role ) << '\n';

  auto const& bs = c.barriers();
  std::size_t next_barrier = 0;
  auto flush_barriers = [&]( std::size_t pos ) {
    while ( next_barrier < bs.size() && bs[next_barrier].position == pos )
      os << "// barrier " << bs[next_barrier++].name << '\n';
  };
  for ( std::size_t i = 0; i < c.gates().size(); ++i )
  {
    flush_barriers( i );
    auto const& g = c.gates()[i];
    static constexpr char const* names[] = { "x", "cx", "ccx" };
    os << names[static_cast<int>( g.kind )];
    char sep = ' ';
    g.foreach_wire( [&]( wire w ) {
      os << sep << layout.wire_name( w );
      sep = ',';
    } );
    os << ";\n";
  }
  flush_barriers( c.gates().size() );
}

inline std::string to_qasm( circuit const& c )
{
  std::ostringstream os;
  write_qasm( os, c );
  return os.str();
}

} // namespace qcla
