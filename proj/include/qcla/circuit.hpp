#pragma once

/*!
  \file circuit.hpp
  \brief Classical reversible circuit IR: registers, wires, gates and circuits.

  A circuit is an ordered list of NOT / CNOT / Toffoli gates over a register
  layout. Registers carry a role (input, output, ancilla, carry-in) which the
  simulator and resource accounting use to decide what must be restored and
  what counts as scratch space.
*/

#include <algorithm>
#include <cctype>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcla
{

/// Raised when a circuit, layout, or request violates its structural invariants.
class validation_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

enum class register_role : std::uint8_t
{
  input_a,
  input_b,
  output,
  ancilla,
  carry_in
};

inline std::string_view to_string( register_role role ) noexcept
{
  switch ( role )
  {
  case register_role::input_a:
    return "input-a";
  case register_role::input_b:
    return "input-b";
  case register_role::output:
    return "output";
  case register_role::ancilla:
    return "ancilla";
  case register_role::carry_in:
    return "carry-in";
  }
  return "?";
}

inline std::optional<register_role> parse_register_role( std::string_view s ) noexcept
{
  for ( auto r : { register_role::input_a, register_role::input_b, register_role::output, register_role::ancilla, register_role::carry_in } )
  {
    if ( to_string( r ) == s )
      return r;
  }
  return std::nullopt;
}

struct register_decl
{
  std::string name;
  std::uint32_t size{ 0 };
  register_role role{ register_role::ancilla };

  bool operator==( register_decl const& ) const = default;
};

/// One bit line: register id (position in the layout) and bit index.
struct wire
{
  std::uint32_t reg{ 0 };
  std::uint32_t index{ 0 };

  auto operator<=>( wire const& ) const = default;
};

inline bool is_register_name( std::string_view s ) noexcept
{
  if ( s.empty() || !( std::isalpha( static_cast<unsigned char>( s[0] ) ) || s[0] == '_' ) )
    return false;
  return std::all_of( s.begin(), s.end(), []( char c ) { return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_'; } );
}

class register_layout
{
public:
  /// Appends a register and returns its id.
  std::uint32_t add( std::string name, std::uint32_t size, register_role role )
  {
    if ( !is_register_name( name ) )
      throw validation_error( "invalid register name '" + name + "'" );
    if ( find( name ) )
      throw validation_error( "duplicate register '" + name + "'" );
    if ( role == register_role::carry_in )
    {
      if ( size > 1 )
        throw validation_error( "carry-in register '" + name + "' must have size <= 1" );
      for ( auto const& r : regs_ )
        if ( r.role == register_role::carry_in )
          throw validation_error( "at most one carry-in register is allowed" );
    }
    offsets_.push_back( width_ );
    width_ += size;
    regs_.push_back( { std::move( name ), size, role } );
    return static_cast<std::uint32_t>( regs_.size() - 1 );
  }

  std::vector<register_decl> const& registers() const noexcept { return regs_; }
  register_decl const& operator[]( std::uint32_t reg ) const { return regs_.at( reg ); }
  std::size_t size() const noexcept { return regs_.size(); }

  std::optional<std::uint32_t> find( std::string_view name ) const noexcept
  {
    for ( std::uint32_t i = 0; i < regs_.size(); ++i )
      if ( regs_[i].name == name )
        return i;
    return std::nullopt;
  }

  std::uint32_t id( std::string_view name ) const
  {
    if ( auto r = find( name ) )
      return *r;
    throw validation_error( "unknown register '" + std::string( name ) + "'" );
  }

  wire at( std::string_view name, std::uint32_t index ) const
  {
    wire w{ id( name ), index };
    if ( !contains( w ) )
      throw validation_error( "wire " + std::string( name ) + "[" + std::to_string( index ) + "] out of range" );
    return w;
  }

  bool contains( wire w ) const noexcept { return w.reg < regs_.size() && w.index < regs_[w.reg].size; }

  /// Total number of wires.
  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t offset( std::uint32_t reg ) const { return offsets_.at( reg ); }
  std::uint32_t flat( wire w ) const noexcept { return offsets_[w.reg] + w.index; }

  wire unflat( std::uint32_t pos ) const
  {
    auto it = std::upper_bound( offsets_.begin(), offsets_.end(), pos );
    // zero-size registers share offsets with their successor; step back to the owning one
    while ( it != offsets_.begin() )
    {
      --it;
      auto reg = static_cast<std::uint32_t>( it - offsets_.begin() );
      if ( pos < offsets_[reg] + regs_[reg].size )
        return { reg, pos - offsets_[reg] };
    }
    throw validation_error( "flat wire index out of range" );
  }

  std::uint32_t ancilla_count() const noexcept { return count_role( register_role::ancilla ); }

  std::uint32_t count_role( register_role role ) const noexcept
  {
    std::uint32_t total = 0;
    for ( auto const& r : regs_ )
      if ( r.role == role )
        total += r.size;
    return total;
  }

  std::string wire_name( wire w ) const
  {
    return regs_.at( w.reg ).name + "[" + std::to_string( w.index ) + "]";
  }

  bool operator==( register_layout const& o ) const { return regs_ == o.regs_; }

private:
  std::vector<register_decl> regs_;
  std::vector<std::uint32_t> offsets_;
  std::uint32_t width_{ 0 };
};

enum class gate_kind : std::uint8_t
{
  not_gate,
  cnot,
  toffoli
};

inline std::uint32_t control_count( gate_kind k ) noexcept
{
  return static_cast<std::uint32_t>( k );
}

/// Metadata tag naming the construction step a gate belongs to.
enum class phase : std::uint8_t
{
  none,
  p,
  g,
  c,
  p_inverse,
  init,
  sum,
  fixup,
  negate
};

inline std::string_view to_string( phase ph ) noexcept
{
  switch ( ph )
  {
  case phase::none:
    return "none";
  case phase::p:
    return "P";
  case phase::g:
    return "G";
  case phase::c:
    return "C";
  case phase::p_inverse:
    return "Pinv";
  case phase::init:
    return "init";
  case phase::sum:
    return "sum";
  case phase::fixup:
    return "fixup";
  case phase::negate:
    return "negate";
  }
  return "none";
}

inline std::optional<phase> parse_phase( std::string_view s ) noexcept
{
  for ( auto ph : { phase::p, phase::g, phase::c, phase::p_inverse, phase::init, phase::sum, phase::fixup, phase::negate } )
    if ( to_string( ph ) == s )
      return ph;
  return std::nullopt;
}

struct gate
{
  gate_kind kind{ gate_kind::not_gate };
  std::array<wire, 2> controls{};
  wire target{};
  phase tag{ phase::none };

  static gate make_not( wire t, phase tag = phase::none ) { return { gate_kind::not_gate, {}, t, tag }; }
  static gate make_cnot( wire c, wire t, phase tag = phase::none ) { return { gate_kind::cnot, { c, wire{} }, t, tag }; }
  static gate make_toffoli( wire c0, wire c1, wire t, phase tag = phase::none ) { return { gate_kind::toffoli, { c0, c1 }, t, tag }; }

  std::uint32_t num_controls() const noexcept { return control_count( kind ); }
  std::span<wire const> control_wires() const noexcept { return { controls.data(), num_controls() }; }

  /// Controls followed by the target.
  template<typename Fn>
  void foreach_wire( Fn&& fn ) const
  {
    for ( auto c : control_wires() )
      fn( c );
    fn( target );
  }

  bool touches( wire w ) const noexcept
  {
    return target == w || std::find( control_wires().begin(), control_wires().end(), w ) != control_wires().end();
  }

  /// Structural equality; the phase tag is metadata and ignored.
  bool same_action( gate const& o ) const noexcept
  {
    if ( kind != o.kind || target != o.target )
      return false;
    auto a = control_wires();
    auto b = o.control_wires();
    return std::equal( a.begin(), a.end(), b.begin(), b.end() );
  }
};

/// A barrier opens a named phase starting at gate index `position`.
struct barrier
{
  std::size_t position{ 0 };
  std::string name;

  bool operator==( barrier const& ) const = default;
};

class circuit
{
public:
  circuit() = default;
  explicit circuit( register_layout layout ) : layout_( std::move( layout ) ) {}

  register_layout const& layout() const noexcept { return layout_; }
  std::vector<gate> const& gates() const noexcept { return gates_; }
  std::vector<barrier> const& barriers() const noexcept { return barriers_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  /// Free-form variant identifier carried through the text format (e.g. "add-ip n=8").
  std::string const& variant() const noexcept { return variant_; }
  void set_variant( std::string v ) { variant_ = std::move( v ); }

  void append( gate const& g )
  {
    check_gate( g );
    gates_.push_back( g );
    if ( gates_.back().tag == phase::none )
      gates_.back().tag = current_;
  }

  void add_not( wire t ) { append( gate::make_not( t ) ); }
  void add_cnot( wire c, wire t ) { append( gate::make_cnot( c, t ) ); }
  void add_toffoli( wire c0, wire c1, wire t ) { append( gate::make_toffoli( c0, c1, t ) ); }

  template<typename Range>
  void append_all( Range const& gs )
  {
    for ( auto const& g : gs )
      append( g );
  }

  /// Inserts a barrier at the current end and tags subsequent gates with `ph`.
  void begin_phase( phase ph, std::string name = {} )
  {
    add_barrier( name.empty() ? std::string( to_string( ph ) ) : std::move( name ) );
    current_ = ph;
  }

  void add_barrier( std::string name )
  {
    if ( !is_register_name( name ) )
      throw validation_error( "invalid barrier name '" + name + "'" );
    barriers_.push_back( { gates_.size(), std::move( name ) } );
  }

  void set_current_phase( phase ph ) noexcept { current_ = ph; }

  /// First barrier with the given name, if any.
  std::optional<std::size_t> barrier_position( std::string_view name ) const noexcept
  {
    for ( auto const& b : barriers_ )
      if ( b.name == name )
        return b.position;
    return std::nullopt;
  }

  void check_gate( gate const& g ) const
  {
    bool ok = true;
    g.foreach_wire( [&]( wire w ) { ok = ok && layout_.contains( w ); } );
    if ( !ok )
      throw validation_error( "gate references a wire outside the layout" );
    auto cs = g.control_wires();
    for ( std::size_t i = 0; i < cs.size(); ++i )
    {
      if ( cs[i] == g.target )
        throw validation_error( "gate control equals its target " + layout_.wire_name( g.target ) );
      for ( std::size_t j = i + 1; j < cs.size(); ++j )
        if ( cs[i] == cs[j] )
          throw validation_error( "gate has duplicate control " + layout_.wire_name( cs[i] ) );
    }
  }

  /// Full structural validation: wires in range, distinct wires per gate, ordered barriers.
  void validate() const
  {
    for ( auto const& g : gates_ )
      check_gate( g );
    std::size_t last = 0;
    for ( auto const& b : barriers_ )
    {
      if ( b.position < last || b.position > gates_.size() )
        throw validation_error( "barrier '" + b.name + "' out of order or out of bounds" );
      last = b.position;
    }
  }

private:
  register_layout layout_;
  std::vector<gate> gates_;
  std::vector<barrier> barriers_;
  std::string variant_;
  phase current_{ phase::none };
};

/// Convenience: all wires of a register, in index order.
inline std::vector<wire> register_wires( register_layout const& layout, std::uint32_t reg )
{
  std::vector<wire> ws;
  ws.reserve( layout[reg].size );
  for ( std::uint32_t i = 0; i < layout[reg].size; ++i )
    ws.push_back( { reg, i } );
  return ws;
}

} // namespace qcla
