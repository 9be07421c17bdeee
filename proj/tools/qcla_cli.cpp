// qcla: generate, simulate, measure and verify carry-lookahead circuits.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 I/O or parse error.

#include <qcla/qcla.hpp>
#include <qcla/report_json.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

struct usage_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct variant_flags
{
  std::string circuit;
  std::uint32_t n{ 0 };
  bool in_place{ false };
  bool incoming_carry{ false };
  std::string zero_rep;
};

qcla::adder_request make_request( variant_flags const& f )
{
  auto fn = qcla::parse_adder_function( f.circuit );
  qcla::adder_request r;
  if ( fn )
  {
    r.function = *fn;
    r.in_place = f.in_place;
    r.incoming_carry = f.incoming_carry;
    if ( !f.zero_rep.empty() )
      r.rep = f.zero_rep == "zeros" ? qcla::zero_rep::zeros : qcla::zero_rep::ones;
    else if ( r.function == qcla::adder_function::add_mersenne )
      r.rep = qcla::zero_rep::ones;
  }
  else
  {
    // a full variant id such as "add-ip-ic" or "mersenne-ip-zeros"
    try
    {
      r = qcla::parse_variant( f.circuit, f.n );
    }
    catch ( qcla::validation_error const& )
    {
      throw usage_error( "unknown circuit '" + f.circuit + "'" );
    }
    if ( f.in_place || f.incoming_carry || !f.zero_rep.empty() )
      throw usage_error( "variant id '" + f.circuit + "' already fixes the in-place / carry / zero-rep options" );
  }
  r.n = f.n;
  try
  {
    r.validate();
  }
  catch ( qcla::validation_error const& e )
  {
    throw usage_error( e.what() );
  }
  return r;
}

qcla::big_uint parse_operand( std::string const& text, char const* name )
{
  bool const hex = text.size() > 2 && text[0] == '0' && ( text[1] == 'x' || text[1] == 'X' );
  auto const digits = hex ? text.substr( 2 ) : text;
  bool ok = !digits.empty();
  for ( char ch : digits )
    ok = ok && ( hex ? std::isxdigit( static_cast<unsigned char>( ch ) ) : std::isdigit( static_cast<unsigned char>( ch ) ) );
  if ( !ok )
    throw usage_error( std::string( "--" ) + name + ": expected a decimal or 0x-prefixed hex integer, got '" + text + "'" );
  return qcla::big_uint( hex ? "0x" + digits : digits );
}

std::string to_bits( qcla::big_uint const& v, std::uint32_t width )
{
  std::string s;
  for ( std::uint32_t i = width; i-- > 0; )
    s += boost::multiprecision::bit_test( v, i ) ? '1' : '0';
  return s;
}

qcla::circuit load_circuit( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw io_error( "cannot open '" + path + "'" );
  return qcla::read_native( in );
}

int cmd_gen( variant_flags const& f, std::string const& format, std::string const& out, bool invert )
{
  auto const r = make_request( f );
  auto c = qcla::generate( r );
  if ( invert )
  {
    auto tag = c.variant();
    c = qcla::invert( c );
    c.set_variant( tag + " inverted" );
  }
  std::ostringstream os;
  if ( format == "qasm" )
    qcla::write_qasm( os, c );
  else
    qcla::write_native( os, c );

  if ( out.empty() || out == "-" )
  {
    std::cout << os.str();
    return exit_ok;
  }
  std::ofstream file( out, std::ios::binary );
  if ( !file || !( file << os.str() ) || !file.flush() )
    throw io_error( "cannot write '" + out + "'" );
  return exit_ok;
}

struct sim_options
{
  std::string file;
  std::string a{ "0" }, b{ "0" };
  unsigned y{ 0 };
  bool bits{ false };
  bool exhaustive{ false };
  std::string variant;
};

int cmd_sim( sim_options const& o )
{
  auto const c = load_circuit( o.file );
  qcla::adder_request r;
  if ( !o.variant.empty() )
  {
    auto parsed = qcla::parse_variant_tag( o.variant );
    if ( !parsed )
      throw usage_error( "--variant expects '<id> n=<n>', got '" + o.variant + "'" );
    r = *parsed;
  }
  else
  {
    auto parsed = qcla::parse_variant_tag( c.variant() );
    if ( !parsed )
      throw usage_error( "circuit has no usable variant tag; pass --variant '<id> n=<n>'" );
    r = *parsed;
  }

  if ( o.exhaustive )
  {
    if ( r.n > qcla::exhaustive_width_limit )
      throw usage_error( "--exhaustive is limited to n <= " + std::to_string( qcla::exhaustive_width_limit ) );
    auto const res = qcla::exhaustive_check( c, r );
    if ( res.pass )
    {
      std::cout << "pass (" << res.inputs << " inputs)\n";
      return exit_ok;
    }
    std::cout << "FAIL after " << res.inputs << " inputs: " << res.first_failure->describe() << '\n';
    return exit_mismatch;
  }

  qcla::operand_assignment ops{ parse_operand( o.a, "a" ), parse_operand( o.b, "b" ), o.y };
  auto const lim = qcla::big_uint( 1 ) << r.n;
  if ( ops.a >= lim || ops.b >= lim )
    throw usage_error( "operands must be below 2^" + std::to_string( r.n ) );
  if ( o.y > 1 )
    throw usage_error( "--y must be 0 or 1" );
  if ( o.y && !c.layout().find( "Y" ) )
    throw usage_error( "--y given but the circuit has no carry-in register" );

  auto const res = qcla::run_operands( c, r, ops );
  auto const& layout = c.layout();
  for ( auto const& decl : layout.registers() )
  {
    bool const written = decl.role == qcla::register_role::output || ( decl.role == qcla::register_role::input_b && r.in_place );
    if ( !written || decl.size == 0 )
      continue;
    auto const& v = res.registers.at( decl.name );
    std::cout << decl.name << '=' << ( o.bits ? to_bits( v, decl.size ) : v.str() ) << ' ';
  }
  std::cout << "restored=" << ( res.restored ? "true" : "false" ) << " clean=" << ( res.clean ? "true" : "false" ) << '\n';
  return exit_ok;
}

int cmd_stats( std::string const& file, bool json )
{
  auto const c = load_circuit( file );
  auto const rep = qcla::measure_resources( c );
  if ( json )
  {
    auto doc = qcla::to_json( rep );
    doc["variant"] = c.variant();
    std::cout << doc.dump( 2 ) << '\n';
    return exit_ok;
  }
  if ( !c.variant().empty() )
    std::cout << "variant: " << c.variant() << '\n';
  std::cout << "toffoli_count: " << rep.toffoli_count << '\n'
            << "cnot_count: " << rep.cnot_count << '\n'
            << "not_count: " << rep.not_count << '\n'
            << "total_slices: " << rep.total_slices << '\n'
            << "toffoli_slices: " << rep.toffoli_slices << '\n'
            << "ancilla_count: " << rep.ancilla_count << '\n';
  return exit_ok;
}

std::pair<std::uint32_t, std::uint32_t> parse_range( std::string const& text )
{
  auto parse = [&]( std::string const& s ) {
    if ( s.empty() || s.size() > 7 || !std::all_of( s.begin(), s.end(), []( char ch ) { return std::isdigit( static_cast<unsigned char>( ch ) ); } ) )
      throw usage_error( "--range expects 'a..b' or 'n', got '" + text + "'" );
    return static_cast<std::uint32_t>( std::stoul( s ) );
  };
  auto const dots = text.find( ".." );
  auto const lo = parse( dots == std::string::npos ? text : text.substr( 0, dots ) );
  auto const hi = dots == std::string::npos ? lo : parse( text.substr( dots + 2 ) );
  if ( lo > hi || lo < 1 )
    throw usage_error( "--range must satisfy 1 <= a <= b" );
  return { lo, hi };
}

int cmd_verify( variant_flags f, std::string const& range, bool json )
{
  auto const [lo, hi] = parse_range( range );
  f.n = lo;
  auto const first = make_request( f );
  auto const id = first.variant_id();
  for ( auto n = lo; n <= hi; ++n )
  {
    f.n = n;
    make_request( f ); // width-specific preconditions
  }

  auto const report = qcla::verify_family( id, lo, hi );
  bool pass = report.pass();

  nlohmann::json exhaustive = nlohmann::json::array();
  std::ostringstream text;
  for ( auto n = lo; n <= std::min<std::uint32_t>( hi, 8 ); ++n )
  {
    auto const res = qcla::exhaustive_check( qcla::parse_variant( id, n ) );
    pass = pass && res.pass;
    nlohmann::json rec{ { "variant", id }, { "n", n }, { "pass", res.pass }, { "inputs", res.inputs } };
    text << id << " n=" << n << ": exhaustive " << ( res.pass ? "pass" : "FAIL" ) << " (" << res.inputs << " inputs)";
    if ( res.first_failure )
    {
      rec["counterexample"] = res.first_failure->describe();
      text << " first counterexample: " << res.first_failure->describe();
    }
    text << '\n';
    exhaustive.push_back( std::move( rec ) );
  }

  if ( json )
  {
    auto doc = qcla::to_json( report );
    doc["exhaustive"] = exhaustive;
    doc["pass"] = pass;
    std::cout << doc.dump( 2 ) << '\n';
  }
  else
  {
    std::cout << qcla::format_report_text( report ) << text.str() << ( pass ? "verify: pass" : "verify: FAIL" ) << '\n';
  }
  return pass ? exit_ok : exit_mismatch;
}

void add_variant_flags( CLI::App* cmd, variant_flags& f, bool need_n )
{
  cmd->add_flag( "--in-place", f.in_place, "Overwrite B with the result" );
  cmd->add_flag( "--incoming-carry", f.incoming_carry, "Add a carry-in bit Y" );
  cmd->add_option( "--zero-rep", f.zero_rep, "Zero representation for add-mersenne" )->check( CLI::IsMember( { "ones", "zeros" } ) );
  if ( need_n )
    cmd->add_option( "--n", f.n, "Operand width in bits" )->required()->check( CLI::Range( 1u, 1u << 16 ) );
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Carry-lookahead reversible adder toolkit" };
  app.require_subcommand( 1 );

  variant_flags gen_flags;
  std::string format = "native", out;
  bool invert = false;
  auto* gen = app.add_subcommand( "gen", "Generate a circuit" );
  gen->add_option( "--circuit", gen_flags.circuit,
                   "add | add-mod2n | add-mersenne | subtract | compare | carry-network, or a variant id" )
      ->required();
  add_variant_flags( gen, gen_flags, true );
  gen->add_option( "--format", format, "Output format" )->check( CLI::IsMember( { "native", "qasm" } ) );
  gen->add_option( "-o,--output", out, "Output file (default stdout)" );
  gen->add_flag( "--invert", invert, "Emit the inverse circuit" );

  sim_options so;
  auto* sim = app.add_subcommand( "sim", "Simulate a circuit file on operands" );
  sim->add_option( "file", so.file, "Native circuit file" )->required();
  sim->add_option( "--a", so.a, "Operand a (decimal or 0x hex)" );
  sim->add_option( "--b", so.b, "Operand b (decimal or 0x hex)" );
  sim->add_option( "--y", so.y, "Carry-in bit" );
  sim->add_flag( "--bits", so.bits, "Print outputs as bit strings, most significant bit first" );
  sim->add_flag( "--exhaustive", so.exhaustive, "Check every input against the oracle" );
  sim->add_option( "--variant", so.variant, "Override the file's variant tag, e.g. 'add-ip n=8'" );

  std::string stats_file;
  bool stats_json = false;
  auto* stats = app.add_subcommand( "stats", "Resource counts and depth of a circuit file" );
  stats->add_option( "file", stats_file, "Native circuit file" )->required();
  stats->add_flag( "--json", stats_json, "Machine-readable output" );

  variant_flags ver_flags;
  std::string range;
  bool ver_json = false;
  auto* verify = app.add_subcommand( "verify", "Compare a circuit family against the closed-form formulas" );
  verify->add_option( "--family", ver_flags.circuit, "Circuit name or variant id" )->required();
  verify->add_option( "--range", range, "Width range a..b" )->required();
  add_variant_flags( verify, ver_flags, false );
  verify->add_flag( "--json", ver_json, "Machine-readable output" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::CallForHelp const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::CallForAllHelp const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e );
    return exit_usage;
  }

  try
  {
    if ( *gen )
      return cmd_gen( gen_flags, format, out, invert );
    if ( *sim )
      return cmd_sim( so );
    if ( *stats )
      return cmd_stats( stats_file, stats_json );
    if ( *verify )
      return cmd_verify( ver_flags, range, ver_json );
  }
  catch ( usage_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( qcla::validation_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( qcla::parse_error const& e )
  {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_io;
  }
  catch ( io_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_io;
  }
  return exit_usage;
}
