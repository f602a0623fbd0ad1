#pragma once

// Command implementations behind the revadd CLI. Each returns a process exit code.

#include "adders.hpp"
#include "analysis.hpp"
#include "io.hpp"
#include "ladders.hpp"
#include "report.hpp"
#include "simulation.hpp"

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace revadd
{

enum ExitCode : int
{
  exit_ok = 0,
  exit_failure = 1,
  exit_usage = 2
};

/// Raised for flag combinations the commands reject; maps to exit code 2.
class usage_error : public error
{
public:
  using error::error;
};

struct SynthRequest
{
  std::string kind{ "adder" }; // adder | l2-linear | l2-polylog | l2-carrylog | l1-linear | l1-log
  std::size_t n{ 0 };
  Structure structure{ Structure::Optimized };
  LadderKind ladder{ LadderKind::CarryLog };
  std::string format{ "revq" }; // revq | qasm3
};

struct SynthResult
{
  Circuit circuit;
  std::vector<std::string> header;
};

/// For l2-* kinds `n` is the ladder size (L2 of size n); for adders it is the operand width.
inline SynthResult synthesize( SynthRequest const& req )
{
  if ( req.n == 0 )
    throw usage_error( "--n must be at least 1" );

  SynthResult out;
  auto const n_str = std::to_string( req.n );
  if ( req.kind == "adder" )
  {
    auto adder = build_adder( { req.n, req.structure, req.ladder } );
    out.header.push_back( "revadd adder n=" + n_str + " structure=" + std::string( to_string( req.structure ) ) +
                          " ladder=" + std::string( to_string( req.ladder ) ) );
    out.header.push_back( "provenance: " + std::string( adder.provenance ) );
    out.circuit = std::move( adder.circuit );
  }
  else if ( req.kind == "l2-linear" )
    out.circuit = build_l2_linear( req.n );
  else if ( req.kind == "l2-polylog" )
    out.circuit = build_l2_polylog( req.n );
  else if ( req.kind == "l2-carrylog" )
    out.circuit = build_l2_carry_log( req.n + 1 );
  else if ( req.kind == "l1-linear" )
    out.circuit = build_l1_linear( req.n );
  else if ( req.kind == "l1-log" )
    out.circuit = build_l1_log( req.n );
  else
    throw usage_error( "unknown --kind '" + req.kind + "'" );

  if ( out.header.empty() )
    out.header.push_back( "revadd " + req.kind + " n=" + n_str );
  if ( req.format != "revq" && req.format != "qasm3" )
    throw usage_error( "unknown --format '" + req.format + "'" );
  return out;
}

inline int cmd_synth( SynthRequest const& req, std::ostream& out, std::ostream* metrics_out = nullptr )
{
  auto const result = synthesize( req );
  if ( req.format == "qasm3" )
    write_qasm3( out, result.circuit, result.header );
  else
    write_revq( out, result.circuit, result.header );
  if ( metrics_out )
    *metrics_out << to_json( metrics( result.circuit ) ).dump( 2 ) << '\n';
  return exit_ok;
}

struct VerifyRequest
{
  std::size_t n{ 0 };
  Structure structure{ Structure::Optimized };
  LadderKind ladder{ LadderKind::CarryLog };
  std::string mode{ "exhaustive" }; // exhaustive | random
  std::uint64_t samples{ 1000 };
  std::uint64_t seed{ 0 };
  unsigned workers{ 0 };
};

inline int cmd_verify( VerifyRequest const& req, std::ostream& out )
{
  if ( req.n == 0 )
    throw usage_error( "--n must be at least 1" );
  CheckMode mode;
  if ( req.mode == "exhaustive" )
  {
    if ( 2 * req.n + 1 > exhaustive_max_free_wires )
      throw capacity_error( "exhaustive verification of n=" + std::to_string( req.n ) + " needs " +
                            std::to_string( 2 * req.n + 1 ) + " free wires (limit " +
                            std::to_string( exhaustive_max_free_wires ) + "); use --mode random" );
    mode = Exhaustive{};
  }
  else if ( req.mode == "random" )
    mode = RandomSampling{ req.samples, req.seed };
  else
    throw usage_error( "unknown --mode '" + req.mode + "'" );

  AdderConfig const cfg{ req.n, req.structure, req.ladder };
  auto const adder = build_adder( cfg );
  auto const free = adder.layout.data_wires();
  auto const verdict = check_equivalence( adder.circuit, adder_oracle( adder ), mode, free, req.workers );
  out << to_json( verdict, describe( cfg ), req.n, req.mode ).dump() << '\n';
  return verdict.equivalent ? exit_ok : exit_failure;
}

/// Parses "LO..HI" (or a single "N").
inline std::pair<std::size_t, std::size_t> parse_range( std::string_view text )
{
  auto const to_int = [&]( std::string_view s ) {
    std::size_t v = 0;
    auto const [ptr, ec] = std::from_chars( s.data(), s.data() + s.size(), v );
    if ( s.empty() || ec != std::errc{} || ptr != s.data() + s.size() )
      throw usage_error( "bad range '" + std::string( text ) + "', expected LO..HI" );
    return v;
  };
  std::pair<std::size_t, std::size_t> r;
  if ( auto const dots = text.find( ".." ); dots != std::string_view::npos )
    r = { to_int( text.substr( 0, dots ) ), to_int( text.substr( dots + 2 ) ) };
  else
    r = { to_int( text ), to_int( text ) };
  if ( r.first < 2 || r.second < r.first )
    throw usage_error( "bad range '" + std::string( text ) + "', need 2 <= LO <= HI" );
  return r;
}

inline int cmd_report( std::size_t lo, std::size_t hi, std::ostream& out )
{
  if ( lo < 2 || hi < lo )
    throw usage_error( "bad range, need 2 <= LO <= HI" );
  auto const rows = build_report( lo, hi );
  write_report_csv( out, rows );
  for ( auto const& r : rows )
  {
    if ( r.formula_pass && !*r.formula_pass )
      return exit_failure;
  }
  return exit_ok;
}

inline int cmd_identities( std::vector<IdentityFixture> const& fixtures, std::ostream& out )
{
  std::size_t passed = 0;
  for ( auto const& f : fixtures )
  {
    auto const r = check_identity( f );
    out << ( r.equal ? "pass " : "FAIL " ) << r.name << " (" << r.cases << " inputs";
    if ( r.ancillas > 0 )
      out << ", " << r.ancillas << " ancilla at 0";
    out << ")";
    if ( r.counterexample )
      out << " counterexample input " << bits_to_string( *r.counterexample );
    out << '\n';
    passed += r.equal ? 1 : 0;
  }
  out << passed << "/" << fixtures.size() << " identities hold\n";
  return passed == fixtures.size() ? exit_ok : exit_failure;
}

inline int cmd_identities( std::ostream& out ) { return cmd_identities( identity_fixtures(), out ); }

} // namespace revadd
