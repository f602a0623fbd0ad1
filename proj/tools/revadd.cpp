#include <revadd/commands.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace
{

auto const structure_names = CLI::IsMember( { "original", "optimized" } );
auto const ladder_names = CLI::IsMember( { "linear", "polylog", "carrylog" } );

/// Writes to `path`, or to stdout when empty.
class Output
{
public:
  explicit Output( std::string const& path )
  {
    if ( !path.empty() )
    {
      file_ = std::make_unique<std::ofstream>( path );
      if ( !*file_ )
        throw revadd::usage_error( "cannot open '" + path + "' for writing" );
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
  std::unique_ptr<std::ofstream> file_;
};

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Toffoli-ladder and quantum adder synthesis, verification and resource reports" };
  app.require_subcommand( 1 );

  revadd::SynthRequest synth;
  std::string synth_out, synth_metrics, synth_structure = "optimized", synth_ladder = "carrylog";
  auto* synth_cmd = app.add_subcommand( "synth", "Emit a ladder or adder circuit" );
  synth_cmd->add_option( "--kind", synth.kind, "adder | l2-linear | l2-polylog | l2-carrylog | l1-linear | l1-log" )
      ->check( CLI::IsMember( { "adder", "l2-linear", "l2-polylog", "l2-carrylog", "l1-linear", "l1-log" } ) );
  synth_cmd->add_option( "--n", synth.n, "Operand width (adders) or ladder size (ladders)" )->required();
  synth_cmd->add_option( "--structure", synth_structure, "original | optimized" )->check( structure_names );
  synth_cmd->add_option( "--ladder", synth_ladder, "linear | polylog | carrylog" )->check( ladder_names );
  synth_cmd->add_option( "--format", synth.format, "revq | qasm3" )->check( CLI::IsMember( { "revq", "qasm3" } ) );
  synth_cmd->add_option( "--out", synth_out, "Output file (default: stdout)" );
  synth_cmd->add_option( "--metrics", synth_metrics, "Also write JSON metrics to this file" );

  revadd::VerifyRequest verify;
  std::string verify_structure = "optimized", verify_ladder = "carrylog";
  auto* verify_cmd = app.add_subcommand( "verify", "Check an adder against integer addition; JSON verdict on stdout" );
  verify_cmd->add_option( "--n", verify.n, "Operand width" )->required();
  verify_cmd->add_option( "--structure", verify_structure, "original | optimized" )->check( structure_names );
  verify_cmd->add_option( "--ladder", verify_ladder, "linear | polylog | carrylog" )->check( ladder_names );
  verify_cmd->add_option( "--mode", verify.mode, "exhaustive | random" )
      ->check( CLI::IsMember( { "exhaustive", "random" } ) );
  verify_cmd->add_option( "--samples", verify.samples, "Random samples" );
  verify_cmd->add_option( "--seed", verify.seed, "Random seed" );
  verify_cmd->add_option( "--workers", verify.workers, "Worker threads (0: hardware concurrency)" );

  std::string range = "2..8", csv_path;
  auto* report_cmd = app.add_subcommand( "report", "CSV resource report for all six adders" );
  report_cmd->add_option( "--n-range", range, "LO..HI" );
  report_cmd->add_option( "--csv", csv_path, "Output file (default: stdout)" );

  auto* identities_cmd = app.add_subcommand( "identities", "Check the circuit identities used by the adder structures" );

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
    return revadd::exit_usage;
  }

  synth.structure = *revadd::structure_from_string( synth_structure );
  synth.ladder = *revadd::ladder_from_string( synth_ladder );
  verify.structure = *revadd::structure_from_string( verify_structure );
  verify.ladder = *revadd::ladder_from_string( verify_ladder );

  try
  {
    if ( *synth_cmd )
    {
      Output out( synth_out );
      if ( synth_metrics.empty() )
        return revadd::cmd_synth( synth, out.stream() );
      Output metrics( synth_metrics );
      return revadd::cmd_synth( synth, out.stream(), &metrics.stream() );
    }
    if ( *verify_cmd )
      return revadd::cmd_verify( verify, std::cout );
    if ( *report_cmd )
    {
      auto const [lo, hi] = revadd::parse_range( range );
      Output out( csv_path );
      return revadd::cmd_report( lo, hi, out.stream() );
    }
    if ( *identities_cmd )
      return revadd::cmd_identities( std::cout );
  }
  catch ( revadd::usage_error const& e )
  {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return revadd::exit_usage;
  }
  catch ( revadd::capacity_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return revadd::exit_usage;
  }
  catch ( revadd::error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return revadd::exit_failure;
  }
  return revadd::exit_usage;
}
