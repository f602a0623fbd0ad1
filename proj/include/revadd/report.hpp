#pragma once

#include "adders.hpp"
#include "analysis.hpp"
#include "simulation.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace revadd
{

inline std::string bits_to_string( Assignment const& s )
{
  std::string out;
  out.reserve( s.size() );
  for ( auto b : s )
    out.push_back( b ? '1' : '0' );
  return out;
}

inline nlohmann::ordered_json to_json( Metrics const& m )
{
  nlohmann::ordered_json j;
  j["total_gates"] = m.total_gates;
  j["x"] = m.x_count;
  j["cnot"] = m.cnot_count;
  j["toffoli"] = m.toffoli_count;
  j["mcx"] = m.mcx_count;
  auto& hist = j["mcx_histogram"] = nlohmann::ordered_json::object();
  for ( auto const& [controls, count] : m.mcx_histogram )
    hist[std::to_string( controls )] = count;
  j["control_endpoints"] = m.control_endpoints;
  j["x_depth"] = m.x_depth;
  j["cnot_depth"] = m.cnot_depth;
  j["toffoli_depth"] = m.toffoli_depth;
  j["mcx_depth"] = m.mcx_depth;
  j["mcx_layers"] = m.mcx_layer_count;
  j["gate_depth"] = m.gate_depth;
  j["wires"] = m.total_wires;
  j["ancilla"] = m.ancilla_count;
  j["model_toffoli"] = model_toffoli_count( m );
  return j;
}

/// Verdict document; the counterexample is the input bit string in wire order.
inline nlohmann::ordered_json to_json( Verdict const& v, std::string_view config, std::size_t n, std::string_view mode )
{
  nlohmann::ordered_json j;
  j["config"] = config;
  j["n"] = n;
  j["mode"] = mode;
  j["seed"] = v.seed ? nlohmann::ordered_json( *v.seed ) : nlohmann::ordered_json( nullptr );
  j["cases_checked"] = v.cases_checked;
  j["equivalent"] = v.equivalent;
  j["counterexample"] = v.counterexample ? nlohmann::ordered_json( bits_to_string( *v.counterexample ) )
                                         : nlohmann::ordered_json( nullptr );
  return j;
}

/* CSV conformance report */

/// Closed-form claim that applies to an adder configuration, if any.
inline std::optional<FormulaKind> adder_formula( Structure s, LadderKind l )
{
  if ( s == Structure::Optimized && l == LadderKind::Linear )
    return FormulaKind::Ttk10Row;
  if ( s == Structure::Original && l == LadderKind::Linear )
    return FormulaKind::Vbe96Row;
  if ( s == Structure::Optimized && l == LadderKind::CarryLog )
    return FormulaKind::Theorem1Adder;
  return std::nullopt;
}

struct ReportRow
{
  AdderConfig config;
  std::string_view provenance;
  Metrics metrics;
  std::optional<FormulaKind> formula;
  std::optional<bool> formula_pass;
};

inline ReportRow make_report_row( AdderConfig const& cfg )
{
  auto const adder = build_adder( cfg );
  ReportRow row{ cfg, adder.provenance, metrics( adder.circuit ), adder_formula( cfg.structure, cfg.ladder ), std::nullopt };
  if ( row.formula && cfg.n >= 2 )
    row.formula_pass = formula_check( *row.formula, cfg.n, row.metrics ).pass();
  return row;
}

inline constexpr std::string_view report_csv_header =
    "structure,ladder,n,provenance,wires,ancilla,x,cnot,toffoli,mcx,control_endpoints,"
    "toffoli_depth,cnot_depth,mcx_layers,gate_depth,model_toffoli,formula,formula_check";

inline void write_report_row( std::ostream& os, ReportRow const& r )
{
  auto const& m = r.metrics;
  os << to_string( r.config.structure ) << ',' << to_string( r.config.ladder ) << ',' << r.config.n << ','
     << r.provenance << ',' << m.total_wires << ',' << m.ancilla_count << ',' << m.x_count << ',' << m.cnot_count << ','
     << m.toffoli_count << ',' << m.mcx_count << ',' << m.control_endpoints << ',' << m.toffoli_depth << ','
     << m.cnot_depth << ',' << m.mcx_layer_count << ',' << m.gate_depth << ',' << model_toffoli_count( m ) << ','
     << ( r.formula ? to_string( *r.formula ) : std::string_view( "none" ) ) << ','
     << ( r.formula_pass ? ( *r.formula_pass ? "pass" : "fail" ) : "na" ) << '\n';
}

/// Table rows for constructions that are cited but not built here.
inline constexpr std::string_view literature_lines[] = {
    "# literature,[CDKM04],toffoli=2n-1,toffoli_depth=2n-1,ancilla=1",
    "# literature,[Mog19],toffoli=12n+Theta(log n),toffoli_depth=10 log n+Theta(1),ancilla=n-1",
};

/// One row per (n, structure, ladder), n ascending, then the literature lines.
inline std::vector<ReportRow> build_report( std::size_t lo, std::size_t hi )
{
  std::vector<ReportRow> rows;
  for ( auto n = lo; n <= hi; ++n )
    for ( auto s : all_structures )
      for ( auto l : all_ladders )
        rows.push_back( make_report_row( { n, s, l } ) );
  return rows;
}

inline void write_report_csv( std::ostream& os, std::vector<ReportRow> const& rows )
{
  os << report_csv_header << '\n';
  for ( auto const& r : rows )
    write_report_row( os, r );
  for ( auto line : literature_lines )
    os << line << '\n';
}

} // namespace revadd
