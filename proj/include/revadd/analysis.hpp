#pragma once

#include "circuit.hpp"
#include "errors.hpp"
#include "ladders.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revadd
{

enum class DagEdges
{
  Reduced, // edge from the previous gate on each shared wire only
  Full     // edge between every ordered pair of gates sharing a wire
};

/// One node per gate; predecessors[h] lists the gates g < h that h depends on.
struct DependencyDag
{
  std::vector<GateKind> kinds;
  std::vector<std::vector<std::size_t>> predecessors;

  std::size_t size() const noexcept { return kinds.size(); }

  std::size_t num_edges() const
  {
    std::size_t e = 0;
    for ( auto const& p : predecessors )
      e += p.size();
    return e;
  }
};

inline DependencyDag build_dag( Circuit const& c, DagEdges edges = DagEdges::Reduced )
{
  DependencyDag dag;
  auto const gates = c.gates();
  dag.kinds.reserve( gates.size() );
  dag.predecessors.resize( gates.size() );

  if ( edges == DagEdges::Full )
  {
    for ( std::size_t h = 0; h < gates.size(); ++h )
    {
      dag.kinds.push_back( gates[h].kind() );
      for ( std::size_t g = 0; g < h; ++g )
      {
        bool shared = gates[g].touches( gates[h].target() );
        for ( auto w : gates[h].controls() )
          shared = shared || gates[g].touches( w );
        if ( shared )
          dag.predecessors[h].push_back( g );
      }
    }
    return dag;
  }

  std::vector<std::optional<std::size_t>> last( c.num_wires() );
  for ( std::size_t h = 0; h < gates.size(); ++h )
  {
    dag.kinds.push_back( gates[h].kind() );
    auto& preds = dag.predecessors[h];
    auto const visit = [&]( WireId w ) {
      if ( last[w.index] )
        preds.push_back( *last[w.index] );
      last[w.index] = h;
    };
    for ( auto w : gates[h].controls() )
      visit( w );
    visit( gates[h].target() );
    std::sort( preds.begin(), preds.end() );
    preds.erase( std::unique( preds.begin(), preds.end() ), preds.end() );
  }
  return dag;
}

enum class GateClass
{
  X,
  CNOT,
  Toffoli,        // exactly two controls
  MCX,            // three or more controls
  MultiControlled, // Toffoli or MCX
  Any
};

constexpr bool in_class( GateKind k, GateClass cls )
{
  switch ( cls )
  {
  case GateClass::X:
    return k == GateKind::X;
  case GateClass::CNOT:
    return k == GateKind::CNOT;
  case GateClass::Toffoli:
    return k == GateKind::Toffoli;
  case GateClass::MCX:
    return k == GateKind::MCX;
  case GateClass::MultiControlled:
    return k == GateKind::Toffoli || k == GateKind::MCX;
  case GateClass::Any:
    return true;
  }
  return false;
}

/// Largest number of `cls` gates on any dependency path.
inline std::size_t depth_by_class( DependencyDag const& dag, GateClass cls )
{
  std::vector<std::size_t> depth( dag.size(), 0u );
  std::size_t best = 0;
  for ( std::size_t h = 0; h < dag.size(); ++h )
  {
    std::size_t d = 0;
    for ( auto g : dag.predecessors[h] )
      d = std::max( d, depth[g] );
    depth[h] = d + ( in_class( dag.kinds[h], cls ) ? 1u : 0u );
    best = std::max( best, depth[h] );
  }
  return best;
}

struct Metrics
{
  std::size_t total_gates{ 0 };
  std::size_t x_count{ 0 };
  std::size_t cnot_count{ 0 };
  std::size_t toffoli_count{ 0 };
  std::size_t mcx_count{ 0 };
  /// Number of MCX gates (three or more controls) per control count.
  std::map<std::size_t, std::size_t> mcx_histogram;
  /// Sum of control counts over all gates.
  std::size_t control_endpoints{ 0 };

  std::size_t x_depth{ 0 };
  std::size_t cnot_depth{ 0 };
  std::size_t toffoli_depth{ 0 };
  std::size_t mcx_depth{ 0 };
  /// Depth counting every gate with two or more controls.
  std::size_t mcx_layer_count{ 0 };
  std::size_t gate_depth{ 0 };

  std::size_t total_wires{ 0 };
  std::size_t ancilla_count{ 0 };

  bool operator==( Metrics const& ) const = default;
};

inline Metrics metrics( Circuit const& c )
{
  Metrics m;
  m.total_wires = c.num_wires();
  m.ancilla_count = c.wires_with_role( WireRole::Ancilla ).size();
  for ( auto const& g : c.gates() )
  {
    ++m.total_gates;
    m.control_endpoints += g.controls().size();
    switch ( g.kind() )
    {
    case GateKind::X:
      ++m.x_count;
      break;
    case GateKind::CNOT:
      ++m.cnot_count;
      break;
    case GateKind::Toffoli:
      ++m.toffoli_count;
      break;
    case GateKind::MCX:
      ++m.mcx_count;
      ++m.mcx_histogram[g.controls().size()];
      break;
    }
  }
  auto const dag = build_dag( c );
  m.x_depth = depth_by_class( dag, GateClass::X );
  m.cnot_depth = depth_by_class( dag, GateClass::CNOT );
  m.toffoli_depth = depth_by_class( dag, GateClass::Toffoli );
  m.mcx_depth = depth_by_class( dag, GateClass::MCX );
  m.mcx_layer_count = depth_by_class( dag, GateClass::MultiControlled );
  m.gate_depth = depth_by_class( dag, GateClass::Any );
  return m;
}

/// Coarse scalar cost (labelled "model" in reports): an MCX with c controls counts as 2c - 3 Toffolis.
inline std::size_t model_toffoli_count( Metrics const& m )
{
  auto total = m.toffoli_count;
  for ( auto const& [controls, count] : m.mcx_histogram )
    total += ( 2 * controls - 3 ) * count;
  return total;
}

/* Conformance against closed forms */

enum class FormulaKind
{
  LadderLinear,   // L2^(n), sequential
  LadderCarryLog, // log-depth ladder with parameter n (realizes L2^(n-1))
  L1Log,          // L1^(n), log depth
  LadderPolylog,  // L2^(n), ancilla-free recursive
  Theorem1Adder,  // optimized structure + log-depth ladder, width n
  Ttk10Row,       // optimized structure + linear ladder, width n
  Vbe96Row        // original structure + linear ladder, width n
};

constexpr std::string_view to_string( FormulaKind k )
{
  switch ( k )
  {
  case FormulaKind::LadderLinear:
    return "linear";
  case FormulaKind::LadderCarryLog:
    return "carrylog";
  case FormulaKind::L1Log:
    return "l1-log";
  case FormulaKind::LadderPolylog:
    return "polylog";
  case FormulaKind::Theorem1Adder:
    return "theorem1";
  case FormulaKind::Ttk10Row:
    return "ttk10";
  case FormulaKind::Vbe96Row:
    return "vbe96";
  }
  return "?";
}

inline FormulaKind formula_kind_from_string( std::string_view s )
{
  for ( auto k : { FormulaKind::LadderLinear, FormulaKind::LadderCarryLog, FormulaKind::L1Log, FormulaKind::LadderPolylog,
                   FormulaKind::Theorem1Adder, FormulaKind::Ttk10Row, FormulaKind::Vbe96Row } )
  {
    if ( to_string( k ) == s )
      return k;
  }
  throw error( "unknown formula kind '" + std::string( s ) + "'" );
}

enum class Relation
{
  Equal,
  AtMost,
  AtLeast,
  Info // recorded, never fails
};

struct Claim
{
  std::string name;
  std::int64_t measured{ 0 };
  std::int64_t reference{ 0 };
  Relation relation{ Relation::Equal };

  bool pass() const
  {
    switch ( relation )
    {
    case Relation::Equal:
      return measured == reference;
    case Relation::AtMost:
      return measured <= reference;
    case Relation::AtLeast:
      return measured >= reference;
    case Relation::Info:
      return true;
    }
    return false;
  }
};

struct ConformanceReport
{
  FormulaKind kind;
  std::size_t n{ 0 };
  std::vector<Claim> claims;

  bool pass() const
  {
    return std::all_of( claims.begin(), claims.end(), []( Claim const& c ) { return c.pass(); } );
  }

  Claim const* find( std::string_view name ) const
  {
    for ( auto const& c : claims )
    {
      if ( c.name == name )
        return &c;
    }
    return nullptr;
  }
};

/*! \brief Checks measured metrics against the closed-form claim for `kind` at size n.
 *
 * Counts are checked exactly, depths as upper bounds: a published depth
 * describes one schedule while the DAG depth is the optimum over schedules.
 */
inline ConformanceReport formula_check( FormulaKind kind, std::size_t n_size, Metrics const& m )
{
  auto const n = static_cast<std::int64_t>( n_size );
  auto const u = static_cast<std::uint64_t>( n_size );
  auto const i = []( std::size_t v ) { return static_cast<std::int64_t>( v ); };
  ConformanceReport r{ kind, n_size, {} };
  auto& cl = r.claims;

  switch ( kind )
  {
  case FormulaKind::LadderLinear:
    cl.push_back( { "toffoli_count", i( m.toffoli_count ), n, Relation::Equal } );
    cl.push_back( { "toffoli_depth", i( m.toffoli_depth ), n, Relation::Equal } );
    cl.push_back( { "ancilla", i( m.ancilla_count ), 0, Relation::Equal } );
    break;

  case FormulaKind::LadderCarryLog:
    if ( n < 2 )
      throw error( "carrylog formula needs n >= 2" );
    cl.push_back( { "toffoli_count", i( m.toffoli_count ), carry_log_toffolis( n ), Relation::Equal } );
    cl.push_back( { "ancilla", i( m.ancilla_count ), carry_log_ancillas( n ), Relation::Equal } );
    cl.push_back( { "toffoli_depth", i( m.toffoli_depth ), carry_log_depth_bound( n ), Relation::AtMost } );
    break;

  case FormulaKind::L1Log:
    cl.push_back( { "cnot_count", i( m.cnot_count ), 2 * n + 2, Relation::AtMost } );
    cl.push_back( { "cnot_depth", i( m.cnot_depth ), 2 * ceil_log2( u ) + 2, Relation::AtMost } );
    break;

  case FormulaKind::LadderPolylog:
    cl.push_back( { "wires", i( m.total_wires ), 2 * n + 1, Relation::Equal } );
    cl.push_back( { "mcx_layers", i( m.mcx_layer_count ), 2 * ceil_log2( u ) + 1, Relation::AtMost } );
    cl.push_back( { "control_endpoints", i( m.control_endpoints ), n * ceil_log2( u ) + 4 * n, Relation::AtMost } );
    break;

  case FormulaKind::Theorem1Adder: {
    if ( n < 2 )
      throw error( "theorem1 formula needs n >= 2" );
    auto const count = carry_log_toffolis( n + 1 ) + carry_log_toffolis( n );
    cl.push_back( { "toffoli_count", i( m.toffoli_count ), count, Relation::Equal } );
    cl.push_back( { "toffoli_depth", i( m.toffoli_depth ), carry_log_depth_bound( n + 1 ) + carry_log_depth_bound( n ),
                    Relation::AtMost } );
    cl.push_back( { "cnot_count", i( m.cnot_count ), 8 * n, Relation::AtMost } );
    cl.push_back( { "ancilla", i( m.ancilla_count ), std::max( carry_log_ancillas( n + 1 ), carry_log_ancillas( n ) ),
                    Relation::Equal } );
    if ( n >= 8 )
    {
      cl.push_back( { "toffoli_count_upper", i( m.toffoli_count ), 8 * n, Relation::AtMost } );
      cl.push_back( { "toffoli_count_lower", i( m.toffoli_count ), 8 * n - 12 * floor_log2( u ) - 14, Relation::AtLeast } );
    }
    // Stated width n - w(n) - floor(log n); may be below the larger of the two ladders' needs.
    cl.push_back( { "ancilla_stated", i( m.ancilla_count ), carry_log_ancillas( n ), Relation::Info } );
    break;
  }

  case FormulaKind::Ttk10Row:
    cl.push_back( { "toffoli_count", i( m.toffoli_count ), 2 * n - 1, Relation::Equal } );
    cl.push_back( { "toffoli_depth", i( m.toffoli_depth ), 2 * n - 1, Relation::Equal } );
    cl.push_back( { "ancilla", i( m.ancilla_count ), 0, Relation::Equal } );
    break;

  case FormulaKind::Vbe96Row:
    cl.push_back( { "toffoli_count", i( m.toffoli_count ), 4 * n - 4, Relation::Equal } );
    cl.push_back( { "ancilla", i( m.ancilla_count ), n - 1, Relation::Equal } );
    // Cited variant's row; this structure is only equivalent up to the carry block rewrite.
    cl.push_back( { "toffoli_count_cited", i( m.toffoli_count ), 4 * n - 2, Relation::Info } );
    break;
  }
  return r;
}

} // namespace revadd
