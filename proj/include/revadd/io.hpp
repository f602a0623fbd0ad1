#pragma once

#include "circuit.hpp"
#include "errors.hpp"

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace revadd
{

/* revq text format
 *
 *   # comment
 *   wires K
 *   wire <index> <label> <data|ancilla|carryout>     (K lines, indices 0..K-1 in order)
 *   x <t> | cx <c> <t> | ccx <c1> <c2> <t> | mcx <c1> ... <ck> <t>   (k >= 3)
 */

inline void write_revq( std::ostream& os, Circuit const& c, std::vector<std::string> const& header = {} )
{
  for ( auto const& h : header )
    os << "# " << h << '\n';
  os << "wires " << c.num_wires() << '\n';
  for ( std::size_t i = 0; i < c.num_wires(); ++i )
    os << "wire " << i << ' ' << c.wires()[i].label << ' ' << to_string( c.wires()[i].role ) << '\n';
  for ( auto const& g : c.gates() )
  {
    os << to_string( g.kind() );
    for ( auto w : g.controls() )
      os << ' ' << w.index;
    os << ' ' << g.target().index << '\n';
  }
}

inline std::string serialize( Circuit const& c, std::vector<std::string> const& header = {} )
{
  std::ostringstream os;
  write_revq( os, c, header );
  return os.str();
}

namespace detail
{

inline std::vector<std::string_view> split_fields( std::string_view line )
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while ( i < line.size() )
  {
    while ( i < line.size() && ( line[i] == ' ' || line[i] == '\t' || line[i] == '\r' ) )
      ++i;
    auto const start = i;
    while ( i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' )
      ++i;
    if ( i > start )
      out.push_back( line.substr( start, i - start ) );
  }
  return out;
}

inline std::uint32_t parse_index( std::string_view field, std::size_t line )
{
  std::uint32_t v = 0;
  auto const [ptr, ec] = std::from_chars( field.data(), field.data() + field.size(), v );
  if ( ec != std::errc{} || ptr != field.data() + field.size() )
    throw parse_error( line, "expected a non-negative integer, got '" + std::string( field ) + "'" );
  return v;
}

} // namespace detail

inline Circuit read_revq( std::istream& is )
{
  std::string raw;
  std::size_t line_no = 0;
  std::size_t declared = 0;
  bool have_header = false;
  std::vector<WireSpec> wires;
  std::optional<Circuit> circuit;

  while ( std::getline( is, raw ) )
  {
    ++line_no;
    std::string_view line( raw );
    if ( auto const hash = line.find( '#' ); hash != std::string_view::npos )
      line = line.substr( 0, hash );
    auto const f = detail::split_fields( line );
    if ( f.empty() )
      continue;

    if ( !have_header )
    {
      if ( f[0] != "wires" || f.size() != 2 )
        throw parse_error( line_no, "expected 'wires <count>'" );
      declared = detail::parse_index( f[1], line_no );
      have_header = true;
      continue;
    }

    if ( f[0] == "wire" )
    {
      if ( circuit )
        throw parse_error( line_no, "wire declaration after the first gate" );
      if ( f.size() != 4 )
        throw parse_error( line_no, "expected 'wire <index> <label> <role>'" );
      auto const index = detail::parse_index( f[1], line_no );
      if ( index != wires.size() )
        throw parse_error( line_no, "wire index " + std::to_string( index ) + " out of order (expected " +
                                        std::to_string( wires.size() ) + ")" );
      if ( wires.size() == declared )
        throw parse_error( line_no, "more wire lines than the declared " + std::to_string( declared ) );
      auto const role = wire_role_from_string( f[3] );
      if ( !role )
        throw parse_error( line_no, "unknown wire role '" + std::string( f[3] ) + "'" );
      wires.push_back( { std::string( f[2] ), *role } );
      continue;
    }

    if ( !circuit )
    {
      if ( wires.size() != declared )
        throw parse_error( line_no, "declared " + std::to_string( declared ) + " wires but found " + std::to_string( wires.size() ) );
      try
      {
        circuit.emplace( std::move( wires ) );
      }
      catch ( circuit_error const& e )
      {
        throw parse_error( line_no, e.what() );
      }
    }

    std::size_t controls = 0;
    if ( f[0] == "x" )
      controls = 0;
    else if ( f[0] == "cx" )
      controls = 1;
    else if ( f[0] == "ccx" )
      controls = 2;
    else if ( f[0] == "mcx" )
    {
      if ( f.size() < 5 )
        throw parse_error( line_no, "mcx needs at least three controls" );
      controls = f.size() - 2;
    }
    else
      throw parse_error( line_no, "unknown gate '" + std::string( f[0] ) + "'" );

    if ( f.size() != controls + 2 )
      throw parse_error( line_no, "'" + std::string( f[0] ) + "' expects " + std::to_string( controls + 1 ) + " wire indices" );
    std::vector<WireId> cs;
    for ( std::size_t k = 0; k < controls; ++k )
      cs.emplace_back( detail::parse_index( f[1 + k], line_no ) );
    auto const target = WireId( detail::parse_index( f.back(), line_no ) );
    try
    {
      circuit->append( Gate( std::move( cs ), target ) );
    }
    catch ( circuit_error const& e )
    {
      throw parse_error( line_no, e.what() );
    }
  }

  if ( !have_header )
    throw parse_error( line_no, "missing 'wires <count>' header" );
  if ( !circuit )
  {
    if ( wires.size() != declared )
      throw parse_error( line_no, "declared " + std::to_string( declared ) + " wires but found " + std::to_string( wires.size() ) );
    try
    {
      circuit.emplace( std::move( wires ) );
    }
    catch ( circuit_error const& e )
    {
      throw parse_error( line_no, e.what() );
    }
  }
  return std::move( *circuit );
}

inline Circuit parse( std::string_view text )
{
  std::istringstream is{ std::string( text ) };
  return read_revq( is );
}

/// One-way export to an OpenQASM 3 subset (x, cx, ccx, ctrl(k) @ x).
inline void write_qasm3( std::ostream& os, Circuit const& c, std::vector<std::string> const& header = {} )
{
  os << "OPENQASM 3.0;\n";
  os << "include \"stdgates.inc\";\n";
  for ( auto const& h : header )
    os << "// " << h << '\n';
  for ( std::size_t i = 0; i < c.num_wires(); ++i )
    os << "// q[" << i << "] " << c.wires()[i].label << ' ' << to_string( c.wires()[i].role ) << '\n';
  os << "qubit[" << c.num_wires() << "] q;\n";
  for ( auto const& g : c.gates() )
  {
    switch ( g.kind() )
    {
    case GateKind::X:
      os << "x ";
      break;
    case GateKind::CNOT:
      os << "cx ";
      break;
    case GateKind::Toffoli:
      os << "ccx ";
      break;
    case GateKind::MCX:
      os << "ctrl(" << g.controls().size() << ") @ x ";
      break;
    }
    for ( auto w : g.controls() )
      os << "q[" << w.index << "], ";
    os << "q[" << g.target().index << "];\n";
  }
}

inline std::string export_qasm3( Circuit const& c, std::vector<std::string> const& header = {} )
{
  std::ostringstream os;
  write_qasm3( os, c, header );
  return os.str();
}

} // namespace revadd
