#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

#include <revadd/circuit.hpp>
#include <revadd/ladders.hpp>
#include <revadd/simulation.hpp>

#include <random>

using namespace revadd;

namespace
{

Circuit shell( std::size_t n )
{
  std::vector<WireSpec> wires;
  for ( std::size_t i = 0; i < n; ++i )
    wires.push_back( { "q" + std::to_string( i ), WireRole::Data } );
  return Circuit( std::move( wires ) );
}

} // namespace

TEST_CASE( "new circuit registers wires in order", "[circuit]" )
{
  Circuit one( { { "x0", WireRole::Data } } );
  CHECK( one.num_wires() == 1 );
  CHECK( one.num_gates() == 0 );

  // chain x0..x7, controls y0..y6, workspace A0..A3
  std::vector<WireSpec> wires;
  for ( int i = 0; i < 8; ++i )
    wires.push_back( { "x" + std::to_string( i ), WireRole::Data } );
  for ( int i = 0; i < 7; ++i )
    wires.push_back( { "y" + std::to_string( i ), WireRole::Data } );
  for ( int i = 0; i < 4; ++i )
    wires.push_back( { "A" + std::to_string( i ), WireRole::Ancilla } );
  Circuit c( wires );
  CHECK( c.num_wires() == 19 );
  CHECK( c.wires_with_role( WireRole::Ancilla ).size() == 4 );
  CHECK( c.find_wire( "y3" ) == WireId( 11 ) );
  CHECK_FALSE( c.find_wire( "z" ) );
  CHECK( c.wire( WireId( 15 ) ).label == "A0" );
}

TEST_CASE( "duplicate labels are rejected", "[circuit]" )
{
  CHECK_THROWS_AS( Circuit( { { "a0", WireRole::Data }, { "a0", WireRole::Ancilla } } ), circuit_error );
}

TEST_CASE( "gate kind follows the control count", "[circuit]" )
{
  auto c = shell( 5 );
  c.append( { WireId( 0 ), WireId( 1 ) }, WireId( 2 ) );
  c.append( {}, WireId( 0 ) );
  c.append( { WireId( 3 ) }, WireId( 4 ) );
  c.append( { WireId( 3 ), WireId( 0 ), WireId( 1 ) }, WireId( 4 ) );
  REQUIRE( c.num_gates() == 4 );
  CHECK( c.gates()[0].kind() == GateKind::Toffoli );
  CHECK( c.gates()[1].kind() == GateKind::X );
  CHECK( c.gates()[2].kind() == GateKind::CNOT );
  CHECK( c.gates()[3].kind() == GateKind::MCX );
  CHECK( to_string( GateKind::MCX ) == "mcx" );
}

TEST_CASE( "controls are stored sorted and compared as sets", "[circuit]" )
{
  Gate const g( { WireId( 3 ), WireId( 1 ), WireId( 2 ) }, WireId( 0 ) );
  CHECK( g.controls()[0] == WireId( 1 ) );
  CHECK( g.controls()[2] == WireId( 3 ) );
  CHECK( g == Gate( { WireId( 2 ), WireId( 3 ), WireId( 1 ) }, WireId( 0 ) ) );
  CHECK_FALSE( g == Gate( { WireId( 2 ), WireId( 3 ), WireId( 0 ) }, WireId( 1 ) ) );
  CHECK( g.touches( WireId( 2 ) ) );
  CHECK( Gate::toffoli( WireId( 1 ), WireId( 0 ), WireId( 2 ) ) == Gate( { WireId( 0 ), WireId( 1 ) }, WireId( 2 ) ) );
}

TEST_CASE( "append rejects invalid gates", "[circuit]" )
{
  auto c = shell( 3 );
  CHECK_THROWS_AS( c.append( { WireId( 2 ) }, WireId( 2 ) ), circuit_error );
  CHECK_THROWS_AS( c.append( { WireId( 0 ) }, WireId( 3 ) ), circuit_error );
  CHECK_THROWS_AS( c.append( { WireId( 7 ) }, WireId( 0 ) ), circuit_error );
  CHECK_THROWS_AS( c.append( { WireId( 1 ), WireId( 1 ) }, WireId( 0 ) ), circuit_error );
  CHECK( c.num_gates() == 0 );
}

TEST_CASE( "dagger reverses gate order", "[circuit]" )
{
  CHECK( dagger( shell( 2 ) ).num_gates() == 0 );

  auto c = shell( 3 );
  c.append( { WireId( 0 ), WireId( 1 ) }, WireId( 2 ) );
  c.append( { WireId( 0 ) }, WireId( 1 ) );
  auto const d = dagger( c );
  REQUIRE( d.num_gates() == 2 );
  CHECK( d.gates()[0] == Gate::cnot( WireId( 0 ), WireId( 1 ) ) );
  CHECK( d.gates()[1] == Gate::toffoli( WireId( 0 ), WireId( 1 ), WireId( 2 ) ) );
  CHECK( dagger( d ).same_structure( c ) );
}

TEST_CASE( "dagger undoes the linear ladder on every input", "[circuit]" )
{
  auto const c = build_l2_linear( 5 );
  auto const d = dagger( c );
  REQUIRE( c.num_wires() == 11 );
  for ( std::uint32_t v = 0; v < ( 1u << 11 ); ++v )
  {
    Assignment s( 11 );
    for ( std::size_t w = 0; w < 11; ++w )
      s[w] = ( v >> w ) & 1u;
    REQUIRE( run( d, run( c, s ) ) == s );
  }
}

TEST_CASE( "dagger keeps slice tags on the mirrored gates", "[circuit]" )
{
  auto const c = build_l2_carry_log( 8 );
  auto const d = dagger( c );
  auto const last = c.num_gates() - 1;
  for ( auto const& [index, tag] : c.slice_tags() )
    CHECK( d.slice_tags().at( last - index ) == tag );
}

TEST_CASE( "embed remaps wires", "[circuit]" )
{
  auto sub = shell( 3 );
  sub.append( { WireId( 0 ), WireId( 1 ) }, WireId( 2 ) );
  sub.append( {}, WireId( 0 ) );

  SECTION( "identity map concatenates" )
  {
    auto parent = shell( 3 );
    parent.append( { WireId( 2 ) }, WireId( 1 ) );
    std::vector<WireId> const map{ WireId( 0 ), WireId( 1 ), WireId( 2 ) };
    embed( sub, parent, map );
    REQUIRE( parent.num_gates() == 3 );
    CHECK( parent.gates()[1] == sub.gates()[0] );
    CHECK( parent.gates()[2] == sub.gates()[1] );
  }

  SECTION( "non-injective map is rejected" )
  {
    auto parent = shell( 3 );
    std::vector<WireId> const map{ WireId( 0 ), WireId( 0 ), WireId( 2 ) };
    CHECK_THROWS_AS( embed( sub, parent, map ), circuit_error );
  }

  SECTION( "map outside the parent is rejected" )
  {
    auto parent = shell( 3 );
    std::vector<WireId> const map{ WireId( 0 ), WireId( 1 ), WireId( 3 ) };
    CHECK_THROWS_AS( embed( sub, parent, map ), circuit_error );
  }

  SECTION( "map of the wrong size is rejected" )
  {
    auto parent = shell( 3 );
    std::vector<WireId> const map{ WireId( 0 ), WireId( 1 ) };
    CHECK_THROWS_AS( embed( sub, parent, map ), circuit_error );
  }
}

TEST_CASE( "embedding a 7-link ladder onto a register ending in z targets z last", "[circuit]" )
{
  // parent: a0..a7, z; the L1 chain is (a1..a7, z)
  auto parent = shell( 9 );
  auto const sub = build_l1_linear( 7 );
  std::vector<WireId> map;
  for ( std::uint32_t i = 1; i <= 8; ++i )
    map.emplace_back( i );
  embed( sub, parent, map );
  REQUIRE( parent.num_gates() == 7 );
  CHECK( parent.gates().front().target() == WireId( 8 ) );
  for ( auto const& g : parent.gates() )
    CHECK_FALSE( g.touches( WireId( 0 ) ) );
}

TEST_CASE( "embedding preserves semantics", "[circuit]" )
{
  std::mt19937_64 rng( 11 );
  for ( int trial = 0; trial < 50; ++trial )
  {
    auto const sub = oracle::random_circuit( rng, 5, 20, 3 );
    auto parent = shell( 8 );
    std::vector<WireId> map{ WireId( 6 ), WireId( 1 ), WireId( 3 ), WireId( 7 ), WireId( 0 ) };
    embed( sub, parent, map );
    auto const s = oracle::random_assignment( 8, rng );
    Assignment sub_in( 5 );
    for ( std::size_t i = 0; i < 5; ++i )
      sub_in[i] = s[map[i].index];
    auto const sub_out = run( sub, sub_in );
    auto expected = s;
    for ( std::size_t i = 0; i < 5; ++i )
      expected[map[i].index] = sub_out[i];
    REQUIRE( run( parent, s ) == expected );
  }
}

TEST_CASE( "validate names the first offending gate", "[circuit]" )
{
  CHECK_NOTHROW( validate( shell( 0 ) ) );
  CHECK_NOTHROW( validate( build_l2_linear( 6 ) ) );

  auto c = build_l2_linear( 6 );
  c.raw_gates()[3] = Gate( { WireId( 2 ), WireId( 4 ) }, WireId( 4 ) );
  c.raw_gates()[5] = Gate( { WireId( 2 ) }, WireId( 2 ) );
  try
  {
    validate( c );
    FAIL( "validate accepted a corrupted circuit" );
  }
  catch ( circuit_error const& e )
  {
    CHECK( e.gate_index() == 3u );
    CHECK_THAT( e.what(), Catch::Matchers::ContainsSubstring( "gate 3" ) );
  }
}

TEST_CASE( "gates are involutions", "[circuit]" )
{
  std::mt19937_64 rng( 5 );
  for ( int trial = 0; trial < 500; ++trial )
  {
    auto const c = oracle::random_circuit( rng, 6, 1, 5 );
    auto const s = oracle::random_assignment( 6, rng );
    auto t = s;
    apply_gate( t, c.gates()[0] );
    apply_gate( t, c.gates()[0] );
    REQUIRE( t == s );
  }
}

TEST_CASE( "wire roles round-trip through strings", "[circuit]" )
{
  for ( auto r : { WireRole::Data, WireRole::Ancilla, WireRole::CarryOut } )
    CHECK( wire_role_from_string( to_string( r ) ) == r );
  CHECK_FALSE( wire_role_from_string( "clean" ) );
}
