#pragma once

#include "circuit.hpp"
#include "errors.hpp"
#include "ladders.hpp"
#include "simulation.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revadd
{

enum class Structure
{
  Original,  // n-1 ancillas holding the carries
  Optimized, // ancilla-free apart from the ladder's own workspace
};

enum class LadderKind
{
  Linear,
  Polylog,
  CarryLog,
};

constexpr std::string_view to_string( Structure s ) { return s == Structure::Original ? "original" : "optimized"; }

constexpr std::string_view to_string( LadderKind l )
{
  switch ( l )
  {
  case LadderKind::Linear:
    return "linear";
  case LadderKind::Polylog:
    return "polylog";
  case LadderKind::CarryLog:
    return "carrylog";
  }
  return "?";
}

inline std::optional<Structure> structure_from_string( std::string_view s )
{
  if ( s == "original" )
    return Structure::Original;
  if ( s == "optimized" )
    return Structure::Optimized;
  return std::nullopt;
}

inline std::optional<LadderKind> ladder_from_string( std::string_view s )
{
  if ( s == "linear" )
    return LadderKind::Linear;
  if ( s == "polylog" )
    return LadderKind::Polylog;
  if ( s == "carrylog" )
    return LadderKind::CarryLog;
  return std::nullopt;
}

inline constexpr Structure all_structures[] = { Structure::Original, Structure::Optimized };
inline constexpr LadderKind all_ladders[] = { LadderKind::Linear, LadderKind::Polylog, LadderKind::CarryLog };

struct AdderConfig
{
  std::size_t n{ 1 };
  Structure structure{ Structure::Optimized };
  LadderKind ladder{ LadderKind::Linear };

  bool operator==( AdderConfig const& ) const = default;
};

inline std::string describe( AdderConfig const& cfg )
{
  return std::string( to_string( cfg.structure ) ) + "/" + std::string( to_string( cfg.ladder ) );
}

/// Literature cell for each structure/ladder combination.
constexpr std::string_view provenance( Structure s, LadderKind l )
{
  if ( s == Structure::Original )
  {
    switch ( l )
    {
    case LadderKind::Linear:
      return "~[VBE96]";
    case LadderKind::Polylog:
      return "Remark 1";
    case LadderKind::CarryLog:
      return "[DKR06]";
    }
  }
  switch ( l )
  {
  case LadderKind::Linear:
    return "~[TTK10]";
  case LadderKind::Polylog:
    return "[RV25]";
  case LadderKind::CarryLog:
    return "Theorem 1";
  }
  return "?";
}

struct AdderLayout
{
  std::vector<WireId> a;
  std::vector<WireId> b;
  WireId z;
  std::vector<WireId> ancillas;

  /// Wires driven by the caller: a, b and z.
  std::vector<WireId> data_wires() const
  {
    std::vector<WireId> out( a );
    out.insert( out.end(), b.begin(), b.end() );
    out.push_back( z );
    return out;
  }
};

struct Adder
{
  AdderConfig config;
  AdderLayout layout;
  Circuit circuit;
  std::string_view provenance;
};

/* Reference semantics */

struct AddResult
{
  std::vector<std::uint8_t> a;
  std::vector<std::uint8_t> sum;
  std::uint8_t z{ 0 };
};

/// (a, b, z) -> (a, a + b mod 2^n, z ^ carry-out), little-endian bit vectors.
inline AddResult add_spec( std::span<std::uint8_t const> a, std::span<std::uint8_t const> b, std::uint8_t z )
{
  AddResult r{ { a.begin(), a.end() }, std::vector<std::uint8_t>( a.size() ), z };
  std::uint8_t carry = 0;
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    auto const total = a[i] + b[i] + carry;
    r.sum[i] = static_cast<std::uint8_t>( total & 1 );
    carry = static_cast<std::uint8_t>( total >> 1 );
  }
  r.z = z ^ carry;
  return r;
}

/// Expected full output of `adder` for a full input; ancillas are expected back at 0.
inline Oracle adder_oracle( Adder const& adder )
{
  return [layout = adder.layout, wires = adder.circuit.num_wires()]( Assignment const& s ) {
    std::vector<std::uint8_t> a, b;
    for ( auto w : layout.a )
      a.push_back( s[w.index] );
    for ( auto w : layout.b )
      b.push_back( s[w.index] );
    auto const r = add_spec( a, b, s[layout.z.index] );
    Assignment out( wires, 0u );
    for ( std::size_t i = 0; i < layout.a.size(); ++i )
    {
      out[layout.a[i].index] = r.a[i];
      out[layout.b[i].index] = r.sum[i];
    }
    out[layout.z.index] = r.z;
    return out;
  };
}

namespace detail
{

inline Adder make_shell( AdderConfig cfg, std::size_t pool_size, bool carry_register )
{
  auto const n = cfg.n;
  std::vector<WireSpec> wires;
  AdderLayout layout;
  for ( std::size_t i = 0; i < n; ++i )
  {
    layout.a.emplace_back( wires.size() );
    wires.push_back( { "a" + std::to_string( i ), WireRole::Data } );
  }
  for ( std::size_t i = 0; i < n; ++i )
  {
    layout.b.emplace_back( wires.size() );
    wires.push_back( { "b" + std::to_string( i ), WireRole::Data } );
  }
  if ( carry_register )
  {
    for ( std::size_t i = 0; i + 1 < n; ++i )
    {
      layout.ancillas.emplace_back( wires.size() );
      wires.push_back( { "c" + std::to_string( i ), WireRole::Ancilla } );
    }
  }
  layout.z = WireId( wires.size() );
  wires.push_back( { "z", WireRole::CarryOut } );
  auto const pool_prefix = carry_register ? "t" : "c";
  for ( std::size_t i = 0; i < pool_size; ++i )
  {
    layout.ancillas.emplace_back( wires.size() );
    wires.push_back( { pool_prefix + std::to_string( i ), WireRole::Ancilla } );
  }
  return Adder{ cfg, std::move( layout ), Circuit( std::move( wires ) ), provenance( cfg.structure, cfg.ladder ) };
}

/// L2^(k) in the standard layout for the chosen implementation (ancillas last).
inline Circuit l2_circuit( LadderKind kind, std::size_t k )
{
  if ( k == 0 )
    return l2_shell( 0 );
  switch ( kind )
  {
  case LadderKind::Linear:
    return build_l2_linear( k );
  case LadderKind::Polylog:
    return build_l2_polylog( k );
  case LadderKind::CarryLog:
    return build_l2_carry_log( k + 1 );
  }
  throw std::logic_error( "unknown ladder kind" );
}

inline std::size_t l2_workspace( LadderKind kind, std::size_t k )
{
  return kind == LadderKind::CarryLog && k > 0 ? static_cast<std::size_t>( carry_log_ancillas( static_cast<std::int64_t>( k + 1 ) ) ) : 0u;
}

/// Places L2^(k) (or its inverse) with chain `xs` (k+1 wires), controls `ys` (k wires), workspace from `pool`.
inline void place_l2( Circuit& parent, LadderKind kind, std::span<WireId const> xs, std::span<WireId const> ys,
                      std::span<WireId const> pool, bool inverse )
{
  auto const k = ys.size();
  auto sub = l2_circuit( kind, k );
  if ( inverse )
    sub = dagger( sub );
  std::vector<WireId> map( xs.begin(), xs.end() );
  map.insert( map.end(), ys.begin(), ys.end() );
  auto const extra = sub.num_wires() - map.size();
  if ( extra > pool.size() )
    throw std::logic_error( "ladder workspace exceeds the adder's ancilla pool" );
  map.insert( map.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>( extra ) );
  embed( sub, parent, map );
}

/// Places L1^(k) (or its inverse) on chain `xs` (k+1 wires).
inline void place_l1( Circuit& parent, LadderKind kind, std::span<WireId const> xs, bool inverse )
{
  if ( xs.size() < 2 )
    return;
  auto const k = xs.size() - 1;
  auto sub = kind == LadderKind::Linear ? build_l1_linear( k ) : build_l1_log( k );
  if ( inverse )
    sub = dagger( sub );
  embed( sub, parent, xs );
}

inline Adder build_single_bit_adder( AdderConfig cfg )
{
  auto adder = make_shell( cfg, 0, false );
  auto& c = adder.circuit;
  auto const& l = adder.layout;
  c.append( { l.a[0], l.b[0] }, l.z );
  c.append( { l.a[0] }, l.b[0] );
  return adder;
}

} // namespace detail

/*! \brief Adder using n-1 carry ancillas (plus the ladder's workspace).
 *
 * Register C = (c_0..c_{n-2}, z). Slices:
 *   1. c_i ^= a_i b_i, b_i ^= a_i;
 *   2. inverse L2^(n-1) on chain C, controls b_1..b_{n-1} (carry propagation);
 *   3. b_{i+1} ^= c_i, b_i ^= a_i, b_i = NOT b_i for i < n-1;
 *   4. L2^(n-2) on chain c_0..c_{n-2}, controls b_1..b_{n-2};
 *   5. b_i ^= a_i, c_i ^= a_i b_i, b_i = NOT b_i for i < n-1.
 */
inline Adder build_adder_original( std::size_t n, LadderKind ladder )
{
  AdderConfig const cfg{ n, Structure::Original, ladder };
  if ( n == 0 )
    throw circuit_error( "adder width must be at least 1" );
  if ( n == 1 )
    return detail::build_single_bit_adder( cfg );

  auto const pool_size = std::max( detail::l2_workspace( ladder, n - 1 ), detail::l2_workspace( ladder, n - 2 ) );
  auto adder = detail::make_shell( cfg, pool_size, true );
  auto& c = adder.circuit;
  auto const& a = adder.layout.a;
  auto const& b = adder.layout.b;
  std::vector<WireId> carries( adder.layout.ancillas.begin(), adder.layout.ancillas.begin() + static_cast<std::ptrdiff_t>( n - 1 ) );
  carries.push_back( adder.layout.z );
  std::span<WireId const> const pool( adder.layout.ancillas.begin() + static_cast<std::ptrdiff_t>( n - 1 ), adder.layout.ancillas.end() );
  std::span<WireId const> const b_span( b );
  std::span<WireId const> const c_span( carries );

  c.set_slice( 1 );
  for ( std::size_t i = 0; i < n; ++i )
  {
    c.append( { a[i], b[i] }, carries[i] );
    c.append( { a[i] }, b[i] );
  }

  c.set_slice( 2 );
  detail::place_l2( c, ladder, c_span, b_span.subspan( 1 ), pool, true );

  c.set_slice( 3 );
  for ( std::size_t i = 0; i + 1 < n; ++i )
  {
    c.append( { carries[i] }, b[i + 1] );
    c.append( { a[i] }, b[i] );
    c.append( {}, b[i] );
  }

  c.set_slice( 4 );
  detail::place_l2( c, ladder, c_span.first( n - 1 ), b_span.subspan( 1, n - 2 ), pool, false );

  c.set_slice( 5 );
  for ( std::size_t i = 0; i + 1 < n; ++i )
  {
    c.append( { a[i] }, b[i] );
    c.append( { a[i], b[i] }, carries[i] );
    c.append( {}, b[i] );
  }
  c.set_slice( std::nullopt );
  return adder;
}

/*! \brief Adder without carry ancillas; z terminates the ladder chain.
 *
 * Slices:
 *   1. b_i ^= a_i for i >= 1;
 *   2. L1^(n-1) on (a_1..a_{n-1}, z);
 *   3. inverse L2^(n) on chain (a_0..a_{n-1}, z), controls b_0..b_{n-1};
 *   4. b_i ^= a_i for i >= 1, then NOT b_i for 1 <= i <= n-2;
 *   5. L2^(n-1) on chain a, controls b_0..b_{n-2};
 *   6. inverse L1^(n-2) on a_1..a_{n-1};
 *   7. b_i ^= a_i for all i, then NOT b_i for 1 <= i <= n-2.
 * The CNOT ladders are sequential with the linear Toffoli ladder and
 * log-depth otherwise.
 */
inline Adder build_adder_optimized( std::size_t n, LadderKind ladder )
{
  AdderConfig const cfg{ n, Structure::Optimized, ladder };
  if ( n == 0 )
    throw circuit_error( "adder width must be at least 1" );
  if ( n == 1 )
    return detail::build_single_bit_adder( cfg );

  auto const pool_size = std::max( detail::l2_workspace( ladder, n ), detail::l2_workspace( ladder, n - 1 ) );
  auto adder = detail::make_shell( cfg, pool_size, false );
  auto& c = adder.circuit;
  auto const& a = adder.layout.a;
  auto const& b = adder.layout.b;
  auto const z = adder.layout.z;
  std::span<WireId const> const pool( adder.layout.ancillas );
  std::span<WireId const> const a_span( a );
  std::span<WireId const> const b_span( b );
  std::vector<WireId> a_z( a );
  a_z.push_back( z );
  std::span<WireId const> const az_span( a_z );

  c.set_slice( 1 );
  for ( std::size_t i = 1; i < n; ++i )
    c.append( { a[i] }, b[i] );

  c.set_slice( 2 );
  detail::place_l1( c, ladder, az_span.subspan( 1 ), false );

  c.set_slice( 3 );
  detail::place_l2( c, ladder, az_span, b_span, pool, true );

  c.set_slice( 4 );
  for ( std::size_t i = 1; i < n; ++i )
    c.append( { a[i] }, b[i] );
  for ( std::size_t i = 1; i + 1 < n; ++i )
    c.append( {}, b[i] );

  c.set_slice( 5 );
  detail::place_l2( c, ladder, a_span, b_span.first( n - 1 ), pool, false );

  c.set_slice( 6 );
  detail::place_l1( c, ladder, a_span.subspan( 1 ), true );

  c.set_slice( 7 );
  for ( std::size_t i = 0; i < n; ++i )
    c.append( { a[i] }, b[i] );
  for ( std::size_t i = 1; i + 1 < n; ++i )
    c.append( {}, b[i] );
  c.set_slice( std::nullopt );
  return adder;
}

inline Adder build_adder( AdderConfig const& cfg )
{
  return cfg.structure == Structure::Original ? build_adder_original( cfg.n, cfg.ladder )
                                              : build_adder_optimized( cfg.n, cfg.ladder );
}

/* Circuit identities */

struct IdentityFixture
{
  std::string name;
  Circuit lhs;
  Circuit rhs;
};

inline Circuit fixture_shell( std::vector<WireSpec> wires ) { return Circuit( std::move( wires ) ); }

/// Carry/sum block of the sequential ancilla adder, and its rewrite in the original structure.
inline IdentityFixture vbe_block_identity()
{
  WireId const cp( 0 ), a( 1 ), b( 2 ), ci( 3 );
  std::vector<WireSpec> const wires{ { "c_prev", WireRole::Data }, { "a", WireRole::Data }, { "b", WireRole::Data }, { "c", WireRole::Data } };
  auto lhs = fixture_shell( wires );
  lhs.append( { cp, b }, ci );
  lhs.append( { a }, b );
  lhs.append( { a, b }, ci );
  lhs.append( { a }, b );
  lhs.append( { cp }, b );

  auto rhs = fixture_shell( wires );
  rhs.append( { cp }, b );
  rhs.append( { a }, b );
  rhs.append( {}, b );
  rhs.append( { cp, b }, ci );
  rhs.append( { a }, b );
  rhs.append( { a, b }, ci );
  rhs.append( {}, b );
  return { "vbe-block", std::move( lhs ), std::move( rhs ) };
}

/// Majority-style step of the ancilla-free ripple adder, and its rewrite in the optimized structure.
inline IdentityFixture ttk_block_identity()
{
  WireId const a( 0 ), b( 1 ), a_next( 2 );
  std::vector<WireSpec> const wires{ { "a", WireRole::Data }, { "b", WireRole::Data }, { "a_next", WireRole::Data } };
  auto lhs = fixture_shell( wires );
  lhs.append( { a, b }, a_next );
  lhs.append( { a }, b );

  auto rhs = fixture_shell( wires );
  rhs.append( { a }, b );
  rhs.append( {}, b );
  rhs.append( { a, b }, a_next );
  rhs.append( {}, b );
  return { "ttk-block", std::move( lhs ), std::move( rhs ) };
}

/*! \brief Compute/use/uncompute of a pair product folds into one MCX.
 *
 * w3 holds the product w2 w4 and must start at 0: with w3 = 1 the left side
 * also flips w5 by w1, which the MCX cannot reproduce.
 */
inline IdentityFixture product_substitution_identity()
{
  WireId const w1( 0 ), w2( 1 ), w3( 2 ), w4( 3 ), w5( 4 );
  std::vector<WireSpec> const wires{ { "w1", WireRole::Data },
                                     { "w2", WireRole::Data },
                                     { "w3", WireRole::Ancilla },
                                     { "w4", WireRole::Data },
                                     { "w5", WireRole::Data } };
  auto lhs = fixture_shell( wires );
  lhs.append( { w2, w4 }, w3 );
  lhs.append( { w1, w3 }, w5 );
  lhs.append( { w2, w4 }, w3 );

  auto rhs = fixture_shell( wires );
  rhs.append( { w1, w2, w4 }, w5 );
  return { "product-substitution", std::move( lhs ), std::move( rhs ) };
}

inline std::vector<IdentityFixture> identity_fixtures()
{
  std::vector<IdentityFixture> out;
  out.push_back( vbe_block_identity() );
  out.push_back( ttk_block_identity() );
  out.push_back( product_substitution_identity() );
  return out;
}

struct IdentityResult
{
  std::string name;
  bool equal{ false };
  std::uint64_t cases{ 0 };
  std::size_t ancillas{ 0 };
  std::optional<Assignment> counterexample;
};

/// Compares both sides on every input with the ancilla wires (by lhs roles) at 0.
inline IdentityResult check_identity( IdentityFixture const& f )
{
  if ( f.lhs.num_wires() != f.rhs.num_wires() )
    throw circuit_error( "identity '" + f.name + "' compares circuits of different widths" );
  auto const free = non_ancilla_wires( f.lhs );
  auto const v = check_equivalence( f.lhs, f.rhs, Exhaustive{}, free, 1 );
  return { f.name, v.equivalent, v.cases_checked, f.lhs.num_wires() - free.size(), v.counterexample };
}

} // namespace revadd
