#pragma once

#include "circuit.hpp"
#include "errors.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace revadd
{

/* Index helpers */

inline constexpr std::int64_t hamming_weight( std::uint64_t k ) { return std::popcount( k ); }

/// floor(log2 n) for n >= 1.
inline constexpr std::int64_t floor_log2( std::uint64_t n ) { return static_cast<std::int64_t>( std::bit_width( n ) ) - 1; }

/// ceil(log2 n) for n >= 1.
inline constexpr std::int64_t ceil_log2( std::uint64_t n ) { return n <= 1 ? 0 : floor_log2( n - 1 ) + 1; }

/// floor(log2(num / den)) for positive integers, negative when num < den.
inline constexpr std::int64_t floor_log2_ratio( std::uint64_t num, std::uint64_t den )
{
  if ( num >= den )
    return floor_log2( num / den );
  std::int64_t k = 0;
  while ( ( num << -k ) < den )
    --k;
  return k;
}

/// Ancilla-bank offset of recursion level i in the log-depth ladder with parameter n.
inline constexpr std::int64_t sigma( std::int64_t n, std::int64_t i )
{
  auto const pow = std::int64_t{ 1 } << i;
  return n - i - 2 * ( n / pow ) - hamming_weight( static_cast<std::uint64_t>( n % pow ) );
}

/// Ancillas of the log-depth ladder with parameter n (which realizes L2 of size n - 1).
inline constexpr std::int64_t carry_log_ancillas( std::int64_t n )
{
  return n - hamming_weight( static_cast<std::uint64_t>( n ) ) - floor_log2( static_cast<std::uint64_t>( n ) );
}

inline constexpr std::int64_t carry_log_toffolis( std::int64_t n )
{
  return 4 * n - 3 * hamming_weight( static_cast<std::uint64_t>( n ) ) - 3 * floor_log2( static_cast<std::uint64_t>( n ) ) - 1;
}

inline constexpr std::int64_t carry_log_depth_bound( std::int64_t n )
{
  auto const u = static_cast<std::uint64_t>( n );
  return floor_log2( u ) + floor_log2_ratio( u, 3 ) + 3;
}

/* Reference semantics */

/// x_0 kept, x_i ^= x_{i-1} (original values).
inline std::vector<std::uint8_t> l1_spec( std::span<std::uint8_t const> x )
{
  std::vector<std::uint8_t> out( x.begin(), x.end() );
  for ( std::size_t i = 1; i < x.size(); ++i )
    out[i] = x[i] ^ x[i - 1];
  return out;
}

/// x_0 kept, x_{i+1} ^= x_i & y_i (original values). Returns the new x register; y is unchanged.
inline std::vector<std::uint8_t> l2_spec( std::span<std::uint8_t const> x, std::span<std::uint8_t const> y )
{
  if ( x.size() != y.size() + 1 )
    throw std::invalid_argument( "l2_spec: x must have exactly one more bit than y" );
  std::vector<std::uint8_t> out( x.begin(), x.end() );
  for ( std::size_t i = 0; i < y.size(); ++i )
    out[i + 1] = x[i + 1] ^ ( x[i] & y[i] );
  return out;
}

/* Layouts */

/*! \brief Wires of a (generalized) ladder.
 *
 * The chain x_0..x_m is updated as x_{k+1} ^= x_k AND(y_controls[k]).
 * Empty control sets give the CNOT ladder L1, singletons the Toffoli ladder L2.
 */
struct LadderLayout
{
  std::vector<WireId> x_wires;
  std::vector<std::vector<WireId>> y_controls;
  std::vector<WireId> ancilla_wires;
};

inline void check_layout( LadderLayout const& layout )
{
  if ( layout.x_wires.empty() || layout.y_controls.size() + 1 != layout.x_wires.size() )
    throw circuit_error( "ladder layout needs m+1 chain wires and m control sets" );
  std::unordered_set<std::uint32_t> seen;
  auto const add = [&]( WireId w ) {
    if ( !seen.insert( w.index ).second )
      throw circuit_error( "ladder layout uses wire " + std::to_string( w.index ) + " twice" );
  };
  for ( auto w : layout.x_wires )
    add( w );
  for ( auto const& ys : layout.y_controls )
    for ( auto w : ys )
      add( w );
  for ( auto w : layout.ancilla_wires )
    add( w );
}

/// Standard register layout of L2^(n): x_0..x_n on wires 0..n, y_0..y_{n-1} on wires n+1..2n.
inline Circuit l2_shell( std::size_t n, std::size_t ancillas = 0 )
{
  std::vector<WireSpec> wires;
  for ( std::size_t i = 0; i <= n; ++i )
    wires.push_back( { "x" + std::to_string( i ), WireRole::Data } );
  for ( std::size_t i = 0; i < n; ++i )
    wires.push_back( { "y" + std::to_string( i ), WireRole::Data } );
  for ( std::size_t i = 0; i < ancillas; ++i )
    wires.push_back( { "A" + std::to_string( i ), WireRole::Ancilla } );
  return Circuit( std::move( wires ) );
}

inline Circuit l1_shell( std::size_t n )
{
  std::vector<WireSpec> wires;
  for ( std::size_t i = 0; i <= n; ++i )
    wires.push_back( { "x" + std::to_string( i ), WireRole::Data } );
  return Circuit( std::move( wires ) );
}

inline WireId l2_x( std::size_t i ) { return WireId( i ); }
inline WireId l2_y( std::size_t n, std::size_t i ) { return WireId( n + 1 + i ); }
inline WireId l2_ancilla( std::size_t n, std::size_t i ) { return WireId( 2 * n + 1 + i ); }

/* Builders */

/// Toffoli(x_i, y_i -> x_{i+1}) for i = n-1 down to 0.
inline Circuit build_l2_linear( std::size_t n )
{
  auto c = l2_shell( n );
  for ( std::size_t i = n; i-- > 0; )
    c.append( { l2_x( i ), l2_y( n, i ) }, l2_x( i + 1 ) );
  return c;
}

/// CNOT(x_{i-1} -> x_i) for i = n down to 1.
inline Circuit build_l1_linear( std::size_t n )
{
  auto c = l1_shell( n );
  for ( std::size_t i = n; i >= 1; --i )
    c.append( { WireId( i - 1 ) }, WireId( i ) );
  return c;
}

namespace detail
{

inline void emit_ladder_step( Circuit& c, std::span<WireId const> xs, std::span<std::vector<WireId> const> ys, std::size_t k )
{
  std::vector<WireId> controls{ xs[k] };
  controls.insert( controls.end(), ys[k].begin(), ys[k].end() );
  c.append( Gate( std::move( controls ), xs[k + 1] ) );
}

inline void emit_generalized_ladder( Circuit& c, std::span<WireId const> xs, std::span<std::vector<WireId> const> ys )
{
  auto const m = ys.size();
  if ( m == 0 )
    return;

  for ( std::size_t k = 1; k < m; k += 2 )
    emit_ladder_step( c, xs, ys, k );

  // Odd-indexed chain, each link absorbing the two control sets it skips over.
  std::vector<WireId> odd_xs;
  for ( std::size_t k = 1; k <= m; k += 2 )
    odd_xs.push_back( xs[k] );
  if ( odd_xs.size() >= 2 )
  {
    std::vector<std::vector<WireId>> odd_ys( odd_xs.size() - 1 );
    for ( std::size_t j = 0; j < odd_ys.size(); ++j )
    {
      odd_ys[j] = ys[2 * j + 1];
      odd_ys[j].insert( odd_ys[j].end(), ys[2 * j + 2].begin(), ys[2 * j + 2].end() );
    }
    emit_generalized_ladder( c, odd_xs, odd_ys );
  }

  for ( std::size_t k = 0; k < m; k += 2 )
    emit_ladder_step( c, xs, ys, k );
}

} // namespace detail

/*! \brief Appends the ancilla-free recursive ladder on `layout` to `c`.
 *
 * For the chain x_0..x_m with control sets Y_0..Y_{m-1}:
 *   1. x_{k+1} ^= x_k Y_k for every odd k;
 *   2. recurse on (x_1, x_3, ...) with control sets Y_{2j+1} u Y_{2j+2};
 *   3. x_{k+1} ^= x_k Y_k for every even k.
 * Step 3 on even k reads x_k after step 1 has added x_{k-1} Y_{k-1}; the
 * recursion pre-cancels that term on x_{k+1}. Each step touches disjoint wires.
 */
inline void append_generalized_ladder( Circuit& c, LadderLayout const& layout )
{
  check_layout( layout );
  detail::emit_generalized_ladder( c, layout.x_wires, layout.y_controls );
}

/// Standalone circuit for `layout`; wire count is one past the largest wire it names.
inline Circuit build_generalized_ladder( LadderLayout const& layout )
{
  check_layout( layout );
  std::uint32_t top = 0;
  std::vector<WireSpec> wires;
  auto const grow = [&]( WireId w ) { top = std::max( top, w.index + 1 ); };
  for ( auto w : layout.x_wires )
    grow( w );
  for ( auto const& ys : layout.y_controls )
    for ( auto w : ys )
      grow( w );
  for ( auto w : layout.ancilla_wires )
    grow( w );
  for ( std::uint32_t i = 0; i < top; ++i )
    wires.push_back( { "w" + std::to_string( i ), WireRole::Data } );
  for ( std::size_t k = 0; k < layout.x_wires.size(); ++k )
    wires[layout.x_wires[k].index].label = "x" + std::to_string( k );
  std::size_t y = 0;
  for ( auto const& ys : layout.y_controls )
    for ( auto w : ys )
      wires[w.index].label = "y" + std::to_string( y++ );
  for ( std::size_t k = 0; k < layout.ancilla_wires.size(); ++k )
    wires[layout.ancilla_wires[k].index] = { "A" + std::to_string( k ), WireRole::Ancilla };

  Circuit c( std::move( wires ) );
  detail::emit_generalized_ladder( c, layout.x_wires, layout.y_controls );
  return c;
}

/// Ancilla-free polylog-depth L2^(n) on the standard layout.
inline Circuit build_l2_polylog( std::size_t n )
{
  auto c = l2_shell( n );
  LadderLayout layout;
  for ( std::size_t i = 0; i <= n; ++i )
    layout.x_wires.push_back( l2_x( i ) );
  for ( std::size_t i = 0; i < n; ++i )
    layout.y_controls.push_back( { l2_y( n, i ) } );
  append_generalized_ladder( c, layout );
  return c;
}

/// Log-depth CNOT ladder L1^(n) on n+1 wires.
inline Circuit build_l1_log( std::size_t n )
{
  auto c = l1_shell( n );
  LadderLayout layout;
  for ( std::size_t i = 0; i <= n; ++i )
    layout.x_wires.emplace_back( i );
  layout.y_controls.resize( n );
  append_generalized_ladder( c, layout );
  return c;
}

/*! \brief Log-depth L2^(n-1) with n - w(n) - floor(log n) ancillas.
 *
 * Register A (chain, n wires) is x_0..x_{n-1}, register B (n-1 wires) is
 * y_0..y_{n-2}, register C is the ancilla bank A0, A1, ... . Gates follow
 * the prefix-tree rounds in order: slice 1 builds the products of B pairs
 * into C level by level, slice 2 and slice 3 update the chain, slice 4 is
 * slice 1 reversed. Gate emission order within a slice is kept literal.
 */
inline Circuit build_l2_carry_log( std::size_t n_param )
{
  if ( n_param < 2 )
    throw circuit_error( "log-depth ladder needs n >= 2, got " + std::to_string( n_param ) );

  auto const n = static_cast<std::int64_t>( n_param );
  auto const size = n_param - 1; // ladder size
  auto const banks = carry_log_ancillas( n );
  auto const log_n = floor_log2( n_param );
  auto c = l2_shell( size, static_cast<std::size_t>( banks ) );

  auto const A = []( std::int64_t k ) { return l2_x( static_cast<std::size_t>( k ) ); };
  auto const B = [size]( std::int64_t k ) { return l2_y( size, static_cast<std::size_t>( k ) ); };
  auto const C = [size, banks]( std::int64_t k ) {
    if ( k < 0 || k >= banks )
      throw std::logic_error( "log-depth ladder: ancilla index " + std::to_string( k ) + " out of range" );
    return l2_ancilla( size, static_cast<std::size_t>( k ) );
  };
  auto const pow2 = []( std::int64_t i ) { return std::int64_t{ 1 } << i; };

  auto const first = c.num_gates();
  c.set_slice( 1 );
  for ( std::int64_t j = 1; j <= n / 2 - 1; ++j )
    c.append( { B( 2 * j - 1 ), B( 2 * j ) }, C( j - 1 ) );
  for ( std::int64_t i = 2; i <= log_n - 1; ++i )
    for ( std::int64_t j = 1; j <= n / pow2( i ) - 1; ++j )
      c.append( { C( 2 * j + sigma( n, i - 1 ) ), C( 2 * j + 1 + sigma( n, i - 1 ) ) }, C( j + sigma( n, i ) ) );
  auto const slice1_end = c.num_gates();

  c.set_slice( 2 );
  for ( std::int64_t j = 1; j <= ( n - 1 ) / 2; ++j )
    c.append( { A( 2 * j - 1 ), B( 2 * j - 1 ) }, A( 2 * j ) );
  for ( std::int64_t i = 2; i <= floor_log2( 2 * n_param / 3 ); ++i )
    for ( std::int64_t j = 1; j <= ( n - pow2( i - 1 ) ) / pow2( i ); ++j )
      c.append( { A( pow2( i ) * j - 1 ), C( 2 * j + sigma( n, i - 1 ) ) }, A( pow2( i ) * j + pow2( i - 1 ) - 1 ) );

  c.set_slice( 3 );
  for ( std::int64_t i = log_n; i >= 2; --i )
    for ( std::int64_t j = 1; j <= n / pow2( i ); ++j )
      c.append( { A( pow2( i ) * j - pow2( i - 1 ) - 1 ), C( 2 * j - 1 + sigma( n, i - 1 ) ) }, A( pow2( i ) * j - 1 ) );
  for ( std::int64_t j = 1; j <= n / 2; ++j )
    c.append( { A( 2 * j - 2 ), B( 2 * j - 2 ) }, A( 2 * j - 1 ) );

  c.set_slice( 4 );
  std::vector<Gate> const slice1( c.gates().begin() + first, c.gates().begin() + slice1_end );
  for ( auto it = slice1.rbegin(); it != slice1.rend(); ++it )
    c.append( *it );
  c.set_slice( std::nullopt );
  return c;
}

} // namespace revadd
