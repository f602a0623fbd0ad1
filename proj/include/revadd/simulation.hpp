#pragma once

#include "circuit.hpp"
#include "errors.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace revadd
{

/// One bit (0 or 1) per wire, indexed by `WireId::index`.
using Assignment = std::vector<std::uint8_t>;

/// 64 independent assignments; bit `l` of `words[w]` is wire `w` in lane `l`.
struct BatchAssignment
{
  static constexpr std::size_t lanes = 64;

  std::vector<std::uint64_t> words;

  BatchAssignment() = default;
  explicit BatchAssignment( std::size_t num_wires ) : words( num_wires, 0u ) {}

  std::size_t num_wires() const noexcept { return words.size(); }

  void set_lane( std::size_t lane, Assignment const& s )
  {
    auto const bit = std::uint64_t{ 1 } << lane;
    for ( std::size_t w = 0; w < words.size(); ++w )
      words[w] = s[w] ? ( words[w] | bit ) : ( words[w] & ~bit );
  }

  Assignment lane( std::size_t lane ) const
  {
    Assignment s( words.size() );
    for ( std::size_t w = 0; w < words.size(); ++w )
      s[w] = static_cast<std::uint8_t>( ( words[w] >> lane ) & 1u );
    return s;
  }

  bool operator==( BatchAssignment const& ) const = default;
};

inline void apply_gate( Assignment& s, Gate const& g )
{
  for ( auto c : g.controls() )
  {
    if ( !s[c.index] )
      return;
  }
  s[g.target().index] ^= 1u;
}

inline void apply_gate( BatchAssignment& b, Gate const& g )
{
  auto mask = ~std::uint64_t{ 0 };
  for ( auto c : g.controls() )
    mask &= b.words[c.index];
  b.words[g.target().index] ^= mask;
}

inline Assignment run( Circuit const& c, Assignment s )
{
  if ( s.size() != c.num_wires() )
    throw circuit_error( "assignment has " + std::to_string( s.size() ) + " bits for a " +
                         std::to_string( c.num_wires() ) + "-wire circuit" );
  for ( auto const& g : c.gates() )
    apply_gate( s, g );
  return s;
}

inline BatchAssignment run_batch( Circuit const& c, BatchAssignment b )
{
  if ( b.num_wires() != c.num_wires() )
    throw circuit_error( "batch has " + std::to_string( b.num_wires() ) + " wires for a " +
                         std::to_string( c.num_wires() ) + "-wire circuit" );
  for ( auto const& g : c.gates() )
    apply_gate( b, g );
  return b;
}

inline constexpr std::size_t truth_table_max_wires = 22;

/// Output index for every input index (bit i of an index is wire i).
inline std::vector<std::uint32_t> truth_table( Circuit const& c )
{
  auto const k = c.num_wires();
  if ( k > truth_table_max_wires )
    throw capacity_error( "truth table limited to " + std::to_string( truth_table_max_wires ) + " wires, circuit has " +
                          std::to_string( k ) );
  std::size_t const size = std::size_t{ 1 } << k;
  std::vector<std::uint32_t> table( size, 0u );
  for ( std::size_t base = 0; base < size; base += BatchAssignment::lanes )
  {
    auto const count = std::min( BatchAssignment::lanes, size - base );
    BatchAssignment in( k );
    for ( std::size_t l = 0; l < count; ++l )
    {
      for ( std::size_t w = 0; w < k; ++w )
        in.words[w] |= static_cast<std::uint64_t>( ( ( base + l ) >> w ) & 1u ) << l;
    }
    auto const out = run_batch( c, std::move( in ) );
    for ( std::size_t l = 0; l < count; ++l )
    {
      std::uint32_t value = 0;
      for ( std::size_t w = 0; w < k; ++w )
        value |= static_cast<std::uint32_t>( ( out.words[w] >> l ) & 1u ) << w;
      table[base + l] = value;
    }
  }
  return table;
}

inline bool is_permutation_table( std::span<std::uint32_t const> table )
{
  std::vector<bool> hit( table.size(), false );
  for ( auto v : table )
  {
    if ( v >= table.size() || hit[v] )
      return false;
    hit[v] = true;
  }
  return true;
}

/* Equivalence checking */

struct Exhaustive
{
};

struct RandomSampling
{
  std::uint64_t samples{ 1000 };
  std::uint64_t seed{ 0 };
};

using CheckMode = std::variant<Exhaustive, RandomSampling>;

/// Expected full output assignment for a full input assignment.
using Oracle = std::function<Assignment( Assignment const& )>;

struct Verdict
{
  bool equivalent{ true };
  /// Input assignment on which circuit and oracle disagree (lowest case index).
  std::optional<Assignment> counterexample;
  std::uint64_t cases_checked{ 0 };
  std::optional<std::uint64_t> seed;
};

inline constexpr std::size_t exhaustive_max_free_wires = 24;

namespace detail
{

/// Scans cases [first, last) in 64-lane batches; returns the lowest failing case, if any.
template<class FillBatch>
std::optional<std::uint64_t> scan_cases( Circuit const& c, Oracle const& oracle, std::uint64_t first, std::uint64_t last,
                                         FillBatch const& fill )
{
  for ( auto base = first; base < last; base += BatchAssignment::lanes )
  {
    auto const count = static_cast<std::size_t>( std::min<std::uint64_t>( BatchAssignment::lanes, last - base ) );
    BatchAssignment in( c.num_wires() );
    fill( in, base, count );
    auto const out = run_batch( c, in );
    for ( std::size_t l = 0; l < count; ++l )
    {
      if ( oracle( in.lane( l ) ) != out.lane( l ) )
        return base + l;
    }
  }
  return std::nullopt;
}

inline unsigned resolve_workers( unsigned requested, std::uint64_t cases )
{
  unsigned w = requested != 0 ? requested : std::max( 1u, std::thread::hardware_concurrency() );
  auto const batches = ( cases + BatchAssignment::lanes - 1 ) / BatchAssignment::lanes;
  return static_cast<unsigned>( std::clamp<std::uint64_t>( batches / 16, 1u, w ) );
}

/// Splits [0, cases) into contiguous 64-aligned chunks; the lowest failing case wins.
template<class FillBatch>
std::optional<std::uint64_t> parallel_scan( Circuit const& c, Oracle const& oracle, std::uint64_t cases, unsigned workers,
                                            FillBatch const& fill )
{
  workers = resolve_workers( workers, cases );
  if ( workers == 1 )
    return scan_cases( c, oracle, 0, cases, fill );

  auto const batches = ( cases + BatchAssignment::lanes - 1 ) / BatchAssignment::lanes;
  auto const per_worker = ( batches + workers - 1 ) / workers;
  std::vector<std::optional<std::uint64_t>> found( workers );
  {
    std::vector<std::jthread> pool;
    for ( unsigned t = 0; t < workers; ++t )
    {
      auto const first = std::min( cases, t * per_worker * BatchAssignment::lanes );
      auto const last = std::min( cases, ( t + 1 ) * per_worker * BatchAssignment::lanes );
      pool.emplace_back( [&, t, first, last] { found[t] = scan_cases( c, oracle, first, last, fill ); } );
    }
  }
  for ( auto const& f : found )
  {
    if ( f )
      return f;
  }
  return std::nullopt;
}

} // namespace detail

/*! \brief Compares `run(c, .)` with `oracle` over the inputs spanned by `free_wires`.
 *
 * Wires outside `free_wires` are pinned to 0. Exhaustive mode enumerates all
 * 2^k assignments of the k free wires (case index bit i drives free_wires[i]).
 * Random mode draws `samples` assignments from a mt19937_64 seeded with `seed`;
 * the draw sequence does not depend on the worker count.
 *
 * On failure, `cases_checked` counts the cases up to and including the
 * reported counterexample, so verdicts are reproducible.
 */
inline Verdict check_equivalence( Circuit const& c, Oracle const& oracle, CheckMode const& mode,
                                  std::span<WireId const> free_wires, unsigned workers = 0 )
{
  for ( auto w : free_wires )
  {
    if ( w.index >= c.num_wires() )
      throw circuit_error( "free wire " + std::to_string( w.index ) + " out of range" );
  }

  Verdict verdict;
  std::optional<std::uint64_t> failing;

  if ( std::holds_alternative<Exhaustive>( mode ) )
  {
    if ( free_wires.size() > exhaustive_max_free_wires )
      throw capacity_error( "exhaustive mode is limited to " + std::to_string( exhaustive_max_free_wires ) +
                            " free wires, got " + std::to_string( free_wires.size() ) + "; use random mode" );
    std::uint64_t const cases = std::uint64_t{ 1 } << free_wires.size();
    auto const fill = [&]( BatchAssignment& in, std::uint64_t base, std::size_t count ) {
      for ( std::size_t l = 0; l < count; ++l )
      {
        for ( std::size_t k = 0; k < free_wires.size(); ++k )
          in.words[free_wires[k].index] |= ( ( ( base + l ) >> k ) & 1u ) << l;
      }
    };
    failing = detail::parallel_scan( c, oracle, cases, workers, fill );
    verdict.cases_checked = failing ? *failing + 1 : cases;
    if ( failing )
    {
      Assignment s( c.num_wires(), 0u );
      for ( std::size_t k = 0; k < free_wires.size(); ++k )
        s[free_wires[k].index] = static_cast<std::uint8_t>( ( *failing >> k ) & 1u );
      verdict.counterexample = std::move( s );
    }
  }
  else
  {
    auto const& rs = std::get<RandomSampling>( mode );
    verdict.seed = rs.seed;
    // One random word per free wire per batch, drawn up front in batch order.
    auto const batches = ( rs.samples + BatchAssignment::lanes - 1 ) / BatchAssignment::lanes;
    std::vector<std::uint64_t> draws( batches * free_wires.size() );
    std::mt19937_64 rng( rs.seed );
    for ( auto& d : draws )
      d = rng();
    auto const fill = [&]( BatchAssignment& in, std::uint64_t base, std::size_t count ) {
      auto const batch = base / BatchAssignment::lanes;
      auto const mask = count == 64 ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << count ) - 1 );
      for ( std::size_t k = 0; k < free_wires.size(); ++k )
        in.words[free_wires[k].index] = draws[batch * free_wires.size() + k] & mask;
    };
    failing = detail::parallel_scan( c, oracle, rs.samples, workers, fill );
    verdict.cases_checked = failing ? *failing + 1 : rs.samples;
    if ( failing )
    {
      BatchAssignment in( c.num_wires() );
      auto const base = *failing - *failing % BatchAssignment::lanes;
      fill( in, base, BatchAssignment::lanes );
      verdict.counterexample = in.lane( static_cast<std::size_t>( *failing - base ) );
    }
  }

  verdict.equivalent = !failing.has_value();
  return verdict;
}

/// Circuit-vs-circuit form: the second circuit acts as the oracle.
inline Verdict check_equivalence( Circuit const& c1, Circuit const& c2, CheckMode const& mode,
                                  std::span<WireId const> free_wires, unsigned workers = 0 )
{
  if ( c1.num_wires() != c2.num_wires() )
    throw circuit_error( "circuits have different wire counts" );
  return check_equivalence(
      c1, [&c2]( Assignment const& s ) { return run( c2, s ); }, mode, free_wires, workers );
}

/// All wires of `c` not carrying the Ancilla role.
inline std::vector<WireId> non_ancilla_wires( Circuit const& c )
{
  std::vector<WireId> out;
  for ( std::size_t i = 0; i < c.num_wires(); ++i )
  {
    if ( c.wires()[i].role != WireRole::Ancilla )
      out.emplace_back( i );
  }
  return out;
}

} // namespace revadd
