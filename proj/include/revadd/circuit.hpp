#pragma once

#include "errors.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace revadd
{

struct WireId
{
  std::uint32_t index{ 0 };

  constexpr WireId() = default;
  constexpr explicit WireId( std::uint32_t i ) : index( i ) {}
  constexpr explicit WireId( std::size_t i ) : index( static_cast<std::uint32_t>( i ) ) {}
  constexpr explicit WireId( int i ) : index( static_cast<std::uint32_t>( i ) ) {}

  constexpr auto operator<=>( WireId const& ) const = default;
};

enum class WireRole
{
  Data,
  Ancilla,
  CarryOut
};

constexpr std::string_view to_string( WireRole role )
{
  switch ( role )
  {
  case WireRole::Data:
    return "data";
  case WireRole::Ancilla:
    return "ancilla";
  case WireRole::CarryOut:
    return "carryout";
  }
  return "?";
}

inline std::optional<WireRole> wire_role_from_string( std::string_view s )
{
  if ( s == "data" )
    return WireRole::Data;
  if ( s == "ancilla" )
    return WireRole::Ancilla;
  if ( s == "carryout" )
    return WireRole::CarryOut;
  return std::nullopt;
}

struct WireSpec
{
  std::string label;
  WireRole role{ WireRole::Data };

  bool operator==( WireSpec const& ) const = default;
};

enum class GateKind
{
  X,
  CNOT,
  Toffoli,
  MCX
};

constexpr std::string_view to_string( GateKind kind )
{
  switch ( kind )
  {
  case GateKind::X:
    return "x";
  case GateKind::CNOT:
    return "cx";
  case GateKind::Toffoli:
    return "ccx";
  case GateKind::MCX:
    return "mcx";
  }
  return "?";
}

/*! \brief Multi-controlled NOT: target ^= AND(controls).
 *
 * The kind (X, CNOT, Toffoli, MCX) follows from the number of controls.
 * Controls are kept sorted so that equality is set equality. A gate may be
 * constructed in an invalid state (target among controls, repeated control);
 * `Circuit::append` and `validate` reject such gates.
 */
class Gate
{
public:
  Gate( std::vector<WireId> controls, WireId target )
      : controls_( std::move( controls ) ), target_( target )
  {
    std::sort( controls_.begin(), controls_.end() );
  }

  static Gate x( WireId t ) { return Gate( {}, t ); }
  static Gate cnot( WireId c, WireId t ) { return Gate( { c }, t ); }
  static Gate toffoli( WireId c1, WireId c2, WireId t ) { return Gate( { c1, c2 }, t ); }

  GateKind kind() const noexcept
  {
    switch ( controls_.size() )
    {
    case 0:
      return GateKind::X;
    case 1:
      return GateKind::CNOT;
    case 2:
      return GateKind::Toffoli;
    default:
      return GateKind::MCX;
    }
  }

  std::span<WireId const> controls() const noexcept { return controls_; }
  WireId target() const noexcept { return target_; }

  bool touches( WireId w ) const noexcept
  {
    return w == target_ || std::binary_search( controls_.begin(), controls_.end(), w );
  }

  bool operator==( Gate const& ) const = default;

private:
  std::vector<WireId> controls_;
  WireId target_;
};

namespace detail
{

inline void check_gate( Gate const& g, std::size_t num_wires, std::optional<std::size_t> index )
{
  auto const where = [&] {
    return index ? "gate " + std::to_string( *index ) + ": " : std::string{};
  };
  if ( g.target().index >= num_wires )
    throw circuit_error( where() + "target wire " + std::to_string( g.target().index ) + " out of range", index );
  auto const cs = g.controls();
  for ( std::size_t i = 0; i < cs.size(); ++i )
  {
    if ( cs[i].index >= num_wires )
      throw circuit_error( where() + "control wire " + std::to_string( cs[i].index ) + " out of range", index );
    if ( cs[i] == g.target() )
      throw circuit_error( where() + "target wire " + std::to_string( cs[i].index ) + " is also a control", index );
    if ( i > 0 && cs[i] == cs[i - 1] )
      throw circuit_error( where() + "control wire " + std::to_string( cs[i].index ) + " repeated", index );
  }
}

} // namespace detail

/*! \brief Ordered gate list over a labelled wire set.
 *
 * Slice tags are documentation only; semantics come from gate order.
 */
class Circuit
{
public:
  Circuit() = default;

  explicit Circuit( std::vector<WireSpec> wires ) : wires_( std::move( wires ) )
  {
    std::unordered_set<std::string_view> seen;
    for ( auto const& w : wires_ )
    {
      if ( !seen.insert( w.label ).second )
        throw circuit_error( "duplicate wire label '" + w.label + "'" );
    }
  }

  std::size_t num_wires() const noexcept { return wires_.size(); }
  std::size_t num_gates() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  std::span<WireSpec const> wires() const noexcept { return wires_; }
  std::span<Gate const> gates() const noexcept { return gates_; }
  WireSpec const& wire( WireId w ) const { return wires_.at( w.index ); }

  std::optional<WireId> find_wire( std::string_view label ) const
  {
    for ( std::size_t i = 0; i < wires_.size(); ++i )
    {
      if ( wires_[i].label == label )
        return WireId( i );
    }
    return std::nullopt;
  }

  std::vector<WireId> wires_with_role( WireRole role ) const
  {
    std::vector<WireId> out;
    for ( std::size_t i = 0; i < wires_.size(); ++i )
    {
      if ( wires_[i].role == role )
        out.emplace_back( i );
    }
    return out;
  }

  void append( Gate g )
  {
    detail::check_gate( g, wires_.size(), std::nullopt );
    if ( current_slice_ )
      slice_tags_.emplace( gates_.size(), *current_slice_ );
    gates_.push_back( std::move( g ) );
  }

  void append( std::initializer_list<WireId> controls, WireId target )
  {
    append( Gate( std::vector<WireId>( controls ), target ) );
  }

  void append( std::span<WireId const> controls, WireId target )
  {
    append( Gate( std::vector<WireId>( controls.begin(), controls.end() ), target ) );
  }

  /// Gates appended from now on carry this slice number (nullopt stops tagging).
  void set_slice( std::optional<int> slice ) { current_slice_ = slice; }

  std::map<std::size_t, int> const& slice_tags() const noexcept { return slice_tags_; }

  /// Indices of gates tagged with `slice`, in order.
  std::vector<std::size_t> gates_in_slice( int slice ) const
  {
    std::vector<std::size_t> out;
    for ( auto const& [index, tag] : slice_tags_ )
    {
      if ( tag == slice )
        out.push_back( index );
    }
    return out;
  }

  /// Unchecked access to the gate list. Callers must run `validate` afterwards.
  std::vector<Gate>& raw_gates() noexcept { return gates_; }

  /// Gate-for-gate equality of wires and gates; slice tags are ignored.
  bool same_structure( Circuit const& other ) const
  {
    return wires_ == other.wires_ && gates_ == other.gates_;
  }

private:
  friend Circuit dagger( Circuit const& c );

  std::vector<WireSpec> wires_;
  std::vector<Gate> gates_;
  std::map<std::size_t, int> slice_tags_;
  std::optional<int> current_slice_;
};

/// Inverse circuit. Every primitive is an involution, so only the order flips.
inline Circuit dagger( Circuit const& c )
{
  Circuit out( std::vector<WireSpec>( c.wires_.begin(), c.wires_.end() ) );
  out.gates_.assign( c.gates_.rbegin(), c.gates_.rend() );
  auto const last = c.gates_.size();
  for ( auto const& [index, tag] : c.slice_tags_ )
    out.slice_tags_.emplace( last - 1 - index, tag );
  return out;
}

/// Appends the gates of `sub` to `parent`, sub wire i being mapped to `wire_map[i]`.
inline void embed( Circuit const& sub, Circuit& parent, std::span<WireId const> wire_map )
{
  if ( wire_map.size() != sub.num_wires() )
    throw circuit_error( "wire map has " + std::to_string( wire_map.size() ) + " entries for a " +
                         std::to_string( sub.num_wires() ) + "-wire circuit" );
  std::unordered_set<std::uint32_t> image;
  for ( auto w : wire_map )
  {
    if ( w.index >= parent.num_wires() )
      throw circuit_error( "wire map target " + std::to_string( w.index ) + " out of range" );
    if ( !image.insert( w.index ).second )
      throw circuit_error( "wire map is not injective (wire " + std::to_string( w.index ) + ")" );
  }

  std::vector<WireId> controls;
  for ( auto const& g : sub.gates() )
  {
    controls.clear();
    for ( auto c : g.controls() )
      controls.push_back( wire_map[c.index] );
    parent.append( Gate( controls, wire_map[g.target().index] ) );
  }
}

/// Throws `circuit_error` naming the first gate that breaks an invariant.
inline void validate( Circuit const& c )
{
  auto const gates = c.gates();
  for ( std::size_t i = 0; i < gates.size(); ++i )
    detail::check_gate( gates[i], c.num_wires(), i );
}

} // namespace revadd
