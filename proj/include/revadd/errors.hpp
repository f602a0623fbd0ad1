#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace revadd
{

/// Base class of every exception thrown by the library.
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Structural violation of a circuit (bad wire, self-target, duplicate label...).
class circuit_error : public error
{
public:
  explicit circuit_error( std::string const& what, std::optional<std::size_t> gate_index = std::nullopt )
      : error( what ), gate_index_( gate_index )
  {
  }

  /// Index of the first offending gate, when the failure is tied to one.
  std::optional<std::size_t> gate_index() const noexcept { return gate_index_; }

private:
  std::optional<std::size_t> gate_index_;
};

/// Malformed revq document.
class parse_error : public error
{
public:
  parse_error( std::size_t line, std::string const& what )
      : error( "line " + std::to_string( line ) + ": " + what ), line_( line )
  {
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Requested input space is larger than the exhaustive enumeration cap.
class capacity_error : public error
{
public:
  using error::error;
};

} // namespace revadd
