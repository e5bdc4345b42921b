#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alliance {

/// Malformed arguments: bad vertex ids, invalid family specs, duplicate edges.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The graph is outside the class an operation is defined on
/// (disconnected input to a solver, cycle statistics of a tree, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured order cap was exceeded.
class CapabilityError : public std::length_error {
 public:
  CapabilityError(const std::string& what, std::size_t requested, std::size_t limit)
      : std::length_error(what + " (order " + std::to_string(requested) + " exceeds limit " +
                          std::to_string(limit) + ")"),
        requested_(requested),
        limit_(limit) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

/// A family operation was applied to a vertex that does not satisfy its precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// graph6 or trace text could not be parsed. `offset()` is the byte position of the fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace alliance
