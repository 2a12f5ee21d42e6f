#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distpoly {

/// Malformed textual input (edge list, graph6, numeric literal).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a structural invariant (self-loop, duplicate edge,
/// out-of-range vertex, invalid parent array, inconsistent matrix).
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A distance operation was asked to work on a disconnected graph.
/// Carries one pair of vertices lying in different components.
class DisconnectedError : public std::runtime_error {
 public:
  DisconnectedError(std::size_t u, std::size_t v)
      : std::runtime_error("graph is disconnected: no path between vertex " +
                           std::to_string(u) + " and vertex " + std::to_string(v)),
        u_(u),
        v_(v) {}

  std::size_t first() const noexcept { return u_; }
  std::size_t second() const noexcept { return v_; }

 private:
  std::size_t u_;
  std::size_t v_;
};

/// Argument outside the domain of an analysis operation (n < 3, k not in {2,3}, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace distpoly
