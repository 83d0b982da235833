#pragma once

#include <stdexcept>
#include <string>

namespace tempfair {

/// Thrown when an exhaustive computation would exceed its configured budget.
/// Distinct from a negative answer: the computation was refused, not decided.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an input document does not match the published schema.
/// The message carries a path into the document ("days[1][0].values").
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tempfair
