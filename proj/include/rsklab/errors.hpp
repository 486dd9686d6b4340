#pragma once

#include <stdexcept>
#include <string>

namespace rsklab {

/// Malformed textual input (partition or matrix argument).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive computation would exceed its configured size cap.
/// Raised instead of truncating or slowing down silently.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes to the same quantity disagree. This is a bug in
/// the harness, never a mathematical finding.
class OracleDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rsklab
