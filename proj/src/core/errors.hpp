#pragma once
#include <stdexcept>

namespace fas {

// Input exceeds a hard size guard (exact-search limits, complexity budget).
// Distinct from malformed input, which raises plain runtime_error.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The operation's precondition on the input graph does not hold (e.g.
// resolution requested on a graph that is not resolvable).
struct StateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace fas
