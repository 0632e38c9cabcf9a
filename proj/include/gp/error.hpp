#pragma once

#include <stdexcept>

namespace gp {

// Well-formed request that the library cannot honor: unknown vertex,
// exceeded size cap, radius too small, and the like. The CLI maps these
// to exit code 1.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (spec files, word expressions). The CLI maps
// these to exit code 2.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A broken internal invariant, e.g. an iteration that provably must
// stabilize failing to do so. Always a bug, never bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace gp
