#pragma once

#include <stdexcept>

namespace pascaline {

// Degenerate geometric input: coincident points where distinct ones are
// required, an involution centre lying on the conic, sextuples outside the
// engine's domain, and similar.
struct degenerate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented caller contract was violated, or an internal exact identity
// failed to hold. The latter always indicates a bug.
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pascaline
