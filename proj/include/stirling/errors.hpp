#pragma once

// Exception taxonomy shared across the library.  Budget violations are kept
// distinct from contract violations so callers (and the CLI exit codes) can
// tell "input too big for the configured cap" apart from "input invalid" and
// "internal identity broken".

#include <stdexcept>

namespace stirling {

// Default work/output cap for enumerators and counters (number of objects or
// elementary steps).  Overridable per call and via the CLI --cap flag.
inline constexpr long long default_budget = 1'000'000;

// An enumeration or counting pass would exceed its cap.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arguments violate an operation's precondition.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A structural self-check that must always hold failed; the message names
// the violated claim.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace stirling
