#pragma once

#include <stdexcept>
#include <string>

namespace cyclefit {

// Invalid arguments, malformed files, violated operation preconditions.
// The CLI maps this to exit code 3.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A search ran out of budget where an exact answer was required.
// Never silently downgraded to a positive or negative verdict.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Both sides of a pair operation degenerated (e.g. a trim emptied a side).
class DegeneratePairError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cyclefit
