#pragma once

#include <stdexcept>
#include <string>

namespace sumsetlab {

// Bad arguments or violated preconditions. Maps to CLI exit code 2.
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration or search exceeded its configured budget. Never a silent
// truncation: the message names the budget. Maps to CLI exit code 2.
struct BudgetError : std::runtime_error {
    BudgetError(const std::string& what, unsigned long long budget_value)
        : std::runtime_error(what + " (budget: " + std::to_string(budget_value) + ")"),
          budget(budget_value) {}
    unsigned long long budget;
};

// A paper-stated bound failed to hold on a computed output. The acceptance
// suite requires that this never fires on the corpus; when it does, it is a
// finding, not something to swallow.
struct BoundViolationError : std::logic_error {
    explicit BoundViolationError(const std::string& what) : std::logic_error(what) {}
};

struct EnumerationBudget {
    // Point-set size guard for every enumeration (sumsets, lattice scans).
    unsigned long long max_points = 10'000'000;
    // Guard for 2^k inclusion-exclusion loops and DFS node counts.
    unsigned long long max_nodes = 8'000'000;
};

inline EnumerationBudget default_budget() { return EnumerationBudget{}; }

}  // namespace sumsetlab
