#pragma once

#include <string>
#include <vector>

#include "icdfa/types.hpp"

namespace icdfa {

inline constexpr unsigned long long kDefaultOracleBudget = 10'000'000;

/// Asked to enumerate more transition functions than the budget allows.
class BudgetError : public std::runtime_error {
public:
    BudgetError(BigCount required, unsigned long long budget);
    const BigCount& required() const { return required_; }

private:
    BigCount required_;
};

struct OracleReport {
    int n = 1;
    int k = 1;
    BigCount total_functions;     ///< n^(k n)
    BigCount connected_count;     ///< functions whose n states are all reachable
    BigCount canonical_distinct;  ///< distinct canonical strings on exactly n states
    std::vector<std::string> mismatches;  ///< collected strings failing validate (expected empty)
};

struct OracleResult {
    OracleReport report;
    std::vector<CanonicalString> strings;  ///< sorted ascending
};

/// Ground truth by sheer enumeration: every total transition function on n
/// states with initial state 0 is built, checked for connectivity, and
/// canonicalized; the distinct canonical strings are collected. Throws
/// BudgetError when n^(k n) exceeds the budget.
///
/// brute_force_icdfa splits the function index space across OpenMP threads;
/// the serial variant is the single-loop reference the parallel one is
/// tested against. Both produce identical results.
OracleResult brute_force_icdfa(int n, int k,
                               unsigned long long budget = kDefaultOracleBudget);
OracleResult brute_force_icdfa_serial(int n, int k,
                                      unsigned long long budget = kDefaultOracleBudget);

/// Number of distinct normal forms over all (function, final-set) pairs with
/// a connected function on exactly n states. Budget covers 2^n * n^(k n).
BigCount brute_force_with_finals(int n, int k,
                                 unsigned long long budget = kDefaultOracleBudget);

}  // namespace icdfa
