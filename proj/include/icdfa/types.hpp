#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace icdfa {

/// Arbitrary-precision nonnegative count. Exact counts of connected DFA
/// structures outgrow 64 bits quickly, so every count, rank and bound is a
/// BigCount from the start.
using BigCount = mpz_class;

/// Transition string of a connected DFA structure: cell i holds the target
/// delta(i / k, sigma_{i mod k}) under the first-reference state numbering.
///
/// A well-formed string has exactly k*n cells, each in [0, n-1]. Whether it
/// additionally satisfies the introduction rules (R1) and the early-occurrence
/// rule (R2) is checked by validate().
struct CanonicalString {
    int n = 1;               ///< number of states, >= 1
    int k = 1;               ///< alphabet size, >= 1
    std::vector<int> cells;  ///< k*n entries, each in [0, n-1]

    bool operator==(const CanonicalString&) const = default;
    /// Ordering is cell-wise lexicographic for strings sharing (n, k); the
    /// n and k fields only tie-break across parameter sets.
    auto operator<=>(const CanonicalString&) const = default;
};

/// 0-based indices of the first occurrence of each state label 1..n-1 in a
/// canonical string, strictly increasing. Empty when n = 1.
struct FlagSequence {
    int n = 1;
    int k = 1;
    std::vector<int> flags;  ///< flags[j-1] is the first occurrence of label j

    bool operator==(const FlagSequence&) const = default;
};

/// A DFA with the final-state set forgotten: a total transition table over
/// states [0, n) and symbol indices [0, k), plus the initial state. Symbols
/// are identified by their index in a fixed total order; names are cosmetic.
struct DfaStructure {
    int n = 1;
    int k = 1;
    std::vector<int> delta;  ///< row-major: delta[state * k + symbol]
    int initial = 0;

    int target(int state, int symbol) const {
        return delta[static_cast<std::size_t>(state) * k + symbol];
    }
};

/// A DFA structure plus its final states (sorted ascending, no duplicates).
struct Dfa {
    DfaStructure structure;
    std::vector<int> finals;
};

/// Canonical string plus the final states renumbered under the canonical
/// ordering. Two DFAs have equal normal forms exactly when their reachable
/// parts are isomorphic.
struct NormalForm {
    CanonicalString string;
    std::vector<int> finals;  ///< strictly increasing, all < string.n

    bool operator==(const NormalForm&) const = default;
};

/// State renaming produced by canonicalization: forward[q] is the canonical
/// index of original state q, or -1 if q is unreachable from the initial
/// state. The image of the reachable states is exactly [0, reachable_count).
struct StateMapping {
    std::vector<int> forward;
    int reachable_count = 0;

    bool operator==(const StateMapping&) const = default;
};

/// Malformed input: wrong cell count, out-of-range index, incomplete table.
/// Distinct from InvalidStringError, which reports a rule violation on an
/// otherwise well-formed string.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws StructuralError unless s has k*n cells all in [0, n-1] and n, k >= 1.
void check_well_formed(const CanonicalString& s);

/// Throws StructuralError unless d has a complete table with in-range targets
/// and an in-range initial state.
void check_well_formed(const DfaStructure& d);

/// Throws StructuralError unless the structure is well-formed and finals is a
/// strictly increasing sequence of in-range states.
void check_well_formed(const Dfa& d);

}  // namespace icdfa
