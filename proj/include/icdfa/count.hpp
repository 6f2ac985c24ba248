#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <utility>
#include <vector>

#include "icdfa/types.hpp"

namespace icdfa {

/// Number of valid strings sharing the given flag sequence: the cells before
/// the first flag are forced to 0, a cell between the j-th and (j+1)-th flag
/// ranges over [0, j], and the cells after the last flag range over [0, n-1].
/// With f_0 = -1 that is
///     prod_{j=1}^{n-1} j^(f_j - f_{j-1} - 1) * n^(k*n - 1 - f_{n-1}),
/// and 1 for n = 1.
BigCount fillings(const FlagSequence& fs);

/// Exact number of valid strings (equivalently, of non-isomorphic connected
/// DFA structures) with n states over k symbols: the sum of fillings over all
/// admissible flag sequences, evaluated exactly.
BigCount count_icdfa(int n, int k);

struct LiskovetsCounts {
    BigCount h;  ///< connected transition functions with a fixed initial state
    BigCount H;  ///< h / (n-1)!, the count up to renaming of non-initial states
};

/// Independent cross-check via the classical inclusion-exclusion recurrence
///     h_k(1) = 1,
///     h_k(n) = n^(k n) - sum_{1<=j<n} C(n-1, j-1) n^(k(n-j)) h_k(j),
/// with H_k(n) = h_k(n) / (n-1)!. Throws std::logic_error if the division is
/// not exact (it always is).
LiskovetsCounts count_liskovets(int n, int k);

/// Upper bound sum_{i=1}^{n} S(kn+1, i) over Stirling numbers of the second
/// kind; count_icdfa(n, k) never exceeds it.
BigCount stirling_bound(int n, int k);

/// Number of non-isomorphic connected DFAs including final-state sets:
/// 2^n * count_icdfa(n, k).
BigCount count_with_finals(int n, int k);

/// 0-based position of s in the cell-wise lexicographic order of all valid
/// strings for its (n, k). Requires a valid string.
BigCount rank(const CanonicalString& s);

/// Inverse of rank. Throws std::out_of_range (naming the total count) unless
/// 0 <= r < count_icdfa(n, k).
CanonicalString unrank(const BigCount& r, int n, int k);

/// Draws valid strings uniformly at random by unranking a uniform index.
/// Indices come from rejection sampling on fixed-width 64-bit blocks of a
/// seeded mt19937_64, so a given seed always yields the same draw sequence.
class UniformSampler {
public:
    UniformSampler(int n, int k, std::uint64_t seed);
    CanonicalString next();

private:
    int n_;
    int k_;
    BigCount total_;
    std::mt19937_64 rng_;
};

/// First draw of UniformSampler(n, k, seed).
CanonicalString sample_uniform(int n, int k, std::uint64_t seed);

/// Memoizing front end for the counting functions. Reads and writes are
/// serialized internally, so a shared table may be queried from several
/// threads.
class CountTable {
public:
    BigCount icdfa(int n, int k);
    LiskovetsCounts liskovets(int n, int k);
    BigCount bound(int n, int k);
    BigCount stirling(int r, int i);
    BigCount factorial(int m);

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, BigCount> icdfa_;
    std::map<std::pair<int, int>, LiskovetsCounts> liskovets_;
    std::vector<std::vector<BigCount>> stirling_rows_;  ///< row r holds S(r, 0..r)
    std::vector<BigCount> factorials_;

    void grow_stirling(int r);
};

namespace detail {

/// completions[i][m] = number of valid ways to fill cells [i, kn) when labels
/// 0..m have already occurred in cells [0, i). Row kn is the base case; the
/// answer to the whole counting problem is completions[0][0]. Shared by rank
/// and unrank.
std::vector<std::vector<BigCount>> completion_table(int n, int k);

}  // namespace detail
}  // namespace icdfa
