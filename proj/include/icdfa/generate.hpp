#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "icdfa/types.hpp"

namespace icdfa {

/// Last index at which label m may first occur (R2, 0-based).
inline int flag_deadline(int k, int m) { return k * m - 1; }

/// True if cells [i+1, kn) can still be completed into a valid string when
/// labels 0..mx have occurred within cells [0, i]: either every label is
/// already placed, or the next one can still make its deadline.
inline bool completion_feasible(int n, int k, int i, int mx) {
    return mx == n - 1 || i < flag_deadline(k, mx + 1);
}

/// Lexicographically smallest valid string for (n, k): zeros everywhere
/// except that each label j is introduced at its deadline k*j - 1.
CanonicalString first_string(int n, int k);

/// Lexicographic successor of s among valid strings for the same (n, k), or
/// nullopt when s is the maximum. Requires a valid s.
std::optional<CanonicalString> next_string(const CanonicalString& s);

/// Resumable cursor over all valid strings for (n, k) in lexicographic
/// order. Single-consumer; independent instances may run concurrently.
class Generator {
public:
    /// Positioned at the first string.
    Generator(int n, int k);

    /// Positioned at s itself. Requires a valid s.
    static Generator at(const CanonicalString& s);

    /// Positioned at the successor of s (possibly exhausted). Requires a
    /// valid s.
    static Generator after(const CanonicalString& s);

    bool exhausted() const { return exhausted_; }
    const CanonicalString& current() const { return current_; }

    /// Advances to the next string; false once the stream ends.
    bool advance();

    /// Number of candidate strings materialized so far (the initial string
    /// plus one per successful advance). Generation touches no others.
    std::uint64_t materialized() const { return materialized_; }

private:
    CanonicalString current_;
    std::vector<int> prefix_max_;  ///< prefix_max_[i] = max(0, cells[0..i])
    bool exhausted_ = false;
    std::uint64_t materialized_ = 0;

    explicit Generator(CanonicalString s);
    void fill_min_suffix(int from, int mx);
};

struct GenerateStats {
    std::uint64_t emitted = 0;
    std::uint64_t materialized = 0;
};

/// Streams valid strings in strictly increasing lexicographic order: from
/// the beginning, or from the first string strictly greater than `from`,
/// stopping at exhaustion or after `limit` strings.
GenerateStats generate_all(int n, int k,
                           const std::optional<CanonicalString>& from,
                           std::optional<std::uint64_t> limit,
                           const std::function<void(const CanonicalString&)>& fn);

/// Flag sequences for (n, k) in lexicographic order of (f_1, ..., f_{n-1});
/// exactly one empty sequence when n = 1.
class FlagEnumerator {
public:
    FlagEnumerator(int n, int k);
    std::optional<FlagSequence> next();

private:
    int n_;
    int k_;
    std::vector<int> flags_;
    bool done_ = false;
    bool started_ = false;

    bool step();
};

std::vector<FlagSequence> all_flag_sequences(int n, int k);

/// Streams every valid string whose flag sequence is exactly fs, in
/// lexicographic order (the free cells form a mixed-radix odometer).
/// Returns the number emitted, which equals fillings(fs).
std::uint64_t for_each_with_flags(const FlagSequence& fs,
                                  const std::function<void(const CanonicalString&)>& fn);

/// Contiguous range of flag sequences, indexed into all_flag_sequences(n, k),
/// with the exact number of strings its blocks will produce.
struct FlagRange {
    std::size_t first = 0;
    std::size_t count = 0;
    BigCount fills;
};

/// Splits the flag-sequence stream into at most `parts` contiguous ranges
/// balanced by exact fill counts. Feeding every range to for_each_with_flags
/// reproduces the full string set exactly once (ranges do not interleave in
/// flag order; they do interleave in string order).
std::vector<FlagRange> partition_by_flags(int n, int k, int parts);

/// Contiguous range of lexicographic ranks, [begin, end).
struct RankRange {
    BigCount begin;
    BigCount end;
};

/// Splits [0, count_icdfa(n, k)) into at most `parts` near-equal contiguous
/// rank ranges. Generating each range in order reproduces the full stream
/// byte for byte, which makes these the unit of parallel generation.
std::vector<RankRange> partition_by_rank(int n, int k, int parts);

}  // namespace icdfa
