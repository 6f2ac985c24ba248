#pragma once

// Test-local reference implementations, written straight from the defining
// conditions with no shortcuts. They deliberately share no code with the
// library paths they are used to check.

#include <algorithm>
#include <vector>

#include "icdfa/types.hpp"

namespace refo {

// R1, literally: every occurrence of a label m > 1 is preceded by an
// occurrence of m - 1.
inline bool r1_holds(const std::vector<int>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const int m = cells[i];
        if (m <= 1) {
            continue;
        }
        bool found = false;
        for (std::size_t j = 0; j < i; ++j) {
            if (cells[j] == m - 1) {
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

// R2, literally: label m occurs among the first k*m cells, for m = 1..n-1.
inline bool r2_holds(const std::vector<int>& cells, int n, int k) {
    for (int m = 1; m <= n - 1; ++m) {
        bool found = false;
        for (int j = 0; j < k * m; ++j) {
            if (cells[static_cast<std::size_t>(j)] == m) {
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

inline bool naive_valid(const std::vector<int>& cells, int n, int k) {
    return r1_holds(cells) && r2_holds(cells, n, k);
}

// Every cell tuple of length k*n over [0, n-1], in lexicographic order.
inline std::vector<std::vector<int>> all_cell_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cells(static_cast<std::size_t>(k) * n, 0);
    for (;;) {
        out.push_back(cells);
        int i = static_cast<int>(cells.size()) - 1;
        for (; i >= 0; --i) {
            if (++cells[static_cast<std::size_t>(i)] < n) {
                break;
            }
            cells[static_cast<std::size_t>(i)] = 0;
        }
        if (i < 0) {
            return out;
        }
    }
}

// Ground truth for generation and ranking: all valid strings, sorted.
inline std::vector<icdfa::CanonicalString> all_valid_strings(int n, int k) {
    std::vector<icdfa::CanonicalString> out;
    for (auto& cells : all_cell_tuples(n, k)) {
        if (naive_valid(cells, n, k)) {
            out.push_back(icdfa::CanonicalString{n, k, std::move(cells)});
        }
    }
    return out;  // tuple enumeration is already lexicographic
}

// Relabels states by a permutation perm (new index = perm[old]); the initial
// state and finals move along.
inline icdfa::Dfa relabel(const icdfa::Dfa& d, const std::vector<int>& perm) {
    icdfa::Dfa out;
    out.structure.n = d.structure.n;
    out.structure.k = d.structure.k;
    out.structure.initial = perm[static_cast<std::size_t>(d.structure.initial)];
    out.structure.delta.resize(d.structure.delta.size());
    for (int q = 0; q < d.structure.n; ++q) {
        for (int sym = 0; sym < d.structure.k; ++sym) {
            out.structure.delta[static_cast<std::size_t>(perm[static_cast<std::size_t>(q)]) *
                                    d.structure.k +
                                static_cast<std::size_t>(sym)] =
                perm[static_cast<std::size_t>(d.structure.target(q, sym))];
        }
    }
    for (int f : d.finals) {
        out.finals.push_back(perm[static_cast<std::size_t>(f)]);
    }
    std::sort(out.finals.begin(), out.finals.end());
    return out;
}

}  // namespace refo
