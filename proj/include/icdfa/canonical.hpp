#pragma once

#include <vector>

#include "icdfa/types.hpp"

namespace icdfa {

struct CanonicalizeResult {
    CanonicalString string;
    StateMapping mapping;
};

/// Renames the states of d in first-reference order: the initial state
/// becomes 0, and scanning the evolving cell sequence left to right, every
/// newly referenced state takes the next free index. Unreachable states are
/// dropped, so the output string has mapping.reachable_count states and
/// always satisfies R1 and R2.
CanonicalizeResult canonicalize(const DfaStructure& d);

/// The structure a valid string represents: n states, initial 0,
/// delta(q, sigma_j) = cells[q*k + j]. The result is initially connected.
DfaStructure from_string(const CanonicalString& s);

/// Canonical string of the reachable part plus the finals renumbered under
/// the canonical ordering. Finals on unreachable states are dropped.
NormalForm normal_form(const Dfa& d);

/// True iff the reachable parts of a and b are isomorphic, finals included.
/// Unreachable states never influence the answer.
bool isomorphic(const Dfa& a, const Dfa& b);

namespace detail {

/// Allocation-free core of canonicalize for hot loops. `canon` and `order`
/// are resized by the call; returns the reachable state count and writes the
/// canonical cells of the reachable part (k * reachable entries) into `out`.
int canonicalize_into(const int* delta, int n, int k, int initial,
                      std::vector<int>& canon, std::vector<int>& order,
                      std::vector<int>& out);

}  // namespace detail
}  // namespace icdfa
