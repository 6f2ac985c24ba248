#include "icdfa/canonical.hpp"

#include <algorithm>

#include "icdfa/validate.hpp"

namespace icdfa {

namespace detail {

int canonicalize_into(const int* delta, int n, int k, int initial,
                      std::vector<int>& canon, std::vector<int>& order,
                      std::vector<int>& out) {
    canon.assign(static_cast<std::size_t>(n), -1);
    order.clear();
    order.reserve(static_cast<std::size_t>(n));
    canon[static_cast<std::size_t>(initial)] = 0;
    order.push_back(initial);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int* row = delta + static_cast<std::size_t>(order[head]) * k;
        for (int sym = 0; sym < k; ++sym) {
            const int t = row[sym];
            if (canon[static_cast<std::size_t>(t)] < 0) {
                canon[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    }
    const int reachable = static_cast<int>(order.size());
    out.clear();
    out.reserve(static_cast<std::size_t>(reachable) * k);
    for (int q = 0; q < reachable; ++q) {
        const int* row = delta + static_cast<std::size_t>(order[static_cast<std::size_t>(q)]) * k;
        for (int sym = 0; sym < k; ++sym) {
            out.push_back(canon[static_cast<std::size_t>(row[sym])]);
        }
    }
    return reachable;
}

}  // namespace detail

CanonicalizeResult canonicalize(const DfaStructure& d) {
    check_well_formed(d);
    std::vector<int> canon;
    std::vector<int> order;
    std::vector<int> cells;
    const int reachable =
        detail::canonicalize_into(d.delta.data(), d.n, d.k, d.initial, canon, order, cells);
    return CanonicalizeResult{CanonicalString{reachable, d.k, std::move(cells)},
                              StateMapping{std::move(canon), reachable}};
}

DfaStructure from_string(const CanonicalString& s) {
    require_valid(s);
    return DfaStructure{s.n, s.k, s.cells, 0};
}

NormalForm normal_form(const Dfa& d) {
    check_well_formed(d);
    CanonicalizeResult res = canonicalize(d.structure);
    std::vector<int> finals;
    finals.reserve(d.finals.size());
    for (int f : d.finals) {
        const int mapped = res.mapping.forward[static_cast<std::size_t>(f)];
        if (mapped >= 0) {
            finals.push_back(mapped);
        }
    }
    std::sort(finals.begin(), finals.end());
    return NormalForm{std::move(res.string), std::move(finals)};
}

bool isomorphic(const Dfa& a, const Dfa& b) {
    // Normal forms are equal exactly when the reachable parts are isomorphic;
    // differing alphabet sizes or reachable counts simply compare unequal.
    return normal_form(a) == normal_form(b);
}

}  // namespace icdfa
