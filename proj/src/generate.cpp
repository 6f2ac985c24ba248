#include "icdfa/generate.hpp"

#include <algorithm>

#include "icdfa/count.hpp"
#include "icdfa/validate.hpp"

namespace icdfa {

CanonicalString first_string(int n, int k) {
    if (n < 1 || k < 1) {
        throw StructuralError("generation needs n >= 1 and k >= 1");
    }
    CanonicalString s{n, k, std::vector<int>(static_cast<std::size_t>(k) * n, 0)};
    int mx = 0;
    for (int i = 0; i < k * n; ++i) {
        if (!completion_feasible(n, k, i, mx)) {
            s.cells[static_cast<std::size_t>(i)] = ++mx;
        }
    }
    return s;
}

Generator::Generator(int n, int k) : Generator(first_string(n, k)) {}

Generator::Generator(CanonicalString s) : current_(std::move(s)) {
    const int total = current_.k * current_.n;
    prefix_max_.resize(static_cast<std::size_t>(total));
    int mx = 0;
    for (int i = 0; i < total; ++i) {
        mx = std::max(mx, current_.cells[static_cast<std::size_t>(i)]);
        prefix_max_[static_cast<std::size_t>(i)] = mx;
    }
    materialized_ = 1;
}

Generator Generator::at(const CanonicalString& s) {
    require_valid(s);
    return Generator(s);
}

Generator Generator::after(const CanonicalString& s) {
    Generator g = at(s);
    g.advance();
    return g;
}

void Generator::fill_min_suffix(int from, int mx) {
    const int n = current_.n;
    const int k = current_.k;
    const int total = k * n;
    for (int i = from; i < total; ++i) {
        if (completion_feasible(n, k, i, mx)) {
            current_.cells[static_cast<std::size_t>(i)] = 0;
        } else {
            current_.cells[static_cast<std::size_t>(i)] = ++mx;
        }
        prefix_max_[static_cast<std::size_t>(i)] = mx;
    }
}

bool Generator::advance() {
    if (exhausted_) {
        return false;
    }
    const int n = current_.n;
    const int k = current_.k;
    for (int i = k * n - 1; i >= 0; --i) {
        const int before = i > 0 ? prefix_max_[static_cast<std::size_t>(i) - 1] : 0;
        const int vmax = std::min(before + 1, n - 1);
        for (int v = current_.cells[static_cast<std::size_t>(i)] + 1; v <= vmax; ++v) {
            const int mx = std::max(before, v);
            if (!completion_feasible(n, k, i, mx)) {
                continue;
            }
            current_.cells[static_cast<std::size_t>(i)] = v;
            prefix_max_[static_cast<std::size_t>(i)] = mx;
            fill_min_suffix(i + 1, mx);
            ++materialized_;
            return true;
        }
    }
    exhausted_ = true;
    return false;
}

std::optional<CanonicalString> next_string(const CanonicalString& s) {
    Generator g = Generator::after(s);
    if (g.exhausted()) {
        return std::nullopt;
    }
    return g.current();
}

GenerateStats generate_all(int n, int k,
                           const std::optional<CanonicalString>& from,
                           std::optional<std::uint64_t> limit,
                           const std::function<void(const CanonicalString&)>& fn) {
    if (from && (from->n != n || from->k != k)) {
        throw StructuralError("resumption string has mismatched (n, k)");
    }
    GenerateStats stats;
    if (limit && *limit == 0) {
        return stats;
    }
    Generator gen = from ? Generator::after(*from) : Generator(n, k);
    while (!gen.exhausted()) {
        fn(gen.current());
        ++stats.emitted;
        if (limit && stats.emitted == *limit) {
            break;
        }
        gen.advance();
    }
    stats.materialized = gen.materialized();
    return stats;
}

FlagEnumerator::FlagEnumerator(int n, int k) : n_(n), k_(k) {
    if (n < 1 || k < 1) {
        throw StructuralError("flag enumeration needs n >= 1 and k >= 1");
    }
    flags_.resize(static_cast<std::size_t>(n) - 1);
    for (int j = 0; j < n - 1; ++j) {
        flags_[static_cast<std::size_t>(j)] = j;  // minimal: f_j = j - 1, 0-based j+1
    }
}

bool FlagEnumerator::step() {
    // Successor in lexicographic order: bump the rightmost flag that can
    // grow while the flags to its right still fit under their deadlines.
    const int m = n_ - 1;
    for (int j = m - 1; j >= 0; --j) {
        const int cand = flags_[static_cast<std::size_t>(j)] + 1;
        if (cand > flag_deadline(k_, j + 1)) {
            continue;
        }
        int prev = cand;
        bool ok = true;
        for (int l = j + 1; l < m; ++l) {
            ++prev;
            if (prev > flag_deadline(k_, l + 1)) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        flags_[static_cast<std::size_t>(j)] = cand;
        for (int l = j + 1; l < m; ++l) {
            flags_[static_cast<std::size_t>(l)] = flags_[static_cast<std::size_t>(l) - 1] + 1;
        }
        return true;
    }
    return false;
}

std::optional<FlagSequence> FlagEnumerator::next() {
    if (done_) {
        return std::nullopt;
    }
    if (!started_) {
        started_ = true;
    } else if (!step()) {
        done_ = true;
        return std::nullopt;
    }
    return FlagSequence{n_, k_, flags_};
}

std::vector<FlagSequence> all_flag_sequences(int n, int k) {
    std::vector<FlagSequence> out;
    FlagEnumerator en(n, k);
    while (auto fs = en.next()) {
        out.push_back(std::move(*fs));
    }
    return out;
}

std::uint64_t for_each_with_flags(const FlagSequence& fs,
                                  const std::function<void(const CanonicalString&)>& fn) {
    check_flag_sequence(fs);
    const int n = fs.n;
    const int k = fs.k;
    const int total = k * n;
    CanonicalString s{n, k, std::vector<int>(static_cast<std::size_t>(total), 0)};
    // radix[i] = number of values cell i may take; 0 marks a flag cell.
    std::vector<int> radix(static_cast<std::size_t>(total), n);
    {
        int label = 0;
        std::size_t next_flag = 0;
        for (int i = 0; i < total; ++i) {
            if (next_flag < fs.flags.size() && fs.flags[next_flag] == i) {
                ++label;
                ++next_flag;
                s.cells[static_cast<std::size_t>(i)] = label;
                radix[static_cast<std::size_t>(i)] = 0;
            } else {
                radix[static_cast<std::size_t>(i)] = label + 1;
            }
        }
    }
    std::uint64_t emitted = 0;
    for (;;) {
        fn(s);
        ++emitted;
        int i = total - 1;
        for (; i >= 0; --i) {
            if (radix[static_cast<std::size_t>(i)] == 0) {
                continue;
            }
            if (s.cells[static_cast<std::size_t>(i)] + 1 < radix[static_cast<std::size_t>(i)]) {
                ++s.cells[static_cast<std::size_t>(i)];
                break;
            }
            s.cells[static_cast<std::size_t>(i)] = 0;
        }
        if (i < 0) {
            return emitted;
        }
    }
}

std::vector<FlagRange> partition_by_flags(int n, int k, int parts) {
    if (parts < 1) {
        throw StructuralError("partitioning needs parts >= 1");
    }
    const std::vector<FlagSequence> seqs = all_flag_sequences(n, k);
    std::vector<BigCount> fills;
    fills.reserve(seqs.size());
    BigCount total = 0;
    for (const auto& fs : seqs) {
        fills.push_back(fillings(fs));
        total += fills.back();
    }
    std::vector<FlagRange> ranges;
    std::size_t next = 0;
    BigCount remaining = total;
    for (int p = 0; p < parts && next < seqs.size(); ++p) {
        FlagRange r;
        r.first = next;
        r.fills = 0;
        const int parts_left = parts - p;
        // Greedy: close the range once it reaches its fair share of what is
        // left. Fill counts are heavily skewed, so shares shrink as we go.
        const BigCount target = (remaining + parts_left - 1) / parts_left;
        do {
            r.fills += fills[next];
            ++next;
            ++r.count;
        } while (next < seqs.size() && r.fills < target);
        remaining -= r.fills;
        ranges.push_back(std::move(r));
    }
    // Parts ran out first: fold the leftovers into the last range.
    for (; next < seqs.size(); ++next) {
        ranges.back().fills += fills[next];
        ++ranges.back().count;
    }
    return ranges;
}

std::vector<RankRange> partition_by_rank(int n, int k, int parts) {
    if (parts < 1) {
        throw StructuralError("partitioning needs parts >= 1");
    }
    const BigCount total = count_icdfa(n, k);
    std::vector<RankRange> ranges;
    BigCount begin = 0;
    for (int p = 0; p < parts; ++p) {
        BigCount end = (total * (p + 1)) / parts;
        if (end > begin) {
            ranges.push_back(RankRange{begin, end});
            begin = end;
        }
    }
    return ranges;
}

}  // namespace icdfa
