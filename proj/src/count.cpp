#include "icdfa/count.hpp"

#include <sstream>
#include <stdexcept>

#include "icdfa/validate.hpp"

namespace icdfa {

namespace {

BigCount pow_ui(unsigned long base, unsigned long exp) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// Last index at which label m may first occur (R2, 0-based).
int flag_deadline(int k, int m) { return k * m - 1; }

}  // namespace

BigCount fillings(const FlagSequence& fs) {
    check_flag_sequence(fs);
    if (fs.n == 1) {
        return 1;
    }
    BigCount total = 1;
    int prev = -1;
    for (std::size_t j = 1; j <= fs.flags.size(); ++j) {
        const int gap = fs.flags[j - 1] - prev - 1;
        total *= pow_ui(static_cast<unsigned long>(j), static_cast<unsigned long>(gap));
        prev = fs.flags[j - 1];
    }
    const int trailing = fs.k * fs.n - 1 - prev;
    total *= pow_ui(static_cast<unsigned long>(fs.n), static_cast<unsigned long>(trailing));
    return total;
}

BigCount count_icdfa(int n, int k) {
    if (n < 1 || k < 1) {
        throw StructuralError("counting needs n >= 1 and k >= 1");
    }
    if (n == 1) {
        return 1;
    }
    // The nested flag sum, folded one flag at a time: acc[f] is the sum of
    // prod_{l<=j} l^(gap_l) over all admissible prefixes ending with f_j = f.
    const int total_cells = k * n;
    std::vector<BigCount> acc(static_cast<std::size_t>(total_cells));
    for (int f = 0; f <= flag_deadline(k, 1); ++f) {
        acc[static_cast<std::size_t>(f)] = 1;  // 1^f leading zeros
    }
    for (int j = 2; j <= n - 1; ++j) {
        std::vector<BigCount> next(static_cast<std::size_t>(total_cells));
        for (int f = j - 1; f <= flag_deadline(k, j); ++f) {
            BigCount sum = 0;
            for (int prev = j - 2; prev < f; ++prev) {
                if (sgn(acc[static_cast<std::size_t>(prev)]) == 0) continue;
                sum += acc[static_cast<std::size_t>(prev)] *
                       pow_ui(static_cast<unsigned long>(j),
                              static_cast<unsigned long>(f - prev - 1));
            }
            next[static_cast<std::size_t>(f)] = sum;
        }
        acc = std::move(next);
    }
    BigCount total = 0;
    for (int f = n - 2; f <= flag_deadline(k, n - 1); ++f) {
        if (sgn(acc[static_cast<std::size_t>(f)]) == 0) continue;
        total += acc[static_cast<std::size_t>(f)] *
                 pow_ui(static_cast<unsigned long>(n),
                        static_cast<unsigned long>(total_cells - 1 - f));
    }
    return total;
}

LiskovetsCounts count_liskovets(int n, int k) {
    if (n < 1 || k < 1) {
        throw StructuralError("counting needs n >= 1 and k >= 1");
    }
    std::vector<BigCount> h(static_cast<std::size_t>(n) + 1);
    h[1] = 1;
    for (int m = 2; m <= n; ++m) {
        BigCount value = pow_ui(static_cast<unsigned long>(m),
                                static_cast<unsigned long>(k) * m);
        for (int j = 1; j < m; ++j) {
            BigCount binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m - 1),
                         static_cast<unsigned long>(j - 1));
            value -= binom *
                     pow_ui(static_cast<unsigned long>(m),
                            static_cast<unsigned long>(k) * (m - j)) *
                     h[static_cast<std::size_t>(j)];
        }
        h[static_cast<std::size_t>(m)] = std::move(value);
    }
    BigCount fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n - 1));
    if (!mpz_divisible_p(h[static_cast<std::size_t>(n)].get_mpz_t(), fact.get_mpz_t())) {
        throw std::logic_error("h_k(n) not divisible by (n-1)!");
    }
    BigCount quotient;
    mpz_divexact(quotient.get_mpz_t(), h[static_cast<std::size_t>(n)].get_mpz_t(),
                 fact.get_mpz_t());
    return LiskovetsCounts{h[static_cast<std::size_t>(n)], quotient};
}

BigCount stirling_bound(int n, int k) {
    if (n < 1 || k < 1) {
        throw StructuralError("counting needs n >= 1 and k >= 1");
    }
    // S(r, i) = i*S(r-1, i) + S(r-1, i-1), columns beyond n never needed.
    const int rows = k * n + 1;
    const int cols = n;
    std::vector<BigCount> prev(static_cast<std::size_t>(cols) + 1);
    std::vector<BigCount> cur(static_cast<std::size_t>(cols) + 1);
    prev[0] = 1;  // S(0, 0)
    for (int r = 1; r <= rows; ++r) {
        cur[0] = 0;
        for (int i = 1; i <= cols && i <= r; ++i) {
            cur[static_cast<std::size_t>(i)] =
                i * prev[static_cast<std::size_t>(i)] + prev[static_cast<std::size_t>(i) - 1];
        }
        for (int i = r + 1; i <= cols; ++i) {
            cur[static_cast<std::size_t>(i)] = 0;
        }
        std::swap(prev, cur);
    }
    BigCount sum = 0;
    for (int i = 1; i <= cols; ++i) {
        sum += prev[static_cast<std::size_t>(i)];
    }
    return sum;
}

BigCount count_with_finals(int n, int k) {
    BigCount r = count_icdfa(n, k);
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    return r;
}

namespace detail {

std::vector<std::vector<BigCount>> completion_table(int n, int k) {
    const int total = k * n;
    std::vector<std::vector<BigCount>> c(
        static_cast<std::size_t>(total) + 1,
        std::vector<BigCount>(static_cast<std::size_t>(n)));
    for (int i = total; i >= 0; --i) {
        auto& row = c[static_cast<std::size_t>(i)];
        row[static_cast<std::size_t>(n) - 1] =
            pow_ui(static_cast<unsigned long>(n), static_cast<unsigned long>(total - i));
        for (int m = n - 2; m >= 0; --m) {
            if (i > flag_deadline(k, m + 1) || i == total) {
                row[static_cast<std::size_t>(m)] = 0;
            } else {
                const auto& below = c[static_cast<std::size_t>(i) + 1];
                row[static_cast<std::size_t>(m)] =
                    (m + 1) * below[static_cast<std::size_t>(m)] +
                    below[static_cast<std::size_t>(m) + 1];
            }
        }
    }
    return c;
}

}  // namespace detail

BigCount rank(const CanonicalString& s) {
    require_valid(s);
    const auto c = detail::completion_table(s.n, s.k);
    BigCount r = 0;
    int mx = 0;
    const int total = s.k * s.n;
    for (int i = 0; i < total; ++i) {
        const int v = s.cells[static_cast<std::size_t>(i)];
        const auto& below = c[static_cast<std::size_t>(i) + 1];
        if (v == mx + 1) {
            // All mx+1 reuses of an old label sort below the new label.
            r += (mx + 1) * below[static_cast<std::size_t>(mx)];
            mx = v;
        } else {
            r += v * below[static_cast<std::size_t>(mx)];
        }
    }
    return r;
}

CanonicalString unrank(const BigCount& r, int n, int k) {
    if (n < 1 || k < 1) {
        throw StructuralError("unrank needs n >= 1 and k >= 1");
    }
    const auto c = detail::completion_table(n, k);
    const BigCount& total_count = c[0][0];
    if (sgn(r) < 0 || r >= total_count) {
        std::ostringstream msg;
        msg << "rank " << r.get_str() << " out of range: there are "
            << total_count.get_str() << " strings for n=" << n << ", k=" << k;
        throw std::out_of_range(msg.str());
    }
    CanonicalString s{n, k, std::vector<int>(static_cast<std::size_t>(k) * n)};
    BigCount rest = r;
    int mx = 0;
    const int total = k * n;
    for (int i = 0; i < total; ++i) {
        const auto& below = c[static_cast<std::size_t>(i) + 1];
        const BigCount& old_weight = below[static_cast<std::size_t>(mx)];
        BigCount old_total = (mx + 1) * old_weight;
        if (mx == n - 1 || rest < old_total) {
            BigCount q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), rest.get_mpz_t(),
                        old_weight.get_mpz_t());
            s.cells[static_cast<std::size_t>(i)] = static_cast<int>(q.get_ui());
            rest = std::move(rem);
        } else {
            rest -= old_total;
            ++mx;
            s.cells[static_cast<std::size_t>(i)] = mx;
        }
    }
    return s;
}

UniformSampler::UniformSampler(int n, int k, std::uint64_t seed)
    : n_(n), k_(k), total_(count_icdfa(n, k)), rng_(seed) {}

CanonicalString UniformSampler::next() {
    if (total_ == 1) {
        return unrank(0, n_, k_);
    }
    BigCount bound_minus_1 = total_ - 1;
    const std::size_t bits = mpz_sizeinbase(bound_minus_1.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const std::uint64_t top_mask =
        (bits % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (bits % 64)) - 1);
    std::vector<std::uint64_t> buf(words);
    BigCount draw;
    for (;;) {
        for (std::size_t w = 0; w < words; ++w) {
            buf[w] = rng_();
        }
        buf[words - 1] &= top_mask;
        mpz_import(draw.get_mpz_t(), words, -1 /* LSW first */, sizeof(std::uint64_t),
                   0, 0, buf.data());
        if (draw < total_) {
            return unrank(draw, n_, k_);
        }
    }
}

CanonicalString sample_uniform(int n, int k, std::uint64_t seed) {
    return UniformSampler(n, k, seed).next();
}

BigCount CountTable::icdfa(int n, int k) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, fresh] = icdfa_.try_emplace({n, k});
    if (fresh) {
        it->second = count_icdfa(n, k);
    }
    return it->second;
}

LiskovetsCounts CountTable::liskovets(int n, int k) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, fresh] = liskovets_.try_emplace({n, k});
    if (fresh) {
        it->second = count_liskovets(n, k);
    }
    return it->second;
}

BigCount CountTable::bound(int n, int k) {
    BigCount sum = 0;
    for (int i = 1; i <= n; ++i) {
        sum += stirling(k * n + 1, i);
    }
    return sum;
}

void CountTable::grow_stirling(int r) {
    while (static_cast<int>(stirling_rows_.size()) <= r) {
        const std::size_t row = stirling_rows_.size();
        std::vector<BigCount> values(row + 1);
        if (row == 0) {
            values[0] = 1;
        } else {
            const auto& prev = stirling_rows_[row - 1];
            values[0] = 0;
            for (std::size_t i = 1; i <= row; ++i) {
                values[i] = prev[i - 1];
                if (i < prev.size()) {
                    values[i] += static_cast<unsigned long>(i) * prev[i];
                }
            }
        }
        stirling_rows_.push_back(std::move(values));
    }
}

BigCount CountTable::stirling(int r, int i) {
    if (r < 0 || i < 0) {
        throw StructuralError("stirling numbers need r, i >= 0");
    }
    if (i > r) {
        return 0;
    }
    std::lock_guard<std::mutex> lock(mutex_);
    grow_stirling(r);
    return stirling_rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
}

BigCount CountTable::factorial(int m) {
    if (m < 0) {
        throw StructuralError("factorial needs m >= 0");
    }
    std::lock_guard<std::mutex> lock(mutex_);
    if (factorials_.empty()) {
        factorials_.push_back(1);
    }
    while (static_cast<int>(factorials_.size()) <= m) {
        factorials_.push_back(factorials_.back() *
                              static_cast<unsigned long>(factorials_.size()));
    }
    return factorials_[static_cast<std::size_t>(m)];
}

}  // namespace icdfa
