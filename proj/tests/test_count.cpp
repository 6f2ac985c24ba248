#include <doctest.h>

#include <random>
#include <set>

#include "icdfa/count.hpp"
#include "icdfa/generate.hpp"
#include "icdfa/validate.hpp"
#include "reference_oracle.hpp"

using icdfa::BigCount;
using icdfa::CanonicalString;
using icdfa::FlagSequence;

TEST_SUITE_BEGIN("count");

TEST_CASE("fillings of the (3, 2) flag sequences") {
    CHECK(icdfa::fillings({3, 2, {0, 1}}) == 81);
    CHECK(icdfa::fillings({3, 2, {1, 3}}) == 18);
    CHECK(icdfa::fillings({1, 4, {}}) == 1);
}

TEST_CASE("fillings rejects bad flag sequences") {
    CHECK_THROWS_AS(icdfa::fillings({3, 2, {1, 1}}), icdfa::StructuralError);
    CHECK_THROWS_AS(icdfa::fillings({3, 2, {0, 4}}), icdfa::StructuralError);
    CHECK_THROWS_AS(icdfa::fillings({3, 2, {0}}), icdfa::StructuralError);
}

TEST_CASE("exact counts at desk scale") {
    CHECK(icdfa::count_icdfa(3, 2) == 216);
    CHECK(icdfa::count_icdfa(1, 4) == 1);
    CHECK(icdfa::count_icdfa(2, 2) == 12);
    CHECK(icdfa::count_icdfa(4, 2) == 5248);
    CHECK(icdfa::count_icdfa(2, 3) == 56);
    // Larger pins, confirmed by the brute-force scan at (5,2) and by the
    // generator/recursion agreement at (6,2).
    CHECK(icdfa::count_icdfa(5, 2) == 160675);
    CHECK(icdfa::count_icdfa(6, 2) == 5931540);
}

TEST_CASE("count matches the reference enumeration") {
    for (auto [n, k] : {std::pair{1, 1}, {2, 2}, {3, 2}, {2, 3}, {4, 2}, {3, 3}}) {
        CHECK(icdfa::count_icdfa(n, k) ==
              BigCount(refo::all_valid_strings(n, k).size()));
    }
}

TEST_CASE("liskovets recursion values") {
    for (int k = 1; k <= 3; ++k) {
        const auto one = icdfa::count_liskovets(1, k);
        CHECK(one.h == 1);
        CHECK(one.H == 1);
    }
    const auto two = icdfa::count_liskovets(2, 2);
    CHECK(two.h == 12);
    CHECK(two.H == 12);
    const auto three = icdfa::count_liskovets(3, 2);
    CHECK(three.h == 432);
    CHECK(three.H == 216);
}

TEST_CASE("two formulas, one value") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 3; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(icdfa::count_liskovets(n, k).H == icdfa::count_icdfa(n, k));
        }
    }
}

TEST_CASE("stirling bound values and dominance") {
    CHECK(icdfa::stirling_bound(3, 2) == 365);
    CHECK(icdfa::stirling_bound(1, 1) == 1);
    CHECK(icdfa::stirling_bound(2, 2) == 16);
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 3; ++k) {
            CHECK(icdfa::count_icdfa(n, k) <= icdfa::stirling_bound(n, k));
        }
    }
}

TEST_CASE("final-state sets multiply the count by 2^n") {
    CHECK(icdfa::count_with_finals(3, 2) == 1728);
    CHECK(icdfa::count_with_finals(2, 2) == 48);
    CHECK(icdfa::count_with_finals(1, 1) == 2);
}

TEST_CASE("flag decomposition sums to the count") {
    for (auto [n, k] : {std::pair{4, 2}, {3, 3}, {5, 2}}) {
        BigCount sum = 0;
        for (const auto& fs : icdfa::all_flag_sequences(n, k)) {
            sum += icdfa::fillings(fs);
        }
        CHECK(sum == icdfa::count_icdfa(n, k));
    }
}

TEST_CASE("one-letter closed form") {
    for (int n = 1; n <= 50; ++n) {
        CHECK(icdfa::count_icdfa(n, 1) == n);
    }
}

TEST_CASE("completion table agrees with the flag sum") {
    // Two independent routes: the suffix-count recursion behind rank/unrank
    // and the per-flag product sum.
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 3; ++k) {
            CHECK(icdfa::detail::completion_table(n, k)[0][0] == icdfa::count_icdfa(n, k));
        }
    }
}

TEST_CASE("factorial divisibility of h") {
    icdfa::CountTable table;
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 3; ++k) {
            const auto counts = icdfa::count_liskovets(n, k);
            CHECK(counts.H * table.factorial(n - 1) == counts.h);
        }
    }
}

TEST_CASE("rank of frozen strings") {
    CHECK(icdfa::rank({2, 2, {0, 1, 0, 0}}) == 0);
    CHECK(icdfa::rank({2, 2, {1, 0, 0, 0}}) == 4);
    CHECK(icdfa::rank({1, 1, {0}}) == 0);
    CHECK(icdfa::rank({2, 2, {1, 1, 1, 1}}) == 11);
}

TEST_CASE("unrank of frozen ranks") {
    CHECK(icdfa::unrank(0, 2, 2).cells == std::vector<int>{0, 1, 0, 0});
    CHECK(icdfa::unrank(11, 2, 2).cells == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("unrank(B-1) is the generator's final emission") {
    CanonicalString last;
    icdfa::generate_all(3, 2, std::nullopt, std::nullopt,
                        [&](const CanonicalString& s) { last = s; });
    CHECK(icdfa::unrank(215, 3, 2) == last);
}

TEST_CASE("rank and unrank are mutually inverse over full enumerations") {
    for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
        const auto all = refo::all_valid_strings(n, k);
        CHECK(icdfa::count_icdfa(n, k) == BigCount(all.size()));
        for (std::size_t i = 0; i < all.size(); ++i) {
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(i);
            CHECK(icdfa::rank(all[i]) == BigCount(i));
            CHECK(icdfa::unrank(BigCount(i), n, k) == all[i]);
        }
    }
}

TEST_CASE("rank is strictly monotone in lexicographic order") {
    const auto all = refo::all_valid_strings(3, 2);
    BigCount prev = -1;
    for (const auto& s : all) {
        const BigCount r = icdfa::rank(s);
        CHECK(r > prev);
        prev = r;
    }
}

TEST_CASE("rank walks the generator stream at (4, 2)") {
    std::uint64_t at = 0;
    icdfa::generate_all(4, 2, std::nullopt, std::nullopt, [&](const CanonicalString& s) {
        CHECK(icdfa::rank(s) == BigCount(static_cast<unsigned long>(at)));
        ++at;
    });
    CHECK(at == 5248);
}

TEST_CASE("sampled round-trips beyond exhaustive reach") {
    std::mt19937_64 rng(424242);
    for (auto [n, k] : {std::pair{5, 2}, {4, 3}, {6, 2}}) {
        const BigCount total = icdfa::count_icdfa(n, k);
        const std::uint64_t total_u = mpz_get_ui(total.get_mpz_t());
        for (int trial = 0; trial < 200; ++trial) {
            const std::uint64_t r = rng() % total_u;
            const auto s = icdfa::unrank(BigCount(static_cast<unsigned long>(r)), n, k);
            CHECK(icdfa::validate(s).ok());
            CHECK(icdfa::rank(s) == BigCount(static_cast<unsigned long>(r)));
            if (r + 1 < total_u) {
                CHECK(s < icdfa::unrank(BigCount(static_cast<unsigned long>(r + 1)), n, k));
            }
        }
    }
}

TEST_CASE("rank rejects invalid strings, unrank rejects bad ranks") {
    CHECK_THROWS_AS(icdfa::rank({3, 2, {2, 1, 0, 0, 1, 0}}), icdfa::InvalidStringError);
    CHECK_THROWS_AS(icdfa::unrank(12, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(icdfa::unrank(-1, 2, 2), std::out_of_range);
    try {
        icdfa::unrank(216, 3, 2);
        FAIL("expected out_of_range");
    } catch (const std::out_of_range& e) {
        CHECK(std::string(e.what()).find("216") != std::string::npos);
    }
}

TEST_CASE("sampler is deterministic per seed") {
    CHECK(icdfa::sample_uniform(2, 2, 41) == icdfa::sample_uniform(2, 2, 41));
    CHECK(icdfa::sample_uniform(1, 2, 7).cells == std::vector<int>{0, 0});
}

TEST_CASE("sampled strings are valid and cover the space") {
    icdfa::UniformSampler sampler(2, 2, 3);
    std::set<std::vector<int>> seen;
    for (int i = 0; i < 2000; ++i) {
        const auto s = sampler.next();
        CHECK(icdfa::validate(s).ok());
        seen.insert(s.cells);
    }
    CHECK(seen.size() == 12);
}

TEST_CASE("count table memoizes consistently") {
    icdfa::CountTable table;
    CHECK(table.icdfa(3, 2) == 216);
    CHECK(table.icdfa(3, 2) == 216);
    CHECK(table.liskovets(3, 2).H == 216);
    CHECK(table.bound(3, 2) == 365);
    CHECK(table.stirling(7, 3) == 301);
    CHECK(table.stirling(3, 5) == 0);
    CHECK(table.factorial(5) == 120);
}

TEST_CASE("one shared count table survives concurrent queries") {
    icdfa::CountTable table;
    bool ok = true;
#pragma omp parallel for reduction(&& : ok)
    for (int i = 0; i < 64; ++i) {
        const int n = 1 + i % 6;
        const int kk = 1 + i % 3;
        ok = ok && table.icdfa(n, kk) == icdfa::count_icdfa(n, kk) &&
             table.liskovets(n, kk).H == table.icdfa(n, kk) &&
             table.stirling(kk * n + 1, 1) == 1;
    }
    CHECK(ok);
}

TEST_SUITE_END();
