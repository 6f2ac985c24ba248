#include <doctest.h>

#include "icdfa/count.hpp"
#include "icdfa/generate.hpp"
#include "icdfa/oracle.hpp"
#include "icdfa/validate.hpp"
#include "reference_oracle.hpp"

using icdfa::BigCount;
using icdfa::CanonicalString;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("counts for the worked pairs") {
    const auto r22 = icdfa::brute_force_icdfa(2, 2);
    CHECK(r22.report.total_functions == 16);
    CHECK(r22.report.canonical_distinct == 12);
    CHECK(r22.report.mismatches.empty());

    const auto r32 = icdfa::brute_force_icdfa(3, 2);
    CHECK(r32.report.canonical_distinct == 216);

    CHECK(icdfa::brute_force_icdfa(1, 1).report.canonical_distinct == 1);
    CHECK(icdfa::brute_force_icdfa(1, 3).report.canonical_distinct == 1);
}

TEST_CASE("connected structure count matches the recursion's h") {
    for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
        const auto result = icdfa::brute_force_icdfa(n, k);
        CHECK(result.report.connected_count == icdfa::count_liskovets(n, k).h);
    }
}

TEST_CASE("oracle set equals the generator set") {
    for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}}) {
        const auto result = icdfa::brute_force_icdfa(n, k);
        std::vector<CanonicalString> generated;
        icdfa::generate_all(n, k, std::nullopt, std::nullopt,
                            [&](const CanonicalString& s) { generated.push_back(s); });
        CHECK(result.strings == generated);
        for (const auto& s : result.strings) {
            CHECK(icdfa::validate(s).ok());
        }
    }
}

TEST_CASE("parallel scan equals the serial reference") {
    for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
        const auto serial = icdfa::brute_force_icdfa_serial(n, k);
        const auto parallel = icdfa::brute_force_icdfa(n, k);
        CHECK(serial.report.total_functions == parallel.report.total_functions);
        CHECK(serial.report.connected_count == parallel.report.connected_count);
        CHECK(serial.report.canonical_distinct == parallel.report.canonical_distinct);
        CHECK(serial.strings == parallel.strings);
    }
}

TEST_CASE("finals enumeration matches 2^n times the structure count") {
    CHECK(icdfa::brute_force_with_finals(2, 2) == 48);
    CHECK(icdfa::brute_force_with_finals(1, 1) == 2);
    CHECK(icdfa::brute_force_with_finals(3, 2) == 1728);
    CHECK(icdfa::brute_force_with_finals(2, 2) == icdfa::count_with_finals(2, 2));
}

TEST_CASE("budget refusal names the required function count") {
    try {
        icdfa::brute_force_icdfa(5, 2, 1'000'000);
        FAIL("expected BudgetError");
    } catch (const icdfa::BudgetError& e) {
        CHECK(e.required() == 9765625);  // 5^10
        CHECK(std::string(e.what()).find("9765625") != std::string::npos);
    }
    // 5^10 fits the default budget.
    CHECK_NOTHROW(icdfa::brute_force_icdfa(4, 2, icdfa::kDefaultOracleBudget));
    CHECK_THROWS_AS(icdfa::brute_force_with_finals(4, 2, 100'000), icdfa::BudgetError);
}

TEST_CASE("report invariants") {
    const auto r = icdfa::brute_force_icdfa(3, 2);
    CHECK(r.report.canonical_distinct <= r.report.connected_count);
    CHECK(r.report.connected_count <= r.report.total_functions);
    CHECK(BigCount(r.strings.size()) == r.report.canonical_distinct);
}

TEST_SUITE_END();
