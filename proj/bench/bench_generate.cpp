// Throughput comparison between the serial generators and their OpenMP
// counterparts: successor-based streaming, rank-partitioned parallel
// streaming, per-flag odometer blocks, and the brute-force scan.

#include <chrono>
#include <cstdio>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "icdfa/count.hpp"
#include "icdfa/generate.hpp"
#include "icdfa/oracle.hpp"
#include "icdfa/text_io.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* label, std::uint64_t items, double elapsed) {
    std::printf("%-32s %12llu strings  %8.3f s  %12.0f strings/s\n", label,
                static_cast<unsigned long long>(items), elapsed,
                elapsed > 0 ? items / elapsed : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    int n = 6;
    int k = 2;
    int jobs = omp_get_max_threads();
    bool with_oracle = false;
    unsigned long long budget = icdfa::kDefaultOracleBudget;

    CLI::App app{"icdfa generation benchmarks"};
    app.add_option("--n", n, "number of states")->check(CLI::PositiveNumber);
    app.add_option("--k", k, "alphabet size")->check(CLI::PositiveNumber);
    app.add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);
    app.add_flag("--oracle", with_oracle, "also time the brute-force scan");
    app.add_option("--budget", budget, "oracle budget");
    CLI11_PARSE(app, argc, argv);

    std::printf("n=%d k=%d jobs=%d  (count: %s)\n", n, k, jobs,
                icdfa::count_icdfa(n, k).get_str().c_str());

    {
        auto start = Clock::now();
        std::uint64_t emitted = 0;
        icdfa::generate_all(n, k, std::nullopt, std::nullopt,
                            [&](const icdfa::CanonicalString&) { ++emitted; });
        report("serial successor stream", emitted, seconds_since(start));
    }

    {
        auto start = Clock::now();
        std::uint64_t emitted = 0;
        for (const auto& fs : icdfa::all_flag_sequences(n, k)) {
            emitted += icdfa::for_each_with_flags(fs, [](const icdfa::CanonicalString&) {});
        }
        report("serial flag-block odometer", emitted, seconds_since(start));
    }

    {
        auto start = Clock::now();
        std::uint64_t bytes = 0;
        const auto stats = icdfa::emit_string_lines(
            n, k, std::nullopt, std::nullopt, 1,
            [&](const char*, std::size_t size) { bytes += size; });
        double elapsed = seconds_since(start);
        report("serial line rendering", stats.emitted, elapsed);
        std::printf("%-32s %12llu bytes\n", "", static_cast<unsigned long long>(bytes));
    }

    {
        auto start = Clock::now();
        std::uint64_t bytes = 0;
        const auto stats = icdfa::emit_string_lines(
            n, k, std::nullopt, std::nullopt, jobs,
            [&](const char*, std::size_t size) { bytes += size; });
        double elapsed = seconds_since(start);
        report("parallel line rendering", stats.emitted, elapsed);
        std::printf("%-32s %12llu bytes\n", "", static_cast<unsigned long long>(bytes));
    }

    if (with_oracle) {
        try {
            {
                auto start = Clock::now();
                const auto result = icdfa::brute_force_icdfa_serial(n, k, budget);
                double elapsed = seconds_since(start);
                std::printf("%-32s %12s functions %8.3f s\n", "serial brute-force scan",
                            result.report.total_functions.get_str().c_str(), elapsed);
            }
            {
                auto start = Clock::now();
                const auto result = icdfa::brute_force_icdfa(n, k, budget);
                double elapsed = seconds_since(start);
                std::printf("%-32s %12s functions %8.3f s\n", "parallel brute-force scan",
                            result.report.total_functions.get_str().c_str(), elapsed);
            }
        } catch (const icdfa::BudgetError& e) {
            std::printf("brute-force scan skipped: %s\n", e.what());
        }
    }
    return 0;
}
