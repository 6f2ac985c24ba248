// Command-line front end: counting, generation, canonicalization,
// isomorphism testing, rank/unrank, uniform sampling and self-verification
// for connected DFA structures and their canonical strings.
//
// Exit codes: 0 success (or positive verdict), 1 negative verdict,
// 2 usage, parse or budget error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "icdfa/canonical.hpp"
#include "icdfa/count.hpp"
#include "icdfa/generate.hpp"
#include "icdfa/oracle.hpp"
#include "icdfa/text_io.hpp"
#include "icdfa/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

icdfa::Dfa load_dfa(const std::string& path) {
    if (path == "-") {
        return icdfa::parse_dfa_document(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw icdfa::TextParseError(0, "cannot open " + path);
    }
    return icdfa::parse_dfa_document(in);
}

int run_count(int n, int k, const std::string& mode, bool verbose) {
    icdfa::BigCount value;
    if (mode == "exact") {
        value = icdfa::count_icdfa(n, k);
    } else if (mode == "liskovets") {
        value = icdfa::count_liskovets(n, k).H;
    } else if (mode == "bound") {
        value = icdfa::stirling_bound(n, k);
    } else if (mode == "with-finals") {
        value = icdfa::count_with_finals(n, k);
    } else {
        std::cerr << "unknown mode: " << mode << "\n";
        return kExitUsage;
    }
    std::cout << value.get_str() << "\n";
    if (verbose) {
        const icdfa::BigCount exact = icdfa::count_icdfa(n, k);
        const auto lisk = icdfa::count_liskovets(n, k);
        const icdfa::BigCount bound = icdfa::stirling_bound(n, k);
        std::cerr << "exact: " << exact.get_str() << "\n"
                  << "liskovets H: " << lisk.H.get_str()
                  << " (h = " << lisk.h.get_str() << ")\n"
                  << "stirling bound: " << bound.get_str() << "\n"
                  << "agree: " << (exact == lisk.H && exact <= bound ? "yes" : "NO")
                  << "\n";
    }
    return kExitOk;
}

int run_gen(int n, int k, std::optional<std::uint64_t> limit,
            const std::string& from_line, int jobs) {
    std::optional<icdfa::CanonicalString> from;
    if (!from_line.empty()) {
        from = icdfa::parse_string_line(from_line).string;
        icdfa::require_valid(*from);
    }
    const auto stats = icdfa::emit_string_lines(
        n, k, from, limit, jobs,
        [](const char* data, std::size_t size) { std::fwrite(data, 1, size, stdout); });
    std::fflush(stdout);
    std::cerr << "emitted " << stats.emitted << " strings\n";
    return kExitOk;
}

int run_canon(const std::string& path, bool mapping, bool strict) {
    const icdfa::Dfa dfa = load_dfa(path);
    const icdfa::CanonicalizeResult canon = icdfa::canonicalize(dfa.structure);
    const int dropped = dfa.structure.n - canon.mapping.reachable_count;
    if (strict && dropped > 0) {
        std::cerr << "error: " << dropped << " state(s) unreachable from the initial state\n";
        return kExitNegative;
    }
    const icdfa::NormalForm nf = icdfa::normal_form(dfa);
    std::cout << icdfa::format_normal_form_line(nf) << "\n";
    if (mapping) {
        for (int q = 0; q < dfa.structure.n; ++q) {
            const int to = canon.mapping.forward[static_cast<std::size_t>(q)];
            if (to >= 0) {
                std::cout << "map " << q << " " << to << "\n";
            }
        }
    }
    if (dropped > 0) {
        std::cerr << "warning: dropped " << dropped << " unreachable state(s)\n";
    }
    return kExitOk;
}

int run_iso(const std::string& path_a, const std::string& path_b) {
    const icdfa::Dfa a = load_dfa(path_a);
    const icdfa::Dfa b = load_dfa(path_b);
    if (icdfa::isomorphic(a, b)) {
        std::cout << "isomorphic\n";
        return kExitOk;
    }
    std::cout << "not-isomorphic\n";
    return kExitNegative;
}

int run_rank(const std::string& line) {
    auto rank_one = [](const std::string& text) {
        const icdfa::ParsedStringLine parsed = icdfa::parse_string_line(text);
        std::cout << icdfa::rank(parsed.string).get_str() << "\n";
    };
    if (!line.empty()) {
        rank_one(line);
        return kExitOk;
    }
    std::string input;
    while (std::getline(std::cin, input)) {
        if (input.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        rank_one(input);
    }
    return kExitOk;
}

int run_unrank(int n, int k, const std::string& r_text) {
    icdfa::BigCount r;
    if (r.set_str(r_text, 10) != 0) {
        std::cerr << "bad rank: " << r_text << "\n";
        return kExitUsage;
    }
    std::cout << icdfa::format_string_line(icdfa::unrank(r, n, k)) << "\n";
    return kExitOk;
}

int run_sample(int n, int k, std::uint64_t seed, std::uint64_t count) {
    icdfa::UniformSampler sampler(n, k, seed);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::cout << icdfa::format_string_line(sampler.next()) << "\n";
    }
    return kExitOk;
}

int run_verify(int n, int k, unsigned long long budget) {
    const auto oracle = icdfa::brute_force_icdfa(n, k, budget);
    std::uint64_t generated = 0;
    bool stream_matches = true;
    {
        std::size_t at = 0;
        icdfa::generate_all(n, k, std::nullopt, std::nullopt,
                            [&](const icdfa::CanonicalString& s) {
                                if (at >= oracle.strings.size() || s != oracle.strings[at]) {
                                    stream_matches = false;
                                }
                                ++at;
                                ++generated;
                            });
    }
    const icdfa::BigCount exact = icdfa::count_icdfa(n, k);
    const auto lisk = icdfa::count_liskovets(n, k);
    const icdfa::BigCount bound = icdfa::stirling_bound(n, k);

    std::cout << "total transition functions: " << oracle.report.total_functions.get_str()
              << "\n";
    std::cout << "initially connected: " << oracle.report.connected_count.get_str()
              << " (liskovets h: " << lisk.h.get_str() << ")\n";
    std::cout << "distinct canonical strings: "
              << oracle.report.canonical_distinct.get_str() << "\n";
    std::cout << "generator emissions: " << generated << "\n";
    std::cout << "flag-sum count: " << exact.get_str() << "\n";
    std::cout << "liskovets H: " << lisk.H.get_str() << "\n";
    std::cout << "stirling bound: " << bound.get_str() << "\n";

    bool ok = stream_matches;
    ok = ok && oracle.report.mismatches.empty();
    ok = ok && oracle.report.canonical_distinct == exact;
    ok = ok && icdfa::BigCount(generated) == exact;
    ok = ok && lisk.H == exact;
    ok = ok && oracle.report.connected_count == lisk.h;
    ok = ok && exact <= bound;
    if (!ok) {
        std::cout << "verdict: MISMATCH\n";
        if (!stream_matches) {
            std::cout << "generator stream differs from oracle string set\n";
        }
        for (const auto& witness : oracle.report.mismatches) {
            std::cout << "invalid oracle string: " << witness << "\n";
        }
        return kExitNegative;
    }
    std::cout << "verdict: all-agree\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical strings for initially connected DFAs: exact counts, "
                 "exhaustive generation, rank/unrank and isomorphism tests"};
    app.require_subcommand(1);

    int n = 1;
    int k = 1;
    std::string mode = "exact";
    bool verbose = false;
    auto* count = app.add_subcommand("count", "Count structures for (n, k)");
    count->add_option("--n", n, "number of states")->required()->check(CLI::PositiveNumber);
    count->add_option("--k", k, "alphabet size")->required()->check(CLI::PositiveNumber);
    count->add_option("--mode", mode, "exact | liskovets | bound | with-finals")
        ->check(CLI::IsMember({"exact", "liskovets", "bound", "with-finals"}));
    count->add_flag("--verbose", verbose, "print the agreement report to stderr");

    std::uint64_t limit = 0;
    std::string from_line;
    int jobs = 1;
    auto* gen = app.add_subcommand("gen", "Generate all strings in lexicographic order");
    gen->add_option("--n", n, "number of states")->required()->check(CLI::PositiveNumber);
    gen->add_option("--k", k, "alphabet size")->required()->check(CLI::PositiveNumber);
    gen->add_option("--limit", limit, "stop after this many strings");
    gen->add_option("--from", from_line, "resume strictly after this string line");
    gen->add_option("--jobs", jobs, "parallel workers (output is byte-identical)")
        ->check(CLI::Range(1, 4096));

    std::string input_path;
    bool mapping = false;
    bool strict = false;
    auto* canon = app.add_subcommand("canon", "Canonicalize an automaton document");
    canon->add_option("file", input_path, "document path, or - for stdin")->required();
    canon->add_flag("--mapping", mapping, "also print the original->canonical state map");
    canon->add_flag("--strict", strict, "fail instead of dropping unreachable states");

    std::string path_a;
    std::string path_b;
    auto* iso = app.add_subcommand("iso", "Test two documents for isomorphism");
    iso->add_option("a", path_a, "first document")->required();
    iso->add_option("b", path_b, "second document")->required();

    std::string rank_line;
    auto* rank = app.add_subcommand("rank", "Rank a string line (or lines from stdin)");
    rank->add_option("string", rank_line, "string line `<n> <k> : <cells...>`");

    std::string r_text;
    auto* unrank = app.add_subcommand("unrank", "String at a given rank");
    unrank->add_option("--n", n, "number of states")->required()->check(CLI::PositiveNumber);
    unrank->add_option("--k", k, "alphabet size")->required()->check(CLI::PositiveNumber);
    unrank->add_option("--r", r_text, "rank, 0-based decimal")->required();

    std::uint64_t seed = 0;
    std::uint64_t draws = 1;
    auto* sample = app.add_subcommand("sample", "Draw strings uniformly at random");
    sample->add_option("--n", n, "number of states")->required()->check(CLI::PositiveNumber);
    sample->add_option("--k", k, "alphabet size")->required()->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "PRNG seed");
    sample->add_option("--count", draws, "number of draws")->check(CLI::PositiveNumber);

    unsigned long long budget = icdfa::kDefaultOracleBudget;
    auto* verify = app.add_subcommand("verify", "Cross-check oracle, generator and formulas");
    verify->add_option("--n", n, "number of states")->required()->check(CLI::PositiveNumber);
    verify->add_option("--k", k, "alphabet size")->required()->check(CLI::PositiveNumber);
    verify->add_option("--budget", budget, "transition-function budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*count) {
            return run_count(n, k, mode, verbose);
        }
        if (*gen) {
            return run_gen(n, k,
                           gen->count("--limit") > 0 ? std::optional<std::uint64_t>(limit)
                                                     : std::nullopt,
                           from_line, jobs);
        }
        if (*canon) {
            return run_canon(input_path, mapping, strict);
        }
        if (*iso) {
            return run_iso(path_a, path_b);
        }
        if (*rank) {
            return run_rank(rank_line);
        }
        if (*unrank) {
            return run_unrank(n, k, r_text);
        }
        if (*sample) {
            return run_sample(n, k, seed, draws);
        }
        if (*verify) {
            return run_verify(n, k, budget);
        }
    } catch (const icdfa::TextParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const icdfa::InvalidStringError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const icdfa::BudgetError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitUsage;
    } catch (const icdfa::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
