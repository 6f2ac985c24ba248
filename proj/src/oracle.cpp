#include "icdfa/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <omp.h>

#include "icdfa/canonical.hpp"
#include "icdfa/text_io.hpp"
#include "icdfa/validate.hpp"

namespace icdfa {

BudgetError::BudgetError(BigCount required, unsigned long long budget)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg << "enumeration needs a budget of " << required.get_str()
              << " transition functions, limit is " << budget;
          return msg.str();
      }()),
      required_(std::move(required)) {}

namespace {

BigCount function_space(int n, int k) {
    BigCount total;
    mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(k) * static_cast<unsigned long>(n));
    return total;
}

unsigned long long checked_budget(const BigCount& required, unsigned long long budget) {
    if (required > BigCount(static_cast<unsigned long>(budget))) {
        throw BudgetError(required, budget);
    }
    return mpz_get_ui(required.get_mpz_t());
}

// Decodes a function index into base-n transition cells, least significant
// cell last so that consecutive indices enumerate like an odometer.
void decode_function(unsigned long long index, int n, int total_cells,
                     std::vector<int>& cells) {
    cells.assign(static_cast<std::size_t>(total_cells), 0);
    for (int i = total_cells - 1; i >= 0 && index != 0; --i) {
        cells[static_cast<std::size_t>(i)] =
            static_cast<int>(index % static_cast<unsigned long long>(n));
        index /= static_cast<unsigned long long>(n);
    }
}

struct ScanBuffers {
    std::vector<int> delta;
    std::vector<int> canon;
    std::vector<int> order;
    std::vector<int> out;
};

// Scans function indices [first, last); connected functions contribute their
// canonical cells to `strings` and bump `connected`.
void scan_range(unsigned long long first, unsigned long long last, int n, int k,
                std::set<std::vector<int>>& strings, unsigned long long& connected,
                ScanBuffers& buf) {
    const int total_cells = k * n;
    decode_function(first, n, total_cells, buf.delta);
    for (unsigned long long index = first; index < last; ++index) {
        const int reachable =
            detail::canonicalize_into(buf.delta.data(), n, k, 0, buf.canon, buf.order, buf.out);
        if (reachable == n) {
            ++connected;
            strings.insert(buf.out);
        }
        // Odometer step to the next function.
        for (int i = total_cells - 1; i >= 0; --i) {
            if (++buf.delta[static_cast<std::size_t>(i)] < n) {
                break;
            }
            buf.delta[static_cast<std::size_t>(i)] = 0;
        }
    }
}

OracleResult finish(int n, int k, BigCount total, unsigned long long connected,
                    std::set<std::vector<int>>&& strings) {
    OracleResult result;
    result.report.n = n;
    result.report.k = k;
    result.report.total_functions = std::move(total);
    result.report.connected_count = static_cast<unsigned long>(connected);
    result.report.canonical_distinct = strings.size();
    result.strings.reserve(strings.size());
    for (auto& cells : strings) {
        CanonicalString s{n, k, cells};
        if (!validate(s).ok()) {
            result.report.mismatches.push_back(format_string_line(s));
        }
        result.strings.push_back(std::move(s));
    }
    return result;
}

}  // namespace

OracleResult brute_force_icdfa_serial(int n, int k, unsigned long long budget) {
    if (n < 1 || k < 1) {
        throw StructuralError("enumeration needs n >= 1 and k >= 1");
    }
    BigCount total = function_space(n, k);
    const unsigned long long count = checked_budget(total, budget);
    std::set<std::vector<int>> strings;
    unsigned long long connected = 0;
    ScanBuffers buf;
    scan_range(0, count, n, k, strings, connected, buf);
    return finish(n, k, std::move(total), connected, std::move(strings));
}

OracleResult brute_force_icdfa(int n, int k, unsigned long long budget) {
    if (n < 1 || k < 1) {
        throw StructuralError("enumeration needs n >= 1 and k >= 1");
    }
    BigCount total = function_space(n, k);
    const unsigned long long count = checked_budget(total, budget);

    std::set<std::vector<int>> strings;
    unsigned long long connected = 0;
#pragma omp parallel
    {
        std::set<std::vector<int>> local;
        unsigned long long local_connected = 0;
        ScanBuffers buf;
        const int threads = omp_get_num_threads();
        const int tid = omp_get_thread_num();
        const unsigned long long first =
            count / threads * tid + std::min<unsigned long long>(tid, count % threads);
        const unsigned long long size = count / threads + (tid < static_cast<int>(count % threads) ? 1 : 0);
        scan_range(first, first + size, n, k, local, local_connected, buf);
#pragma omp critical
        {
            connected += local_connected;
            strings.merge(local);
        }
    }
    return finish(n, k, std::move(total), connected, std::move(strings));
}

BigCount brute_force_with_finals(int n, int k, unsigned long long budget) {
    if (n < 1 || k < 1) {
        throw StructuralError("enumeration needs n >= 1 and k >= 1");
    }
    BigCount space = function_space(n, k);
    BigCount required = space << static_cast<unsigned>(n);  // 2^n final sets each
    if (required > BigCount(static_cast<unsigned long>(budget))) {
        throw BudgetError(required, budget);
    }
    const unsigned long long function_count = mpz_get_ui(space.get_mpz_t());

    std::set<std::pair<std::vector<int>, std::vector<int>>> forms;
    ScanBuffers buf;
    const int total_cells = k * n;
    decode_function(0, n, total_cells, buf.delta);
    std::vector<int> finals;
    for (unsigned long long index = 0; index < function_count; ++index) {
        const int reachable =
            detail::canonicalize_into(buf.delta.data(), n, k, 0, buf.canon, buf.order, buf.out);
        if (reachable == n) {
            for (unsigned subset = 0; subset < (1u << n); ++subset) {
                finals.clear();
                for (int q = 0; q < n; ++q) {
                    if (subset & (1u << q)) {
                        finals.push_back(buf.canon[static_cast<std::size_t>(q)]);
                    }
                }
                std::sort(finals.begin(), finals.end());
                forms.emplace(buf.out, finals);
            }
        }
        for (int i = total_cells - 1; i >= 0; --i) {
            if (++buf.delta[static_cast<std::size_t>(i)] < n) {
                break;
            }
            buf.delta[static_cast<std::size_t>(i)] = 0;
        }
    }
    return BigCount(forms.size());
}

}  // namespace icdfa
