// Acceptance suite: runs every reproduction check and reports one line per
// criterion, including the per-criterion time budget.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "mdim/verify.hpp"

namespace {

struct Criterion {
    const char* prefix;
    const char* label;
    double per_check_ms;  // 0 = unbounded per check
    double total_ms;      // 0 = unbounded in total
};

const std::vector<Criterion> criteria = {
    {"c01", "cycles: edim_f closed form", 1000, 0},
    {"c02", "Petersen: edim_f and dim_f", 2000, 0},
    {"c03", "wheels: edim_f cases, dim_f at order 6", 2000, 0},
    {"c04", "complete multipartite: stars, n/2 cases, strict gap", 2000, 0},
    {"c05", "grids: edim_f = edim = 2", 0, 30000},
    {"c06", "random trees: LP matches the leaf formula and dim_f", 0, 60000},
    {"c07", "paths alone reach edim_f = 1", 0, 60000},
    {"c08", "figure constructions: code tables, non-isomorphism, edim", 0, 30000},
    {"c09", "clique-of-subsets: dim_f = 3, edim_f = 11/2", 0, 60000},
    {"c10", "twin ladder: exact values and witness bounds", 0, 120000},
    {"c11", "n/2 characterizations agree on the corpus", 0, 120000},
    {"c12", "sandwich bounds and exhaustive agreement", 0, 300000},
};

}  // namespace

int main() {
    mdim::VerifyReport report = mdim::run_verify("");

    int failures = 0;
    for (const Criterion& c : criteria) {
        int total = 0, passed = 0;
        double elapsed = 0, slowest = 0;
        for (const auto& check : report.checks) {
            if (check.name.rfind(c.prefix, 0) != 0) continue;
            ++total;
            passed += check.pass;
            elapsed += check.elapsed_ms;
            slowest = std::max(slowest, check.elapsed_ms);
            if (!check.pass)
                std::printf("       failing check: %s expected=%s got=%s\n",
                            check.name.c_str(), check.expected.c_str(),
                            check.got.c_str());
        }
        bool in_budget = (c.per_check_ms <= 0 || slowest <= c.per_check_ms) &&
                         (c.total_ms <= 0 || elapsed <= c.total_ms);
        bool ok = total > 0 && passed == total && in_budget;
        failures += !ok;
        std::printf("[%s] criterion %s: %s (%d/%d checks, %.0f ms%s)\n",
                    ok ? "PASS" : "FAIL", c.prefix, c.label, passed, total, elapsed,
                    in_budget ? "" : ", over time budget");
    }

    int orphans = 0;
    for (const auto& check : report.checks) {
        bool known = false;
        for (const Criterion& c : criteria) known |= check.name.rfind(c.prefix, 0) == 0;
        orphans += !known;
    }
    if (orphans) {
        std::printf("[FAIL] %d checks belong to no criterion\n", orphans);
        ++failures;
    }

    std::printf("%s: %zu criteria, %d failing\n", failures ? "FAILED" : "OK",
                criteria.size(), failures);
    return failures;
}
