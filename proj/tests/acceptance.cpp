// Acceptance gate: runs the 14 numbered library-level checks and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "aztec/checks.hpp"

using aztec::checks::CheckCase;

int main() {
    using clock = std::chrono::steady_clock;
    std::vector<std::function<CheckCase()>> criteria = {
        aztec::checks::closed_forms,
        aztec::checks::oracle_equivalence,
        aztec::checks::refined_calibration,
        aztec::checks::pascal_degeneration,
        aztec::checks::generating_function,
        aztec::checks::lgv_reconstruction,
        aztec::checks::two_refined_tables,
        aztec::checks::asymptotic_convergence,
        aztec::checks::path_free_energy,
        aztec::checks::arctic_curve_equation,
        aztec::checks::method_agreement,
        [] { return aztec::checks::appendix_identities(4.0); },
        aztec::checks::arc_integral_value,
        [] { return aztec::checks::m_toroidal_exactness(0); },
    };

    auto start = clock::now();
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = clock::now();
        CheckCase c = criteria[i]();
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        if (!c.pass) ++failures;
        if (c.tolerance > 0)
            std::printf("criterion %2zu %-20s %s  (residual %.3g, tolerance %.3g, %.2fs)\n",
                        i + 1, c.name.c_str(), c.pass ? "PASS" : "FAIL", c.residual,
                        c.tolerance, secs);
        else
            std::printf("criterion %2zu %-20s %s  (exact, %.2fs)\n", i + 1, c.name.c_str(),
                        c.pass ? "PASS" : "FAIL", secs);
    }
    double total = std::chrono::duration<double>(clock::now() - start).count();
    std::printf("%d/14 criteria passed in %.2fs\n", 14 - failures, total);
    return failures == 0 ? 0 : 1;
}
