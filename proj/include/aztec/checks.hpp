#pragma once

// Self-check suites: every library-level guarantee is packaged as a named
// check with a residual and a tolerance (tolerance 0 means the check is
// exact). The acceptance binary prints one line per check; the CLI `check`
// subcommand emits the same data as JSON.

#include <string>
#include <vector>

namespace aztec::checks {

struct CheckCase {
    std::string name;
    bool pass = false;
    double residual = 0;   // worst observed deviation (0 for exact passes)
    double tolerance = 0;  // 0 for exact checks
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckCase> cases;

    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

// Individual acceptance checks (numbered 1-14).
CheckCase closed_forms();            // 1: octahedron recurrence vs product form
CheckCase oracle_equivalence();      // 2: brute-force matching sums
CheckCase refined_calibration();     // 3: n=3 refined coefficient vector
CheckCase pascal_degeneration();     // 4: S_{n,k}(1) = C(n,k)
CheckCase generating_function();     // 5: G series vs recurrence tables
CheckCase lgv_reconstruction();      // 6: LGV determinant vs closed form
CheckCase two_refined_tables();      // 7: brute force, uniform value, marginals
CheckCase asymptotic_convergence();  // 8: F1(1/2) limit and Gaussian variance
CheckCase path_free_energy();        // 9: L endpoints, DP check, L' check
CheckCase arctic_curve_equation();   // 10: degree-8 residuals and calibration
CheckCase method_agreement();        // 11: geometric vs two-refined envelope
CheckCase appendix_identities(double beta);  // 12: locus identities, Phi, H''
CheckCase arc_integral_value();      // 13: boundary arc integral
CheckCase m_toroidal_exactness(int m_filter);  // 14: periodic-weight model (0 = all m)

// Suite groupings used by the CLI: exact = 1-7, asymptotic = 8-11 and 13,
// appendix = 12, mtoroidal = 14.
SuiteReport run_suite(const std::string& suite, double beta = 4.0, int m_filter = 0);
std::vector<SuiteReport> run_all_suites(double beta = 4.0, int m_filter = 0);

}  // namespace aztec::checks
