#pragma once

#include <string>
#include <vector>

#include "liouk/model.hpp"
#include "liouk/report.hpp"

namespace liouk {

// Resolved command-line configuration shared by the CLI subcommands.
struct CommonOptions {
    int N = 1;
    cplx c{0.5, 0.3};
    double R = 40.0;
    int n_r = 300;
    int M = 8;
    int K = 16;
    int n_eigs = 6;
    double rho = 1e-2;
    std::vector<double> rhos;
    double tol = 1e-10;
    unsigned seed = 42;
};

nlohmann::json options_json(const CommonOptions& opt);

SuiteReport residual_suite(const CommonOptions& opt);
SuiteReport kernel_suite(const CommonOptions& opt);
SuiteReport tmatrix_suite(const CommonOptions& opt);
SuiteReport shoot_suite(const CommonOptions& opt);
SuiteReport spectrum_suite(const CommonOptions& opt);
SuiteReport extend_suite(const CommonOptions& opt);
SuiteReport gap_suite(const CommonOptions& opt);

// One acceptance criterion: gating checks plus non-gating diagnostics.
struct CriterionResult {
    int index = 0;
    std::string label;
    std::vector<CheckRecord> checks;
    std::vector<CheckRecord> diagnostics;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

CriterionResult criterion_kernel_identities();   // 1
CriterionResult criterion_liouville_formula();   // 2
CriterionResult criterion_tau_derivative();      // 3
CriterionResult criterion_ring_scaling();        // 4
CriterionResult criterion_ring_completeness();   // 5
CriterionResult criterion_bounded_modes();       // 6
CriterionResult criterion_near_kernel();         // 7
CriterionResult criterion_extension();           // 8
CriterionResult criterion_basis_change();        // 9
CriterionResult criterion_uniqueness_gap();      // 10
CriterionResult criterion_disk_benchmark();      // 11

std::vector<CriterionResult> run_all_criteria();

// All criteria flattened into one report (checks gate, diagnostics do not).
SuiteReport acceptance_suite();

} // namespace liouk
