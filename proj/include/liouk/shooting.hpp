#pragma once

#include <set>

#include "liouk/model.hpp"

namespace liouk {

// Radial mode problem; the module contract requires c = 0.
struct RadialMode {
    int k = 0;
    ProblemParams params{};

    void validate() const {
        params.validate();
        if (k < 0) throw UsageError("RadialMode: k must be >= 0");
        if (params.c != cplx(0.0, 0.0))
            throw UsageError("RadialMode: c must be 0 (coupled modes are out of contract)");
    }
};

enum class Verdict { Bounded, Grows };

struct GrowthClassification {
    Verdict verdict;
    double fitted_exponent;  // log-log slope of |w| over the last decade
    double terminal_value;   // w(r_max), meaningful when Bounded
};

// V at c = 0: 8 (N+1)^2 r^{2N} / (1 + r^{2(N+1)})^2.
double radial_potential(const ProblemParams& p, double r);

// Exact radial factor of phi_k at c = 0:
// w_k(r) = r^k [ (N+1+k)/(N+1) - 2 r^{2(N+1)} / (1 + r^{2(N+1)}) ].
double closed_form_mode(const ProblemParams& p, int k, double r);

// Integrates w'' + w'/r - k^2 w / r^2 + V w = 0 outward from Frobenius data
// w(r0) = r0^k, w'(r0) = k r0^{k-1} with an adaptive embedded RK 4(5) pair.
// Classifies growth from the slope of log|w| vs log r over [r_max/10, r_max].
GrowthClassification shoot_mode(const RadialMode& mode, double r0, double r_max,
                                double tol);

// { k <= K_max : Bounded } with the default integration window; expected {0, N+1}.
std::set<int> bounded_mode_set(const ProblemParams& p, int K_max);

// Max over checkpoints r in {1, 2, 5, 10, r_max} of the relative deviation
// between the integrated solution and alpha * closed_form_mode, alpha matched
// at r = 1.
double shooting_vs_closed_form(const RadialMode& mode, double r_max);

namespace detail {
// One integrated trajectory with samples at the requested radii.
struct ShootSamples {
    std::vector<double> r;
    std::vector<double> w;        // signed value, renormalization unwound
    std::vector<double> log_abs;  // log|w|, overflow-safe
};
ShootSamples integrate_mode(const RadialMode& mode, double r0, double r_max, double tol,
                            const std::vector<double>& sample_radii);
} // namespace detail

} // namespace liouk
