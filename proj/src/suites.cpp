#include "liouk/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "liouk/bessel.hpp"
#include "liouk/errors.hpp"
#include "liouk/fit.hpp"
#include "liouk/fourier_ring.hpp"
#include "liouk/residual.hpp"
#include "liouk/shooting.hpp"
#include "liouk/spectral.hpp"

namespace liouk {

namespace {

CheckRecord make_check(std::string name, nlohmann::json params, nlohmann::json measured,
                       nlohmann::json expected, std::string basis, bool pass, double ms) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.params = std::move(params);
    rec.measured = std::move(measured);
    rec.expected = std::move(expected);
    rec.basis = std::move(basis);
    rec.pass = pass;
    rec.wall_ms = ms;
    return rec;
}

bool in_band(double x, double lo, double hi) { return x >= lo && x <= hi; }

const char* tag_name(const PhiTag& tag) {
    switch (tag.kind) {
        case PhiTag::Kind::Z0: return "Z0";
        case PhiTag::Kind::Z1: return "Z1";
        case PhiTag::Kind::Z2: return "Z2";
        case PhiTag::Kind::Mode: return "mode";
        case PhiTag::Kind::One: return "one";
        case PhiTag::Kind::Z0Z1: return "z0z1";
    }
    return "?";
}

CartesianGrid offcenter_grid(cplx center, double half_width, int n) {
    CartesianGrid g;
    g.center = center;
    g.half_width = half_width;
    g.n = n;
    return g;
}

} // namespace

nlohmann::json options_json(const CommonOptions& opt) {
    nlohmann::json j{{"N", opt.N},       {"c", complex_json(opt.c)}, {"R", opt.R},
                     {"n_r", opt.n_r},   {"M", opt.M},               {"K", opt.K},
                     {"n_eigs", opt.n_eigs}, {"rho", opt.rho},       {"tol", opt.tol},
                     {"seed", opt.seed}};
    j["rhos"] = opt.rhos;
    return j;
}

// Criterion 1. Each kernel basis field annihilates the linearized operator to
// second order in h, and the constant field does not.
CriterionResult criterion_kernel_identities() {
    CriterionResult res;
    res.index = 1;
    res.label = "kernel_identities";

    // Window kept away from the zeros of z^{N+1} - c (at |c|^{1/(N+1)} ~ 0.8
    // for the nonzero c below), where fourth derivatives of the fields would
    // inflate the h^2 constant past the gate. Finest ladder rung is h = 5e-3.
    const CartesianGrid grid = offcenter_grid({0.1, 0.1}, 0.3, 31);
    const std::vector<int> Ns{0, 1, 2};
    const std::vector<cplx> cs{{0.0, 0.0}, {0.5, 0.3}};
    const PhiTag tags[3] = {PhiTag::z0(), PhiTag::z1(), PhiTag::z2()};

    for (int N : Ns) {
        for (const cplx& c : cs) {
            ProblemParams p{N, c};
            for (const PhiTag& tag : tags) {
                WallTimer timer;
                ResidualReport rep = linearized_residual(p, tag, grid);
                double scale = field_scale_on_grid(p, tag, grid);
                double sup_finest = rep.mesh_ladder.back().sup;
                double h_finest = rep.mesh_ladder.back().h;
                bool ok = in_band(rep.fitted_order, 1.8, 2.2) && sup_finest < 1e-3 * scale;
                res.checks.push_back(make_check(
                    "c1.N" + std::to_string(N) + (std::abs(c) == 0.0 ? ".c0." : ".c1.") +
                        tag_name(tag),
                    {{"N", N}, {"c", complex_json(c)}, {"field", tag_name(tag)},
                     {"center", complex_json(grid.center)}, {"half_width", grid.half_width},
                     {"h_finest", h_finest}},
                    {{"order", rep.fitted_order}, {"sup_finest", sup_finest}, {"scale", scale}},
                    {{"order", "[1.8, 2.2]"}, {"sup_finest", "< 1e-3 * scale"}},
                    "analytic_identity", ok, timer.ms()));
            }
        }
    }

    // Negative control: the constant field is not in the kernel, so its
    // residual must neither shrink at second order nor fall below the gate.
    {
        WallTimer timer;
        ProblemParams p{1, {0.5, 0.3}};
        ResidualReport rep = linearized_residual(p, PhiTag::one(), grid);
        double sup_finest = rep.mesh_ladder.back().sup;
        bool ok = rep.fitted_order < 1.0 && sup_finest > 1e-3;
        res.checks.push_back(make_check(
            "c1.negative_control.one",
            {{"N", 1}, {"c", complex_json(p.c)}, {"field", "one"}},
            {{"order", rep.fitted_order}, {"sup_finest", sup_finest}},
            {{"order", "< 1.0"}, {"sup_finest", "> 1e-3"}},
            "cross_check", ok, timer.ms()));
    }
    return res;
}

// Criterion 2. The closed-form solution satisfies the nonlinear equation to
// second order in h, in both the weighted and the conformal arrangement.
CriterionResult criterion_liouville_formula() {
    CriterionResult res;
    res.index = 2;
    res.label = "liouville_formula";

    struct Config {
        int N;
        double tau;
        int k;
        cplx c;
        cplx center;
        double half_width;
        bool weighted;
    };
    // The conformal variant is evaluated away from the origin where the
    // 2N log|z| term is smooth.
    const std::vector<Config> configs{
        {0, 0.0, 0, {0.5, 0.3}, {0.4, 0.3}, 0.5, true},
        {1, 0.0, 0, {0.5, 0.3}, {0.4, 0.3}, 0.5, true},
        {1, 0.1, 2, {0.0, 0.0}, {1.0, 0.0}, 0.5, true},
        {1, 0.0, 0, {0.5, 0.3}, {1.0, 0.5}, 0.4, false},
    };

    int idx = 0;
    for (const Config& cfg : configs) {
        WallTimer timer;
        ProblemParams p{cfg.N, cfg.c};
        CartesianGrid grid = offcenter_grid(cfg.center, cfg.half_width, 51);
        ResidualReport rep = liouville_residual(p, cfg.tau, cfg.k, grid, cfg.weighted);
        bool ok = in_band(rep.fitted_order, 1.8, 2.2);
        res.checks.push_back(make_check(
            "c2.config" + std::to_string(idx++),
            {{"N", cfg.N}, {"tau", cfg.tau}, {"k", cfg.k}, {"c", complex_json(cfg.c)},
             {"center", complex_json(cfg.center)}, {"half_width", cfg.half_width},
             {"weighted", cfg.weighted}},
            {{"order", rep.fitted_order}, {"sup_finest", rep.mesh_ladder.back().sup}},
            {{"order", "[1.8, 2.2]"}},
            "closed_form", ok, timer.ms()));
    }
    return res;
}

// Criterion 3. Central differences in tau converge at second order to twice
// the real/imaginary parts of the mode, and are already below 1e-5 at 1e-3.
CriterionResult criterion_tau_derivative() {
    CriterionResult res;
    res.index = 3;
    res.label = "tau_derivative";

    struct Config {
        int N;
        int k;
        cplx c;
        cplx z;
    };
    const std::vector<Config> configs{
        {0, 1, {0.3, -0.2}, {0.7, 0.4}},
        {2, 0, {0.0, 0.4}, {0.5, 0.5}},
    };

    for (const Config& cfg : configs) {
        WallTimer timer;
        ProblemParams p{cfg.N, cfg.c};
        const std::vector<double> dts{1e-2, 5e-3, 2.5e-3};
        std::vector<double> err_re, err_im;
        for (double dt : dts) {
            auto [er, ei] = tau_derivative_check(p, cfg.k, cfg.z, dt);
            err_re.push_back(er);
            err_im.push_back(ei);
        }
        double order_re = loglog_slope(dts, err_re);
        double order_im = loglog_slope(dts, err_im);
        auto [abs_re, abs_im] = tau_derivative_check(p, cfg.k, cfg.z, 1e-3);
        bool ok = in_band(order_re, 1.8, 2.2) && in_band(order_im, 1.8, 2.2) &&
                  abs_re < 1e-5 && abs_im < 1e-5;
        res.checks.push_back(make_check(
            "c3.N" + std::to_string(cfg.N) + ".k" + std::to_string(cfg.k),
            {{"N", cfg.N}, {"k", cfg.k}, {"c", complex_json(cfg.c)},
             {"z", complex_json(cfg.z)}},
            {{"order_real", order_re}, {"order_imag", order_im},
             {"abs_real_at_1e-3", abs_re}, {"abs_imag_at_1e-3", abs_im}},
            {{"order", "[1.8, 2.2] both parts"}, {"abs_at_1e-3", "< 1e-5 both parts"}},
            "analytic_identity", ok, timer.ms()));
    }
    return res;
}

// Criterion 4. The trace-pairing deviation from identity decays like
// rho^{N+1}, and is under one half at rho = 1e-2.
CriterionResult criterion_ring_scaling() {
    CriterionResult res;
    res.index = 4;
    res.label = "ring_operator_scaling";

    const cplx c{0.8, 0.6};
    const int K = 16;
    const std::vector<double> rhos{1e-1, 3e-2, 1e-2, 3e-3};

    for (int N : {0, 1, 2}) {
        WallTimer timer;
        ProblemParams p{N, c};
        double slope = t_deviation_scaling(p, rhos, K);
        TMatrix tm = t_matrix(p, 1e-2, K, 256);
        double target = static_cast<double>(N + 1);
        bool ok = in_band(slope, target - 0.3, target + 0.3) && tm.dev < 0.5;
        res.checks.push_back(make_check(
            "c4.N" + std::to_string(N),
            {{"N", N}, {"c", complex_json(c)}, {"K", K}, {"rhos", rhos}},
            {{"slope", slope}, {"dev_at_1e-2", tm.dev}},
            {{"slope", "[" + std::to_string(target - 0.3) + ", " +
                           std::to_string(target + 0.3) + "]"},
             {"dev_at_1e-2", "< 0.5"}},
            "convergence_theory", ok, timer.ms()));
    }
    return res;
}

// Criterion 5. Finite mode combinations are recovered exactly on the ring,
// and for a smooth non-mode function the rescaled coefficients decay fast.
CriterionResult criterion_ring_completeness() {
    CriterionResult res;
    res.index = 5;
    res.label = "ring_completeness";

    ProblemParams p{1, {0.3, 0.4}};
    const double rho = 0.1;

    {
        WallTimer timer;
        auto psi = [&p, rho](double theta) {
            cplx z = std::polar(rho, theta);
            return 3.0 * phi_mode_part(p, ModeFunction{2, ModePart::RealPart}, z) -
                   phi_mode_part(p, ModeFunction{5, ModePart::ImagPart}, z);
        };
        RingReconstruction rec = ring_reconstruct(p, psi, rho, 8);
        double worst = std::abs(rec.a[0]);
        for (int k = 1; k <= 8; ++k) {
            double ea = std::abs(rec.a[k] - (k == 2 ? 3.0 : 0.0));
            double eb = std::abs(rec.b[k] - (k == 5 ? -1.0 : 0.0));
            worst = std::max({worst, ea, eb});
        }
        bool ok = worst < 1e-8;
        res.checks.push_back(make_check(
            "c5.exact_recovery",
            {{"N", 1}, {"c", complex_json(p.c)}, {"rho", rho}, {"K", 8},
             {"psi", "3*phi_2^re - phi_5^im"}},
            {{"worst_coefficient_error", worst},
             {"reconstruction_error", rec.reconstruction_error}},
            {{"worst_coefficient_error", "< 1e-8"}},
            "closed_form", ok, timer.ms()));
    }

    {
        WallTimer timer;
        auto f = [](double theta) { return std::cos(theta) * std::exp(std::sin(theta)); };
        const int K = 24;
        RingReconstruction rec = ring_reconstruct(p, f, rho, K);
        double scale = 0.0;
        for (int i = 0; i < 384; ++i) scale = std::max(scale, std::abs(f(2.0 * M_PI * i / 384)));
        // Coefficients of the rho-rescaled basis are the Fourier-comparable
        // ones; the raw a_k grow like rho^{-k} by construction.
        double worst_ratio = 0.0;
        nlohmann::json tail = nlohmann::json::array();
        bool ok = true;
        for (int k = 20; k <= K; ++k) {
            double xk = std::max(std::abs(rec.a[k]), std::abs(rec.b[k])) * std::pow(rho, k);
            double bound = scale * std::pow(static_cast<double>(k), -6.0);
            worst_ratio = std::max(worst_ratio, xk / bound);
            tail.push_back({{"k", k}, {"rescaled", xk}, {"bound", bound}});
            ok = ok && xk < bound;
        }
        res.checks.push_back(make_check(
            "c5.smooth_decay",
            {{"N", 1}, {"c", complex_json(p.c)}, {"rho", rho}, {"K", K},
             {"f", "cos(theta)*exp(sin(theta))"}},
            {{"worst_ratio_to_bound", worst_ratio}, {"tail", tail}},
            {{"rescaled_coefficient", "< scale * k^-6 for k in [20, 24]"}},
            "convergence_theory", ok, timer.ms()));
    }
    return res;
}

// Criterion 6. Shooting classifies exactly {0, N+1} as bounded, measures the
// growth exponent of every rejected mode, and matches the closed form.
CriterionResult criterion_bounded_modes() {
    CriterionResult res;
    res.index = 6;
    res.label = "bounded_modes";

    for (int N : {0, 1, 2, 3}) {
        WallTimer timer;
        ProblemParams p{N, {0.0, 0.0}};
        std::set<int> got = bounded_mode_set(p, 10);
        std::set<int> want{0, N + 1};
        bool ok = got == want;
        res.checks.push_back(make_check(
            "c6.bounded_set.N" + std::to_string(N),
            {{"N", N}, {"K_max", 10}},
            {{"bounded", got}},
            {{"bounded", want}},
            "closed_form", ok, timer.ms()));
    }

    for (int N : {0, 1, 2, 3}) {
        WallTimer timer;
        ProblemParams p{N, {0.0, 0.0}};
        double worst = 0.0;
        nlohmann::json exps = nlohmann::json::array();
        for (int k = 1; k <= 10; ++k) {
            if (k == N + 1) continue;
            GrowthClassification g = shoot_mode(RadialMode{k, p}, 1e-6, 100.0, 1e-10);
            exps.push_back({{"k", k}, {"exponent", g.fitted_exponent}});
            worst = std::max(worst, std::abs(g.fitted_exponent - k));
        }
        bool ok = worst <= 0.05;
        res.checks.push_back(make_check(
            "c6.growth_exponents.N" + std::to_string(N),
            {{"N", N}, {"r_max", 100.0}, {"tol", 1e-10}},
            {{"worst_deviation", worst}, {"exponents", exps}},
            {{"exponent", "k +- 0.05 for every rejected k"}},
            "convergence_theory", ok, timer.ms()));
    }

    struct Pair {
        int N;
        int k;
    };
    for (Pair q : {Pair{0, 1}, Pair{1, 1}, Pair{2, 1}, Pair{2, 5}, Pair{3, 2}}) {
        WallTimer timer;
        ProblemParams p{q.N, {0.0, 0.0}};
        double dev = shooting_vs_closed_form(RadialMode{q.k, p}, 50.0);
        bool ok = dev < 1e-6;
        res.checks.push_back(make_check(
            "c6.vs_closed_form.N" + std::to_string(q.N) + ".k" + std::to_string(q.k),
            {{"N", q.N}, {"k", q.k}, {"r_max", 50.0}},
            {{"deviation", dev}},
            {{"deviation", "< 1e-6"}},
            "closed_form", ok, timer.ms()));
    }

    // The decaying mode k = N+1 cannot hold 1e-6 relative accuracy out to
    // r = 50 in double precision: the growing branch enters at one ulp and
    // is amplified like r^{2(N+1)}. Report the measured deviation without
    // gating on it. Same for k = 0, whose closed form crosses zero at r = 1
    // where the relative deviation is measured against the 1e-8 floor.
    for (Pair q : {Pair{2, 3}, Pair{1, 0}}) {
        WallTimer timer;
        ProblemParams p{q.N, {0.0, 0.0}};
        double dev = shooting_vs_closed_form(RadialMode{q.k, p}, 50.0);
        res.diagnostics.push_back(make_check(
            "c6.ill_conditioned.N" + std::to_string(q.N) + ".k" + std::to_string(q.k),
            {{"N", q.N}, {"k", q.k}, {"r_max", 50.0}},
            {{"deviation", dev}},
            {{"deviation", "conditioning-limited, well above regular-mode levels"}},
            "cross_check", dev < 0.5, timer.ms()));
    }
    return res;
}

// Criterion 7. Near-kernel dimension and alignment on the pinned grid.
CriterionResult criterion_near_kernel() {
    CriterionResult res;
    res.index = 7;
    res.label = "near_kernel";

    ProblemParams p{1, {0.5, 0.3}};

    EigenReport pinned;
    {
        WallTimer timer;
        DiskGrid grid{40.0, 400, 8};
        AssembledOperator op = assemble_operator(p, grid);
        pinned = near_kernel_with_retry(op, 6);
        nlohmann::json evs = nlohmann::json::array();
        for (double v : pinned.eigenvalues) evs.push_back(v);
        bool ok = pinned.near_zero_count == 2;
        res.checks.push_back(make_check(
            "c7.count_pinned",
            {{"N", 1}, {"c", complex_json(p.c)}, {"R", 40.0}, {"n_r", 400}, {"M", 8}},
            {{"near_zero_count", pinned.near_zero_count}, {"eigenvalues", evs},
             {"gap_tol", pinned.gap_tol}},
            {{"near_zero_count", 2}},
            "convergence_theory", ok, timer.ms()));
    }

    {
        WallTimer timer;
        bool ok = pinned.alignment.size() >= 2 && pinned.alignment[0] < 1e-2 &&
                  pinned.alignment[1] < 1e-2;
        res.checks.push_back(make_check(
            "c7.alignment_pinned",
            {{"N", 1}, {"c", complex_json(p.c)}, {"R", 40.0}, {"n_r", 400}, {"M", 8}},
            {{"alignment", pinned.alignment}},
            {{"alignment", "< 1e-2 for the two smallest"}},
            "analytic_identity", ok, timer.ms()));
    }

    {
        WallTimer timer;
        nlohmann::json counts = nlohmann::json::array();
        bool ok = true;
        for (double R : {30.0, 40.0, 60.0}) {
            DiskGrid grid{R, static_cast<int>(10 * R), 8};
            AssembledOperator op = assemble_operator(p, grid);
            EigenReport rep = near_kernel_with_retry(op, 6);
            counts.push_back({{"R", R}, {"count", rep.near_zero_count}});
            ok = ok && rep.near_zero_count == 2;
        }
        res.checks.push_back(make_check(
            "c7.count_stability",
            {{"N", 1}, {"c", complex_json(p.c)}, {"R_set", {30.0, 40.0, 60.0}}, {"M", 8}},
            {{"counts", counts}},
            {{"count", "== 2 at every R"}},
            "convergence_theory", ok, timer.ms()));
    }

    // Richardson-extrapolated diagnostics: with the h^2 discretization bias
    // removed the two shadow eigenvalues separate from the third by two to
    // three orders of magnitude, which is what the pinned single-grid check
    // above cannot see at M = 8.
    for (double R : {20.0, 30.0, 40.0}) {
        WallTimer timer;
        RefinedEigs re = refined_near_kernel(p, R, static_cast<int>(10 * R), 16, 6);
        double ratio = 0.0;
        if (re.extrapolated.size() >= 3 && re.extrapolated[1] != 0.0)
            ratio = std::abs(re.extrapolated[2]) / std::abs(re.extrapolated[1]);
        nlohmann::json evs = nlohmann::json::array();
        for (double v : re.extrapolated) evs.push_back(v);
        res.diagnostics.push_back(make_check(
            "c7.refined.R" + std::to_string(static_cast<int>(R)),
            {{"N", 1}, {"c", complex_json(p.c)}, {"R", R},
             {"n_r_base", static_cast<int>(10 * R)}, {"M", 16}},
            {{"extrapolated", evs}, {"gap_ratio", ratio}, {"alignment", re.alignment}},
            {{"gap_ratio", ">= 10 after extrapolation"}},
            "convergence_theory", ratio >= 10.0, timer.ms()));
    }
    return res;
}

// Criterion 8. Dirichlet extension errors for the three kernel fields at the
// working grid, with second order demonstrated by the doubling that reaches
// it. Doubling past the working grid is not usable for the order check: the
// solve roundoff floor (condition ~ M^2 n_r^2) reaches the 1e-4 scale there
// and corrupts the h^2 signal.
CriterionResult criterion_extension() {
    CriterionResult res;
    res.index = 8;
    res.label = "extension";

    ProblemParams p{1, {0.5, 0.3}};
    const double R = 20.0;
    const int M = 20;
    const int n_coarse = 45000;

    std::array<double, 3> coarse{}, fine{};
    const BasisElement fields[3] = {BasisElement::Z0, BasisElement::Z1, BasisElement::Z2};
    const char* names[3] = {"Z0", "Z1", "Z2"};

    double ms_coarse = 0.0, ms_fine = 0.0;
    {
        WallTimer timer;
        ExtensionSolver solver(p, DiskGrid{R, n_coarse, M});
        for (int i = 0; i < 3; ++i) coarse[i] = solver.error_for(fields[i]);
        ms_coarse = timer.ms();
    }
    {
        WallTimer timer;
        ExtensionSolver solver(p, DiskGrid{R, 2 * n_coarse, M});
        for (int i = 0; i < 3; ++i) fine[i] = solver.error_for(fields[i]);
        ms_fine = timer.ms();
    }

    for (int i = 0; i < 3; ++i) {
        bool ok = fine[i] < 1e-3;
        res.checks.push_back(make_check(
            std::string("c8.error.") + names[i],
            {{"N", 1}, {"c", complex_json(p.c)}, {"R", R}, {"M", M},
             {"n_r", 2 * n_coarse}},
            {{"error", fine[i]}},
            {{"error", "< 1e-3"}},
            "analytic_identity", ok, i == 0 ? ms_fine : 0.0));
    }
    for (int i = 0; i < 3; ++i) {
        double ratio = coarse[i] > 0.0 ? fine[i] / coarse[i] : 0.0;
        bool ok = in_band(ratio, 0.125, 0.375);
        res.checks.push_back(make_check(
            std::string("c8.ratio.") + names[i],
            {{"N", 1}, {"c", complex_json(p.c)}, {"R", R}, {"M", M},
             {"n_r", {n_coarse, 2 * n_coarse}}},
            {{"ratio", ratio}, {"error_coarse", coarse[i]}},
            {{"ratio", "[0.125, 0.375]"}},
            "convergence_theory", ok, i == 0 ? ms_coarse : 0.0));
    }
    return res;
}

// Criterion 9. The basis-change matrix maps (Z0, Z1, Z2) onto the three
// low modes pointwise, with the expected determinant.
CriterionResult criterion_basis_change() {
    CriterionResult res;
    res.index = 9;
    res.label = "basis_change";

    WallTimer timer;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ud(-2.0, 2.0);
    double worst_identity = 0.0;
    double worst_det = 0.0;
    for (int t = 0; t < 100; ++t) {
        int N = t % 3;
        cplx c{ud(rng), ud(rng)};
        cplx z{ud(rng), ud(rng)};
        ProblemParams p{N, c};
        BasisChangeMatrix m = basis_change_matrix(p);
        KernelBasisValue kb = kernel_basis(p, z);
        double rhs[3] = {
            phi_mode_part(p, ModeFunction{0, ModePart::RealPart}, z),
            phi_mode_part(p, ModeFunction{N + 1, ModePart::RealPart}, z),
            phi_mode_part(p, ModeFunction{N + 1, ModePart::ImagPart}, z),
        };
        double zv[3] = {kb.Z0, kb.Z1, kb.Z2};
        for (int r = 0; r < 3; ++r) {
            double lhs = 0.0;
            for (int s = 0; s < 3; ++s) lhs += m.entries[r][s] * zv[s];
            worst_identity = std::max(worst_identity, std::abs(lhs - rhs[r]));
        }
        double det_expect = (1.0 + std::norm(c)) * (1.0 + std::norm(c));
        worst_det = std::max(worst_det, std::abs(m.det - det_expect) / det_expect);
    }
    bool ok = worst_identity < 1e-12 && worst_det < 1e-12;
    res.checks.push_back(make_check(
        "c9.random_identity",
        {{"trials", 100}, {"seed", 42}, {"range", "[-2, 2]^2"}, {"N_cycle", {0, 1, 2}}},
        {{"worst_identity", worst_identity}, {"worst_det_rel", worst_det}},
        {{"worst_identity", "< 1e-12"}, {"worst_det_rel", "< 1e-12"}},
        "analytic_identity", ok, timer.ms()));
    return res;
}

// Criterion 10. The small-disk first eigenvalue scales like the Bessel
// constant, and the smallness condition holds at rho = 0.1.
CriterionResult criterion_uniqueness_gap() {
    CriterionResult res;
    res.index = 10;
    res.label = "uniqueness_gap";

    const double j01 = bessel_j0_first_zero();
    const double j01sq = 5.783185962946784;
    ProblemParams p{0, {0.0, 0.0}};

    {
        WallTimer timer;
        double worst = 0.0;
        nlohmann::json rows = nlohmann::json::array();
        for (double rho : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            GapReport g = uniqueness_gap(p, rho);
            double err = std::abs(g.lambda1 * rho * rho - j01sq);
            rows.push_back({{"rho", rho}, {"lambda1_rho2", g.lambda1 * rho * rho}});
            worst = std::max(worst, err);
        }
        bool ok = worst < 1e-10;
        res.checks.push_back(make_check(
            "c10.scaling",
            {{"N", 0}, {"c", complex_json(p.c)}, {"rhos", {0.1, 0.5, 1.0, 2.0, 5.0}}},
            {{"worst_abs_error", worst}, {"rows", rows},
             {"j01_recomputed", j01 * j01}},
            {{"lambda1*rho^2", "within 1e-10 of 5.783185962946784"}},
            "bessel_zero", ok, timer.ms()));
    }
    {
        WallTimer timer;
        GapReport g = uniqueness_gap(p, 0.1);
        bool ok = g.satisfied;
        res.checks.push_back(make_check(
            "c10.satisfied_small_disk",
            {{"N", 0}, {"c", complex_json(p.c)}, {"rho", 0.1}},
            {{"sup_v", g.sup_v}, {"lambda1", g.lambda1}, {"satisfied", g.satisfied}},
            {{"satisfied", true}},
            "frozen_constant", ok, timer.ms()));
    }
    return res;
}

// Criterion 11. Zero-potential disk benchmark and 2D-vs-1D consistency.
CriterionResult criterion_disk_benchmark() {
    CriterionResult res;
    res.index = 11;
    res.label = "disk_benchmark";

    const double j01 = bessel_j0_first_zero();

    {
        WallTimer timer;
        ProblemParams p{0, {0.0, 0.0}};
        BlockTridiag A = radial_operator_1d(p, 0, 20.0, 400, true);
        EigenPairs e = smallest_eigenpairs(A, 1, 0.0);
        double expect = (j01 / 20.0) * (j01 / 20.0);
        double rel = std::abs(e.values[0] - expect) / expect;
        bool ok = rel < 0.01;
        res.checks.push_back(make_check(
            "c11.zero_potential_disk",
            {{"R", 20.0}, {"n_r", 400}, {"m", 0}},
            {{"lambda1", e.values[0]}, {"expected", expect}, {"rel_error", rel}},
            {{"rel_error", "< 0.01"}},
            "bessel_zero", ok, timer.ms()));
    }

    {
        WallTimer timer;
        ProblemParams p{1, {0.0, 0.0}};
        DiskGrid grid{20.0, 200, 4};
        AssembledOperator op = assemble_operator(p, grid);
        EigenPairs e2d = smallest_eigenpairs(op.A, 8, 0.0);

        std::vector<double> union_1d;
        for (int m = 0; m <= 4; ++m) {
            BlockTridiag A = radial_operator_1d(p, m, 20.0, 200);
            EigenPairs e1 = smallest_eigenpairs(A, 5, 0.0);
            for (double v : e1.values) {
                union_1d.push_back(v);
                if (m > 0) union_1d.push_back(v);
            }
        }
        std::sort(union_1d.begin(), union_1d.end(),
                  [](double a, double b) { return std::abs(a) < std::abs(b); });

        std::vector<double> two(e2d.values.begin(), e2d.values.begin() + 8);
        std::sort(two.begin(), two.end(),
                  [](double a, double b) { return std::abs(a) < std::abs(b); });

        double worst = 0.0;
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < 8; ++i) {
            double denom = std::max(std::abs(two[i]), 1e-12);
            double rel = std::abs(two[i] - union_1d[i]) / denom;
            rows.push_back({{"lambda_2d", two[i]}, {"lambda_1d", union_1d[i]}});
            worst = std::max(worst, rel);
        }
        bool ok = worst < 1e-8;
        res.checks.push_back(make_check(
            "c11.separation_consistency",
            {{"N", 1}, {"c", complex_json(cplx{0.0, 0.0})}, {"R", 20.0}, {"n_r", 200},
             {"M", 4}},
            {{"worst_rel", worst}, {"pairs", rows}},
            {{"worst_rel", "< 1e-8 over the first 8"}},
            "cross_check", ok, timer.ms()));
    }
    return res;
}

std::vector<CriterionResult> run_all_criteria() {
    std::vector<CriterionResult> all;
    all.push_back(criterion_kernel_identities());
    all.push_back(criterion_liouville_formula());
    all.push_back(criterion_tau_derivative());
    all.push_back(criterion_ring_scaling());
    all.push_back(criterion_ring_completeness());
    all.push_back(criterion_bounded_modes());
    all.push_back(criterion_near_kernel());
    all.push_back(criterion_extension());
    all.push_back(criterion_basis_change());
    all.push_back(criterion_uniqueness_gap());
    all.push_back(criterion_disk_benchmark());
    return all;
}

SuiteReport acceptance_suite() {
    SuiteReport rep;
    rep.config = {{"battery", "acceptance"}, {"criteria", 11}};
    for (CriterionResult& cr : run_all_criteria()) {
        for (CheckRecord& c : cr.checks) rep.checks.push_back(std::move(c));
        for (CheckRecord& d : cr.diagnostics) rep.diagnostics.push_back(std::move(d));
    }
    return rep;
}

SuiteReport residual_suite(const CommonOptions& opt) {
    SuiteReport rep;
    rep.config = options_json(opt);
    ProblemParams p{opt.N, opt.c};
    CartesianGrid grid = offcenter_grid({0.1, 0.1}, 0.3, 31);

    const PhiTag tags[3] = {PhiTag::z0(), PhiTag::z1(), PhiTag::z2()};
    for (const PhiTag& tag : tags) {
        WallTimer timer;
        ResidualReport r = linearized_residual(p, tag, grid);
        double scale = field_scale_on_grid(p, tag, grid);
        double sup_finest = r.mesh_ladder.back().sup;
        bool ok = in_band(r.fitted_order, 1.8, 2.2) && sup_finest < 1e-3 * scale;
        rep.checks.push_back(make_check(
            std::string("linearized.") + tag_name(tag),
            {{"N", opt.N}, {"c", complex_json(opt.c)}},
            {{"order", r.fitted_order}, {"sup_finest", sup_finest}, {"scale", scale}},
            {{"order", "[1.8, 2.2]"}, {"sup_finest", "< 1e-3 * scale"}},
            "analytic_identity", ok, timer.ms()));
    }
    {
        WallTimer timer;
        ResidualReport r = liouville_residual(p, 0.0, 0, grid, true);
        bool ok = in_band(r.fitted_order, 1.8, 2.2);
        rep.checks.push_back(make_check(
            "liouville.weighted",
            {{"N", opt.N}, {"c", complex_json(opt.c)}, {"tau", 0.0}, {"k", 0}},
            {{"order", r.fitted_order}, {"sup_finest", r.mesh_ladder.back().sup}},
            {{"order", "[1.8, 2.2]"}},
            "closed_form", ok, timer.ms()));
    }
    return rep;
}

SuiteReport kernel_suite(const CommonOptions& opt) {
    SuiteReport rep;
    rep.config = options_json(opt);
    ProblemParams p{opt.N, opt.c};
    WallTimer timer;
    DiskGrid grid{opt.R, opt.n_r, opt.M};
    grid.validate(p);
    AssembledOperator op = assemble_operator(p, grid);
    EigenReport er = near_kernel_with_retry(op, opt.n_eigs);
    nlohmann::json evs = nlohmann::json::array();
    for (double v : er.eigenvalues) evs.push_back(v);
    rep.diagnostics.push_back(make_check(
        "near_kernel",
        options_json(opt),
        {{"eigenvalues", evs}, {"near_zero_count", er.near_zero_count},
         {"gap_tol", er.gap_tol}, {"alignment", er.alignment}},
        {{"note", "exploratory; no gate at arbitrary parameters"}},
        "convergence_theory", true, timer.ms()));
    return rep;
}

SuiteReport tmatrix_suite(const CommonOptions& opt) {
    SuiteReport rep;
    rep.config = options_json(opt);
    ProblemParams p{opt.N, opt.c};
    std::vector<double> rhos = opt.rhos;
    if (rhos.empty()) rhos = {1e-1, 3e-2, 1e-2, 3e-3};

    WallTimer timer;
    double slope = t_deviation_scaling(p, rhos, opt.K);
    TMatrix tm = t_matrix(p, opt.rho, opt.K, 0);
    double target = static_cast<double>(opt.N + 1);
    bool ok = in_band(slope, target - 0.3, target + 0.3);
    rep.checks.push_back(make_check(
        "deviation_scaling",
        {{"N", opt.N}, {"c", complex_json(opt.c)}, {"K", opt.K}, {"rhos", rhos}},
        {{"slope", slope}, {"dev_at_rho", tm.dev}, {"rho", opt.rho}},
        {{"slope", "N+1 +- 0.3"}},
        "convergence_theory", ok, timer.ms()));
    return rep;
}

SuiteReport shoot_suite(const CommonOptions& opt) {
    SuiteReport rep;
    rep.config = options_json(opt);
    ProblemParams p{opt.N, opt.c};
    int kmax = std::max(p.N + 2, std::min(opt.K, 12));

    WallTimer timer;
    std::set<int> got = bounded_mode_set(p, kmax);
    std::set<int> want{0, p.N + 1};
    bool ok = got == want;
    rep.checks.push_back(make_check(
        "bounded_set",
        {{"N", opt.N}, {"K_max", kmax}},
        {{"bounded", got}},
        {{"bounded", want}},
        "closed_form", ok, timer.ms()));

    for (int k = 0; k <= kmax; ++k) {
        WallTimer t2;
        GrowthClassification g = shoot_mode(RadialMode{k, p}, 1e-6, 100.0, opt.tol);
        rep.diagnostics.push_back(make_check(
            "mode_k" + std::to_string(k),
            {{"N", opt.N}, {"k", k}, {"r_max", 100.0}, {"tol", opt.tol}},
            {{"verdict", g.verdict == Verdict::Bounded ? "bounded" : "grows"},
             {"fitted_exponent", g.fitted_exponent},
             {"terminal_value", g.terminal_value}},
            {{"note", "exponent ~ k for growing modes"}},
            "convergence_theory", true, t2.ms()));
    }
    return rep;
}

SuiteReport spectrum_suite(const CommonOptions& opt) {
    SuiteReport rep;
    rep.config = options_json(opt);
    ProblemParams p{opt.N, opt.c};
    WallTimer timer;
    DiskGrid grid{opt.R, opt.n_r, opt.M};
    grid.validate(p);
    AssembledOperator op = assemble_operator(p, grid);
    EigenPairs e = smallest_eigenpairs(op.A, opt.n_eigs, 0.0);
    nlohmann::json evs = nlohmann::json::array();
    for (double v : e.values) evs.push_back(v);
    rep.diagnostics.push_back(make_check(
        "smallest_eigenvalues",
        options_json(opt),
        {{"eigenvalues", evs}},
        {{"note", "sorted by magnitude around shift 0"}},
        "convergence_theory", true, timer.ms()));
    return rep;
}

SuiteReport extend_suite(const CommonOptions& opt) {
    SuiteReport rep;
    rep.config = options_json(opt);
    ProblemParams p{opt.N, opt.c};
    WallTimer timer;
    DiskGrid grid{opt.R, opt.n_r, opt.M};
    grid.validate(p);
    ExtensionSolver solver(p, grid);
    const BasisElement fields[3] = {BasisElement::Z0, BasisElement::Z1, BasisElement::Z2};
    const char* names[3] = {"Z0", "Z1", "Z2"};
    for (int i = 0; i < 3; ++i) {
        double err = solver.error_for(fields[i]);
        rep.diagnostics.push_back(make_check(
            std::string("extension.") + names[i],
            options_json(opt),
            {{"error", err}},
            {{"note", "interior deviation from the global field"}},
            "analytic_identity", true, i == 0 ? timer.ms() : 0.0));
    }
    return rep;
}

SuiteReport gap_suite(const CommonOptions& opt) {
    SuiteReport rep;
    rep.config = options_json(opt);
    ProblemParams p{opt.N, opt.c};
    WallTimer timer;
    GapReport g = uniqueness_gap(p, opt.rho);
    double j01sq = 5.783185962946784;
    double err = std::abs(g.lambda1 * opt.rho * opt.rho - j01sq);
    bool ok = err < 1e-10;
    rep.checks.push_back(make_check(
        "gap",
        {{"N", opt.N}, {"c", complex_json(opt.c)}, {"rho", opt.rho}},
        {{"sup_v", g.sup_v}, {"lambda1", g.lambda1}, {"satisfied", g.satisfied},
         {"lambda1_rho2", g.lambda1 * opt.rho * opt.rho}},
        {{"lambda1_rho2", "within 1e-10 of 5.783185962946784"}},
        "bessel_zero", ok, timer.ms()));
    return rep;
}

} // namespace liouk
