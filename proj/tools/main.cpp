#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "liouk/errors.hpp"
#include "liouk/report.hpp"
#include "liouk/suites.hpp"

namespace {

// Accepts "a+bi", "a-bi", "bi", "a", "i", "-i", with scientific notation in
// either component, e.g. "0.5+0.3i", "-1e-2i", "2".
liouk::cplx parse_complex(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw liouk::UsageError("empty complex literal");

    bool has_i = s.back() == 'i' || s.back() == 'I';
    if (has_i) s.pop_back();

    auto parse_real = [](const std::string& t) -> double {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw liouk::UsageError("bad complex literal");
        }
        if (used != t.size()) throw liouk::UsageError("bad complex literal");
        return v;
    };

    if (!has_i) return {parse_real(s), 0.0};

    // Split at the last +/- that is not an exponent sign and not leading.
    for (size_t i = s.size(); i-- > 1;) {
        char ch = s[i];
        if ((ch == '+' || ch == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            return {parse_real(s.substr(0, i)), parse_real(s.substr(i))};
        }
    }
    return {0.0, parse_real(s)};
}

struct CliConfig {
    liouk::CommonOptions opt;
    std::string c_text = "0.5+0.3i";
    std::string out_path;
    std::string format = "json";
};

int emit(const liouk::SuiteReport& rep, const CliConfig& cfg) {
    liouk::write_report(rep, cfg.out_path, cfg.format);
    return rep.overall_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singular Liouville linearization toolkit"};
    app.require_subcommand(1);

    CliConfig cfg;
    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--N", cfg.opt.N, "vortex multiplicity (N >= 0)");
        sub->add_option("--c", cfg.c_text, "branch point, e.g. 0.5+0.3i");
        sub->add_option("--R", cfg.opt.R, "disk radius");
        sub->add_option("--nr", cfg.opt.n_r, "radial grid intervals");
        sub->add_option("--M", cfg.opt.M, "angular truncation order");
        sub->add_option("--K", cfg.opt.K, "ring truncation / max mode index");
        sub->add_option("--eigs", cfg.opt.n_eigs, "number of eigenpairs");
        sub->add_option("--rho", cfg.opt.rho, "ring radius");
        sub->add_option("--rhos", cfg.opt.rhos, "ring radii for scaling fits");
        sub->add_option("--tol", cfg.opt.tol, "integrator tolerance");
        sub->add_option("--seed", cfg.opt.seed, "iteration seed");
        sub->add_option("--out", cfg.out_path, "output path ('-' for stdout)");
        sub->add_option("--format", cfg.format, "json or csv");
    };

    CLI::App* sub_residual = app.add_subcommand("residual", "finite-difference residual checks");
    CLI::App* sub_kernel = app.add_subcommand("kernel", "near-kernel eigenvalue survey");
    CLI::App* sub_tmatrix = app.add_subcommand("tmatrix", "ring trace-pairing deviation");
    CLI::App* sub_shoot = app.add_subcommand("shoot", "radial mode classification");
    CLI::App* sub_spectrum = app.add_subcommand("spectrum", "smallest eigenvalues of the operator");
    CLI::App* sub_extend = app.add_subcommand("extend", "Dirichlet extension errors");
    CLI::App* sub_gap = app.add_subcommand("gap", "small-disk uniqueness gap");
    CLI::App* sub_all = app.add_subcommand("all", "full acceptance battery (fixed parameters)");
    for (CLI::App* sub : {sub_residual, sub_kernel, sub_tmatrix, sub_shoot, sub_spectrum,
                          sub_extend, sub_gap, sub_all})
        add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        cfg.opt.c = parse_complex(cfg.c_text);

        if (sub_all->parsed()) {
            std::fprintf(stderr, "running full acceptance battery; this takes a few minutes\n");
            liouk::SuiteReport rep = liouk::acceptance_suite();
            return emit(rep, cfg);
        }
        if (sub_residual->parsed()) return emit(liouk::residual_suite(cfg.opt), cfg);
        if (sub_kernel->parsed()) return emit(liouk::kernel_suite(cfg.opt), cfg);
        if (sub_tmatrix->parsed()) return emit(liouk::tmatrix_suite(cfg.opt), cfg);
        if (sub_shoot->parsed()) return emit(liouk::shoot_suite(cfg.opt), cfg);
        if (sub_spectrum->parsed()) return emit(liouk::spectrum_suite(cfg.opt), cfg);
        if (sub_extend->parsed()) return emit(liouk::extend_suite(cfg.opt), cfg);
        if (sub_gap->parsed()) return emit(liouk::gap_suite(cfg.opt), cfg);
        std::fprintf(stderr, "no subcommand selected\n");
        return 2;
    } catch (const liouk::UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
