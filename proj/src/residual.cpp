#include "liouk/residual.hpp"

#include <cmath>
#include <limits>

#include "liouk/fit.hpp"

namespace liouk {

double fd_laplacian(const std::function<double(cplx)>& f, const CartesianGrid& grid,
                    int i, int j) {
    grid.validate();
    if (i <= 0 || j <= 0 || i >= grid.n - 1 || j >= grid.n - 1)
        throw BoundaryNode("fd_laplacian: node is not interior");
    const double h = grid.h();
    const double fc = f(grid.z(i, j));
    const double fe = f(grid.z(i + 1, j));
    const double fw = f(grid.z(i - 1, j));
    const double fn = f(grid.z(i, j + 1));
    const double fs = f(grid.z(i, j - 1));
    return (fe + fw + fn + fs - 4.0 * fc) / (h * h);
}

namespace {

struct RungResult {
    double sup;
    double l2;
    long excluded;
    long interior;
};

RungResult eval_rung(const std::function<double(cplx)>& u,
                     const std::function<double(cplx, double)>& source,
                     const CartesianGrid& grid) {
    const int n = grid.n;
    const double h = grid.h();
    std::vector<double> vals(size_t(n) * n);
    std::vector<char> ok(size_t(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v;
            bool good = true;
            try {
                v = u(grid.z(i, j));
            } catch (const Error&) {
                good = false;
                v = 0.0;
            }
            if (good && (!std::isfinite(v) || std::abs(v) > 700.0)) good = false;
            vals[size_t(i) * n + j] = v;
            ok[size_t(i) * n + j] = good ? 1 : 0;
        }
    }
    RungResult out{0.0, 0.0, 0, 0};
    const auto at = [&](int i, int j) { return vals[size_t(i) * n + j]; };
    const auto is_ok = [&](int i, int j) { return ok[size_t(i) * n + j] != 0; };
    for (int i = 1; i < n - 1; ++i) {
        for (int j = 1; j < n - 1; ++j) {
            ++out.interior;
            if (!(is_ok(i, j) && is_ok(i + 1, j) && is_ok(i - 1, j) && is_ok(i, j + 1) &&
                  is_ok(i, j - 1))) {
                ++out.excluded;
                continue;
            }
            const double lap =
                (at(i + 1, j) + at(i - 1, j) + at(i, j + 1) + at(i, j - 1) - 4.0 * at(i, j)) /
                (h * h);
            const double r = lap + source(grid.z(i, j), at(i, j));
            out.sup = std::max(out.sup, std::abs(r));
            out.l2 += r * r;
        }
    }
    out.l2 = std::sqrt(out.l2 * h * h);
    return out;
}

} // namespace

ResidualReport residual_ladder(const std::function<double(cplx)>& u,
                               const std::function<double(cplx, double)>& source,
                               const CartesianGrid& grid) {
    grid.validate();
    ResidualReport rep;
    rep.excluded_nodes = 0;
    long interior_total = 0;
    std::vector<double> hs, sups;
    for (int rung = 0; rung < 3; ++rung) {
        CartesianGrid g = grid;
        g.n = (grid.n - 1) * (1 << rung) + 1;
        const RungResult r = eval_rung(u, source, g);
        rep.mesh_ladder.push_back({g.h(), r.sup, r.l2});
        rep.excluded_nodes += r.excluded;
        interior_total += r.interior;
        hs.push_back(g.h());
        sups.push_back(std::max(r.sup, 1e-300));
    }
    if (rep.excluded_nodes * 100 > interior_total)
        throw SingularPoint("residual_ladder: more than 1% of nodes excluded");
    rep.fitted_order = loglog_slope(hs, sups);
    return rep;
}

ResidualReport liouville_residual(const ProblemParams& p, cplx tau, int k,
                                  const CartesianGrid& grid, bool weighted) {
    p.validate();
    const auto u = [&](cplx z) {
        return weighted ? solution_u(p, tau, k, z) : solution_u_conformal(p, tau, k, z);
    };
    const auto source = [&](cplx z, double uz) {
        if (!weighted) return std::exp(uz);
        double r2N = 1.0;
        for (int i = 0; i < p.N; ++i) r2N *= std::norm(z);
        return r2N * std::exp(uz);
    };
    return residual_ladder(u, source, grid);
}

double phi_tag_value(const ProblemParams& p, const PhiTag& tag, cplx z) {
    switch (tag.kind) {
        case PhiTag::Kind::Z0: return kernel_basis(p, z).Z0;
        case PhiTag::Kind::Z1: return kernel_basis(p, z).Z1;
        case PhiTag::Kind::Z2: return kernel_basis(p, z).Z2;
        case PhiTag::Kind::Mode: return phi_mode_part(p, tag.mode, z);
        case PhiTag::Kind::One: return 1.0;
        case PhiTag::Kind::Z0Z1: {
            const KernelBasisValue kb = kernel_basis(p, z);
            return kb.Z0 * kb.Z1;
        }
    }
    throw UsageError("phi_tag_value: unknown tag");
}

ResidualReport linearized_residual(const ProblemParams& p, const PhiTag& tag,
                                   const CartesianGrid& grid) {
    p.validate();
    const auto u = [&](cplx z) { return phi_tag_value(p, tag, z); };
    const auto source = [&](cplx z, double uz) { return potential(p, z) * uz; };
    return residual_ladder(u, source, grid);
}

std::pair<double, double> tau_derivative_check(const ProblemParams& p, int k, cplx z,
                                               double dtau) {
    if (dtau <= 0.0) throw UsageError("tau_derivative_check: dtau must be > 0");
    const cplx phi = phi_mode_complex(p, k, z);
    const double d_real =
        (solution_u(p, cplx(dtau, 0.0), k, z) - solution_u(p, cplx(-dtau, 0.0), k, z)) /
        (2.0 * dtau);
    const double d_imag =
        (solution_u(p, cplx(0.0, dtau), k, z) - solution_u(p, cplx(0.0, -dtau), k, z)) /
        (2.0 * dtau);
    return {std::abs(d_real - 2.0 * phi.real()), std::abs(d_imag + 2.0 * phi.imag())};
}

double field_scale_on_grid(const ProblemParams& p, const PhiTag& tag,
                           const CartesianGrid& grid) {
    CartesianGrid g = grid;
    g.n = (grid.n - 1) * 4 + 1;
    double sup = 0.0;
    for (int i = 1; i < g.n - 1; ++i)
        for (int j = 1; j < g.n - 1; ++j)
            sup = std::max(sup, std::abs(phi_tag_value(p, tag, g.z(i, j))));
    return sup;
}

} // namespace liouk
