#include "liouk/model.hpp"

#include <cmath>

#include "liouk/fit.hpp"

namespace liouk {

cplx ipow(cplx z, int n) {
    cplx out{1.0, 0.0};
    for (int i = 0; i < n; ++i) out *= z;
    return out;
}

double potential(const ProblemParams& p, cplx z) {
    const double lam = double(p.N + 1);
    const cplx w = ipow(z, p.N + 1) - p.c;
    const double den = 1.0 + std::norm(w);
    double r2N = 1.0;
    for (int i = 0; i < p.N; ++i) r2N *= std::norm(z);
    return 8.0 * lam * lam * r2N / (den * den);
}

double solution_u(const ProblemParams& p, cplx tau, int k, cplx z) {
    const double lam = double(p.N + 1);
    const double mu = double(p.N + 1 + k) / lam;
    const cplx zk = ipow(z, k);
    const cplx g = 1.0 + tau * mu * zk;
    const double g2 = std::norm(g);
    if (g2 < 1e-300) throw SingularPoint("solution_u: 1 + tau mu z^k vanishes");
    const cplx f = ipow(z, p.N + 1) * (1.0 + tau * zk) - p.c;
    const double den = 1.0 + std::norm(f);
    return std::log(8.0 * lam * lam * g2 / (den * den));
}

double solution_u_conformal(const ProblemParams& p, cplx tau, int k, cplx z) {
    const double r2 = std::norm(z);
    if (p.N > 0 && r2 < 1e-300)
        throw SingularPoint("solution_u_conformal: log singularity at z = 0");
    return solution_u(p, tau, k, z) + double(p.N) * std::log(r2);
}

cplx phi_mode_complex(const ProblemParams& p, int k, cplx z) {
    const double mu = double(p.N + 1 + k) / double(p.N + 1);
    const cplx zl = ipow(z, p.N + 1);
    const cplx w = zl - p.c;
    return ipow(z, k) * (mu - 2.0 * zl * std::conj(w) / (1.0 + std::norm(w)));
}

double phi_mode_part(const ProblemParams& p, const ModeFunction& mode, cplx z) {
    mode.validate();
    const cplx v = phi_mode_complex(p, mode.k, z);
    const double norm = mode.normalization(p);
    switch (mode.part) {
        case ModePart::RealPart: return norm * v.real();
        case ModePart::ImagPart: return norm * v.imag();
        case ModePart::Complex: break;
    }
    throw UsageError("phi_mode_part: part must be RealPart or ImagPart");
}

KernelBasisValue kernel_basis(const ProblemParams& p, cplx z) {
    const cplx w = ipow(z, p.N + 1) - p.c;
    const double den = 1.0 + std::norm(w);
    return {(1.0 - std::norm(w)) / den, w.real() / den, w.imag() / den};
}

BasisChangeMatrix basis_change_matrix(const ProblemParams& p) {
    const double c1 = p.c1(), c2 = p.c2();
    BasisChangeMatrix m;
    m.entries = {{{1.0, -2.0 * c1, -2.0 * c2},
                  {c1, 1.0 - c1 * c1 + c2 * c2, -2.0 * c1 * c2},
                  {c2, -2.0 * c1 * c2, 1.0 + c1 * c1 - c2 * c2}}};
    const auto& a = m.entries;
    m.det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
            a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
            a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    return m;
}

double asymptotic_decay_fit(const ProblemParams& p, const std::vector<double>& radii) {
    if (radii.size() < 3) throw DegenerateFit("asymptotic_decay_fit: need >= 3 radii");
    constexpr int n_angles = 64;
    std::vector<double> lx, ly;
    lx.reserve(radii.size());
    ly.reserve(radii.size());
    for (double r : radii) {
        double sup = 0.0;
        for (int j = 0; j < n_angles; ++j) {
            const double th = 2.0 * M_PI * j / n_angles;
            const cplx z = std::polar(r, th);
            const cplx zl = ipow(z, p.N + 1);
            const cplx w = zl - p.c;
            const cplx q = zl * std::conj(w) / (1.0 + std::norm(w));
            sup = std::max(sup, std::abs(q - 1.0));
        }
        lx.push_back(std::log(r));
        ly.push_back(std::log(sup));
    }
    return lsq_slope(lx, ly);
}

} // namespace liouk
