#include "liouk/fourier_ring.hpp"

#include <cmath>

#include "liouk/fit.hpp"

namespace liouk {

namespace {

int default_ntheta(int K) { return std::max(256, 16 * K); }

// Round up to a power of two (quadrature grids are dyadic by contract).
int pow2_at_least(int n) {
    int p = 64;
    while (p < n) p *= 2;
    return p;
}

} // namespace

double ring_project(const std::function<double(double)>& f, const PolarRing& ring,
                    int mode, Parity parity) {
    ring.validate();
    if (parity != Parity::Const && mode < 1)
        throw UsageError("ring_project: mode must be >= 1 for Cos/Sin");
    double acc = 0.0;
    for (int j = 0; j < ring.n_theta; ++j) {
        const double th = ring.theta(j);
        double weight = 1.0;
        if (parity == Parity::Cos) weight = cos(mode * th);
        if (parity == Parity::Sin) weight = sin(mode * th);
        acc += f(th) * weight;
    }
    acc /= ring.n_theta;                      // (1/2pi) Int f * weight
    return parity == Parity::Const ? acc : 2.0 * acc;  // (1/pi) for cos/sin
}

double ring_basis_function(const ProblemParams& p, double rho, int col, double theta) {
    const cplx z = std::polar(rho, theta);
    const cplx zl = ipow(z, p.N + 1);
    const cplx w = zl - p.c;
    const int k = (col + 1) / 2;
    const double mu = double(p.N + 1 + k) / double(p.N + 1);
    const cplx bracket = mu - 2.0 * zl * std::conj(w) / (1.0 + std::norm(w));
    // rho^{-k} phi_k = e^{ik theta} * bracket; normalization (N+1)/(N+1+k) = 1/mu
    const cplx v = std::polar(1.0, k * theta) * bracket / mu;
    if (col == 0) return v.real();
    return (col % 2 == 1) ? v.real() : v.imag();
}

TMatrix t_matrix(const ProblemParams& p, double rho, int K, int n_theta) {
    p.validate();
    if (K < 1) throw UsageError("t_matrix: K must be >= 1");
    PolarRing ring{rho, pow2_at_least(n_theta)};
    ring.validate();
    const int dim = 2 * K + 1;
    const int nt = ring.n_theta;

    // Sample every column function once on the quadrature nodes.
    Eigen::MatrixXd cols(nt, dim);
    for (int s = 0; s < dim; ++s)
        for (int j = 0; j < nt; ++j)
            cols(j, s) = ring_basis_function(p, rho, s, ring.theta(j));

    Eigen::MatrixXd T(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const int mode = (r + 1) / 2;
        const Parity par = (r == 0) ? Parity::Const : (r % 2 == 1 ? Parity::Cos : Parity::Sin);
        Eigen::VectorXd trig(nt);
        for (int j = 0; j < nt; ++j) {
            const double th = ring.theta(j);
            trig(j) = (par == Parity::Const) ? 1.0
                      : (par == Parity::Cos) ? cos(mode * th)
                                             : sin(mode * th);
        }
        const double norm = (par == Parity::Const ? 1.0 : 2.0) / nt;
        for (int s = 0; s < dim; ++s) T(r, s) = norm * trig.dot(cols.col(s));
    }

    TMatrix out{K, rho, T, 0.0, 0.0};
    const Eigen::MatrixXd B = T - Eigen::MatrixXd::Identity(dim, dim);
    out.dev = B.cwiseAbs().rowwise().sum().maxCoeff();
    Eigen::VectorXd v = Eigen::VectorXd::Ones(dim).normalized();
    for (int it = 0; it < 20; ++it) {
        Eigen::VectorXd u = B.transpose() * (B * v);
        const double n = u.norm();
        if (n < 1e-300) break;
        v = u / n;
    }
    out.dev_spectral = (B * v).norm();
    return out;
}

double t_deviation_scaling(const ProblemParams& p, const std::vector<double>& rhos, int K) {
    if (rhos.size() < 3) throw DegenerateFit("t_deviation_scaling: need >= 3 radii");
    std::vector<double> devs;
    devs.reserve(rhos.size());
    for (double rho : rhos) devs.push_back(t_matrix(p, rho, K, default_ntheta(K)).dev);
    return loglog_slope(rhos, devs);
}

RingReconstruction ring_reconstruct(const ProblemParams& p,
                                    const std::function<double(double)>& psi, double rho,
                                    int K) {
    const int nt = pow2_at_least(default_ntheta(K));
    const TMatrix tm = t_matrix(p, rho, K, nt);
    if (tm.dev >= 0.5)
        throw NotDiagonallyDominant("ring_reconstruct: dev >= 1/2, inversion not certified");
    const int dim = 2 * K + 1;
    PolarRing ring{rho, nt};

    Eigen::VectorXd proj(dim);
    proj(0) = ring_project(psi, ring, 1, Parity::Const);
    for (int k = 1; k <= K; ++k) {
        proj(2 * k - 1) = ring_project(psi, ring, k, Parity::Cos);
        proj(2 * k) = ring_project(psi, ring, k, Parity::Sin);
    }
    const Eigen::VectorXd x = tm.entries.partialPivLu().solve(proj);

    RingReconstruction out;
    out.a.assign(size_t(K) + 1, 0.0);
    out.b.assign(size_t(K) + 1, 0.0);
    out.a[0] = x(0);
    for (int k = 1; k <= K; ++k) {
        const double scale = std::pow(rho, -k);
        out.a[size_t(k)] = x(2 * k - 1) * scale;
        out.b[size_t(k)] = x(2 * k) * scale;
    }

    // On the quadrature nodes the rescaling cancels: the reconstruction is the
    // plain column combination with the solved coordinates.
    double err = 0.0;
    for (int j = 0; j < nt; ++j) {
        const double th = ring.theta(j);
        double rec = 0.0;
        for (int s = 0; s < dim; ++s) rec += x(s) * ring_basis_function(p, rho, s, th);
        err = std::max(err, std::abs(psi(th) - rec));
    }
    out.reconstruction_error = err;
    return out;
}

Eigen::MatrixXd raw_projection_table(const ProblemParams& p, double rho, int kmax,
                                     bool sin_part) {
    const int nt = pow2_at_least(std::max(256, 16 * kmax));
    PolarRing ring{rho, nt};
    Eigen::MatrixXd table(kmax + 1, kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        const ModeFunction mode{k, sin_part ? ModePart::ImagPart : ModePart::RealPart};
        for (int j = 0; j <= kmax; ++j) {
            double acc = 0.0;
            for (int t = 0; t < nt; ++t) {
                const double th = ring.theta(t);
                const double trig = sin_part ? sin(j * th) : cos(j * th);
                const double f =
                    (sin_part && k == 0) ? 0.0 : phi_mode_part(p, mode, std::polar(rho, th));
                acc += f * trig;
            }
            table(k, j) = acc * 2.0 * M_PI / nt;
        }
    }
    return table;
}

} // namespace liouk
