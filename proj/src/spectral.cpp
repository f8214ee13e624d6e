#include "liouk/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "liouk/bessel.hpp"

namespace liouk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// cos(p theta_t), sin(p theta_t) on the uniform angle grid, p = 0..P.
struct TrigTable {
    int nt = 0;
    int P = 0;
    std::vector<double> c;
    std::vector<double> s;
    TrigTable(int P_, int nt_)
        : nt(nt_), P(P_), c(size_t(P_ + 1) * nt_), s(size_t(P_ + 1) * nt_) {
        for (int p = 0; p <= P; ++p)
            for (int t = 0; t < nt; ++t) {
                const double th = kTwoPi * t / nt;
                c[size_t(p) * nt + t] = std::cos(p * th);
                s[size_t(p) * nt + t] = std::sin(p * th);
            }
    }
    const double* cos_row(int p) const { return c.data() + size_t(p) * nt; }
    const double* sin_row(int p) const { return s.data() + size_t(p) * nt; }
};

// V(r e^{i theta_t}) for all table angles, using |z^{N+1} - c|^2 expanded in
// the tabulated harmonic N+1 (no per-sample transcendentals).
void sample_potential_row(const ProblemParams& params, double r, const TrigTable& tab,
                          std::vector<double>& v) {
    const int n1 = params.N + 1;
    double rho = 1.0, r2N = 1.0;
    for (int q = 0; q < n1; ++q) rho *= r;
    for (int q = 0; q < params.N; ++q) r2N *= r * r;
    const double amp = 8.0 * n1 * n1 * r2N;
    const double cc = rho * rho + std::norm(params.c);
    const double c1 = params.c1(), c2 = params.c2();
    const double* cn = tab.cos_row(n1);
    const double* sn = tab.sin_row(n1);
    v.resize(tab.nt);
    for (int t = 0; t < tab.nt; ++t) {
        const double w2 = cc - 2.0 * rho * (c1 * cn[t] + c2 * sn[t]);
        const double om = 1.0 + w2;
        v[t] = amp / (om * om);
    }
}

// a_p = 2 mean(v cos p theta), b_p = 2 mean(v sin p theta), p = 0..P.
void project_ab(const std::vector<double>& v, const TrigTable& tab, std::vector<double>& a,
                std::vector<double>& b) {
    const int nt = tab.nt, P = tab.P;
    a.assign(P + 1, 0.0);
    b.assign(P + 1, 0.0);
    for (int p = 0; p <= P; ++p) {
        const double* ct = tab.cos_row(p);
        const double* st = tab.sin_row(p);
        double sa = 0.0, sb = 0.0;
        for (int t = 0; t < nt; ++t) {
            sa += v[t] * ct[t];
            sb += v[t] * st[t];
        }
        a[p] = 2.0 * sa / nt;
        b[p] = 2.0 * sb / nt;
    }
}

// Product-to-sum coupling of the orthonormal trigonometric basis: subtract the
// multiplication operator by V from the diagonal block. Needs a, b up to 2M.
void subtract_vhat(Eigen::Map<Eigen::MatrixXd> D, const std::vector<double>& a,
                   const std::vector<double>& b, int M) {
    const double isq2 = 1.0 / std::sqrt(2.0);
    D(0, 0) -= 0.5 * a[0];
    for (int j = 1; j <= M; ++j) {
        D(0, 2 * j - 1) -= a[j] * isq2;
        D(2 * j - 1, 0) -= a[j] * isq2;
        D(0, 2 * j) -= b[j] * isq2;
        D(2 * j, 0) -= b[j] * isq2;
    }
    for (int k = 1; k <= M; ++k)
        for (int j = 1; j <= M; ++j) {
            D(2 * k - 1, 2 * j - 1) -= 0.5 * (a[std::abs(k - j)] + a[k + j]);
            D(2 * k, 2 * j) -= 0.5 * (a[std::abs(k - j)] - a[k + j]);
            const double sg = (j == k) ? 0.0 : (j > k ? 1.0 : -1.0);
            const double cs = 0.5 * (b[j + k] + sg * b[std::abs(j - k)]);
            D(2 * k - 1, 2 * j) -= cs;
            D(2 * j, 2 * k - 1) -= cs;
        }
}

Eigen::MatrixXd angular_eval_matrix(int M, int nt) {
    const double ic = 1.0 / std::sqrt(kTwoPi);
    const double ip = 1.0 / std::sqrt(std::numbers::pi);
    Eigen::MatrixXd E(nt, 2 * M + 1);
    for (int t = 0; t < nt; ++t) {
        const double th = kTwoPi * t / nt;
        E(t, 0) = ic;
        for (int k = 1; k <= M; ++k) {
            E(t, 2 * k - 1) = std::cos(k * th) * ip;
            E(t, 2 * k) = std::sin(k * th) * ip;
        }
    }
    return E;
}

double mean_potential(const ProblemParams& params, double r) {
    if (params.c == cplx(0.0, 0.0)) {
        const int n1 = params.N + 1;
        double rho = 1.0, r2N = 1.0;
        for (int q = 0; q < n1; ++q) rho *= r;
        for (int q = 0; q < params.N; ++q) r2N *= r * r;
        const double om = 1.0 + rho * rho;
        return 8.0 * n1 * n1 * r2N / (om * om);
    }
    const int nt = 512;
    double s = 0.0;
    for (int t = 0; t < nt; ++t) s += potential(params, std::polar(r, kTwoPi * t / nt));
    return s / nt;
}

std::vector<size_t> argsort_abs(const Eigen::VectorXd& v, double shift = 0.0) {
    std::vector<size_t> idx(v.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return std::abs(v(long(a)) - shift) < std::abs(v(long(b)) - shift);
    });
    return idx;
}

double field_value(const ProblemParams& params, BasisElement which, cplx z) {
    const KernelBasisValue kb = kernel_basis(params, z);
    switch (which) {
        case BasisElement::Z0: return kb.Z0;
        case BasisElement::Z1: return kb.Z1;
        case BasisElement::Z2: return kb.Z2;
    }
    return 0.0;
}

// Relative Euclidean distance of each weighted eigenvector's coefficient
// samples from span{Z1, Z2} coefficient samples.
std::vector<double> kernel_alignments(const AssembledOperator& op,
                                      const Eigen::MatrixXd& vectors) {
    const int n = int(op.r.size());
    const int nb = op.grid.nb();
    const long dim = long(n) * nb;
    Eigen::MatrixXd B(dim, 2);
    for (int w = 0; w < 2; ++w) {
        const BasisElement which = w == 0 ? BasisElement::Z1 : BasisElement::Z2;
        Eigen::MatrixXd C = grid_coefficients(
            [&](cplx z) { return field_value(op.params, which, z); }, op.r, op.grid.M);
        for (int i = 0; i < n; ++i) B.col(w).segment(long(i) * nb, nb) = C.row(i);
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(B);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(dim, 2);
    std::vector<double> out(size_t(vectors.cols()));
    Eigen::VectorXd u(dim);
    for (long j = 0; j < vectors.cols(); ++j) {
        for (int i = 0; i < n; ++i)
            u.segment(long(i) * nb, nb) =
                vectors.col(j).segment(long(i) * nb, nb) / std::sqrt(op.mu[i]);
        const Eigen::VectorXd resid = u - Q * (Q.transpose() * u);
        out[size_t(j)] = resid.norm() / u.norm();
    }
    return out;
}

// Greedy eigenvector pairing by |correlation| between column sets.
std::vector<int> greedy_match(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    Eigen::MatrixXd An = A, Bn = B;
    for (long j = 0; j < An.cols(); ++j) An.col(j).normalize();
    for (long j = 0; j < Bn.cols(); ++j) Bn.col(j).normalize();
    Eigen::MatrixXd C = (An.transpose() * Bn).cwiseAbs();
    std::vector<int> match(size_t(A.cols()), -1);
    const int rounds = int(std::min(A.cols(), B.cols()));
    for (int k = 0; k < rounds; ++k) {
        Eigen::Index bi = 0, bj = 0;
        C.maxCoeff(&bi, &bj);
        match[size_t(bi)] = int(bj);
        C.row(bi).setConstant(-1.0);
        C.col(bj).setConstant(-1.0);
    }
    return match;
}

} // namespace

void DiskGrid::validate(const ProblemParams& params) const {
    params.validate();
    if (n_r < 64) throw InvalidGrid("n_r must be at least 64");
    if (M < params.N + 3) throw InvalidGrid("M must be at least N + 3");
    if (R < 20.0) throw InvalidGrid("R must be at least 20");
}

std::vector<cplx> angular_potential_coefficients(const ProblemParams& params, double r,
                                                 int M, int n_theta) {
    params.validate();
    if (M < 0) throw UsageError("harmonic cutoff M must be nonnegative");
    if (r < 0.0) throw UsageError("radius must be nonnegative");
    if (n_theta < std::max(8, 8 * M))
        throw UsageError("n_theta must be at least 8 M");
    std::vector<double> v(static_cast<size_t>(n_theta));
    for (int t = 0; t < n_theta; ++t)
        v[size_t(t)] = potential(params, std::polar(r, kTwoPi * t / n_theta));
    std::vector<cplx> out(static_cast<size_t>(2 * M + 1));
    for (int m = -M; m <= M; ++m) {
        cplx s = 0.0;
        for (int t = 0; t < n_theta; ++t)
            s += v[size_t(t)] * std::polar(1.0, -m * (kTwoPi * t / n_theta));
        out[size_t(m + M)] = s / double(n_theta);
    }
    return out;
}

AssembledOperator assemble_operator(const ProblemParams& params, const DiskGrid& grid,
                                    bool zero_potential) {
    grid.validate(params);
    const int n = grid.n_nodes();
    const int M = grid.M;
    const int nb = grid.nb();
    const double h = grid.h();

    AssembledOperator op;
    op.params = params;
    op.grid = grid;
    op.r.resize(size_t(n));
    op.mu.resize(size_t(n));
    for (int i = 0; i < n; ++i) op.r[size_t(i)] = (i + 1) * h;
    for (int i = 0; i < n; ++i) op.mu[size_t(i)] = op.r[size_t(i)] * h;
    op.mu[0] = 9.0 / 8.0 * h * h;  // one-sided origin closure weight
    op.A.allocate(n, nb);

    const int P = 2 * M;
    const TrigTable tab(P, std::max(512, 8 * P));
    std::vector<double> a, b, vsamp;

    for (int i = 0; i < n; ++i) {
        auto D = op.A.block_map(i);
        const double ri = op.r[size_t(i)];
        const double rp = ri + 0.5 * h;
        const double rm = ri - 0.5 * h;
        for (int col = 0; col < nb; ++col) {
            const int k = (col + 1) / 2;
            double d = double(k) * k / (ri * ri) + rp / (h * op.mu[size_t(i)]);
            if (i > 0) d += rm / (h * op.mu[size_t(i)]);
            D(col, col) += d;
        }
        if (i + 1 < n)
            op.A.off[size_t(i)] =
                -rp / (h * std::sqrt(op.mu[size_t(i)] * op.mu[size_t(i) + 1]));
        if (!zero_potential) {
            sample_potential_row(params, ri, tab, vsamp);
            project_ab(vsamp, tab, a, b);
            subtract_vhat(D, a, b, M);
        }
    }
    return op;
}

BlockTridiag radial_operator_1d(const ProblemParams& params, int m, double R, int n_r,
                                bool zero_potential) {
    params.validate();
    if (m < 0) throw UsageError("angular index m must be nonnegative");
    if (n_r < 16) throw InvalidGrid("n_r must be at least 16");
    if (!(R > 0.0)) throw InvalidGrid("R must be positive");
    const int n = n_r - 1;
    const double h = R / n_r;
    BlockTridiag A;
    A.allocate(n, 1);
    std::vector<double> mu(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) mu[size_t(i)] = (i + 1) * h * h;
    mu[0] = 9.0 / 8.0 * h * h;
    for (int i = 0; i < n; ++i) {
        const double ri = (i + 1) * h;
        const double rp = ri + 0.5 * h;
        const double rm = ri - 0.5 * h;
        double d = double(m) * m / (ri * ri) + rp / (h * mu[size_t(i)]);
        if (i > 0) d += rm / (h * mu[size_t(i)]);
        if (!zero_potential) d -= mean_potential(params, ri);
        *A.block(i) = d;
        if (i + 1 < n)
            A.off[size_t(i)] = -rp / (h * std::sqrt(mu[size_t(i)] * mu[size_t(i) + 1]));
    }
    return A;
}

EigenPairs smallest_eigenpairs(const BlockTridiag& A, int n_eigs, double shift,
                               int max_iter, unsigned seed) {
    const long dim = A.dim();
    if (n_eigs < 1 || n_eigs > dim) throw UsageError("n_eigs out of range");
    const int p = int(std::min<long>(n_eigs + 4, dim));

    BlockTridiagFactor F(A, shift);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    Eigen::MatrixXd X(dim, p);
    for (long j = 0; j < p; ++j)
        for (long i = 0; i < dim; ++i) X(i, j) = nd(rng);
    {
        Eigen::HouseholderQR<Eigen::MatrixXd> qr0(X);
        X = qr0.householderQ() * Eigen::MatrixXd::Identity(dim, p);
    }

    Eigen::MatrixXd Y(dim, p), AX(dim, p), ritz(dim, p);
    Eigen::VectorXd theta, tmp;
    Eigen::VectorXd prev = Eigen::VectorXd::Constant(n_eigs, std::nan(""));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    std::vector<size_t> order;

    for (int it = 0; it < max_iter; ++it) {
        for (int j = 0; j < p; ++j) Y.col(j) = F.solve(X.col(j));
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(Y);
        X = qr.householderQ() * Eigen::MatrixXd::Identity(dim, p);
        for (int j = 0; j < p; ++j) {
            A.multiply(X.col(j), tmp);
            AX.col(j) = tmp;
        }
        Eigen::MatrixXd H = X.transpose() * AX;
        H = 0.5 * (H + H.transpose()).eval();
        es.compute(H);
        theta = es.eigenvalues();
        order = argsort_abs(theta, shift);
        ritz.noalias() = X * es.eigenvectors();

        bool conv = it > 0;
        for (int j = 0; conv && j < n_eigs; ++j) {
            const double th = theta(long(order[size_t(j)]));
            if (std::abs(th - prev(j)) > 1e-12 * std::max(std::abs(th), 1e-300))
                conv = false;
        }
        for (int j = 0; j < n_eigs; ++j) prev(j) = theta(long(order[size_t(j)]));
        X = ritz;
        if (conv) break;
    }

    EigenPairs out;
    out.values.resize(n_eigs);
    out.vectors.resize(dim, n_eigs);
    for (int j = 0; j < n_eigs; ++j) {
        out.values(j) = theta(long(order[size_t(j)]));
        out.vectors.col(j) = ritz.col(long(order[size_t(j)]));
    }
    return out;
}

EigenReport near_kernel(const AssembledOperator& op, int n_eigs, double shift) {
    if (n_eigs < 1 || n_eigs > 10) throw UsageError("n_eigs must be in [1, 10]");
    EigenPairs pairs = smallest_eigenpairs(op.A, n_eigs, shift);

    const std::vector<size_t> idx = argsort_abs(pairs.values, 0.0);
    EigenReport rep;
    rep.eigenvalues.resize(size_t(n_eigs));
    rep.vectors.resize(pairs.vectors.rows(), n_eigs);
    for (int j = 0; j < n_eigs; ++j) {
        rep.eigenvalues[size_t(j)] = pairs.values(long(idx[size_t(j)]));
        rep.vectors.col(j) = pairs.vectors.col(long(idx[size_t(j)]));
    }

    // Leading cluster: split with the largest consecutive |lambda| ratio,
    // counted only when that ratio reaches 10.
    int best_s = 0;
    double best_ratio = 0.0;
    for (int s = 1; s < n_eigs; ++s) {
        const double lo = std::abs(rep.eigenvalues[size_t(s - 1)]);
        const double hi = std::abs(rep.eigenvalues[size_t(s)]);
        const double ratio = hi / std::max(lo, 1e-300);
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best_s = s;
        }
    }
    if (n_eigs > 1 && best_ratio >= 10.0) {
        rep.near_zero_count = best_s;
        rep.gap_tol = std::abs(rep.eigenvalues[size_t(best_s)]) / 10.0;
    } else {
        rep.near_zero_count = 0;
        rep.gap_tol = std::abs(rep.eigenvalues[0]) / 10.0;
    }

    rep.alignment = kernel_alignments(op, rep.vectors);
    return rep;
}

EigenReport near_kernel_with_retry(const AssembledOperator& op, int n_eigs, double shift) {
    double s = shift;
    for (int attempt = 0;; ++attempt) {
        try {
            return near_kernel(op, n_eigs, s);
        } catch (const FactorizationSingular&) {
            if (attempt >= 3) throw;
            s += 1e-6;
        }
    }
}

namespace {

BlockTridiagFactor make_extension_factor(const ProblemParams& params, const DiskGrid& grid,
                                         std::vector<double>& r, std::vector<double>& mu) {
    AssembledOperator op = assemble_operator(params, grid);
    r = std::move(op.r);
    mu = std::move(op.mu);
    return BlockTridiagFactor(std::move(op.A), 0.0);
}

} // namespace

ExtensionSolver::ExtensionSolver(const ProblemParams& params, const DiskGrid& grid)
    : params_(params), grid_(grid), factor_(make_extension_factor(params, grid, r_, mu_)) {}

double ExtensionSolver::error_for(BasisElement which) const {
    const int n = grid_.n_nodes();
    const int nb = grid_.nb();
    const double h = grid_.h();
    const double R = grid_.R;

    const std::vector<double> rb{R};
    const Eigen::MatrixXd g = grid_coefficients(
        [&](cplx z) { return field_value(params_, which, z); }, rb, grid_.M);

    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(long(n) * nb);
    const double fac = (R - 0.5 * h) / (h * std::sqrt(mu_[size_t(n - 1)]));
    rhs.segment(long(n - 1) * nb, nb) = fac * g.row(0).transpose();
    const Eigen::VectorXd v = factor_.solve(rhs);

    const int nt = 256;
    const Eigen::MatrixXd E = angular_eval_matrix(grid_.M, nt);
    const int stride = std::max(1, n / 512);
    std::vector<int> nodes;
    for (int i = 0; i < n; i += stride) nodes.push_back(i);
    for (int i = std::max(0, n - 32); i < n; ++i)
        if (nodes.empty() || nodes.back() < i) nodes.push_back(i);

    double err = 0.0, scale = 0.0;
    Eigen::VectorXd uvals(nt);
    for (int i : nodes) {
        const Eigen::VectorXd uc = v.segment(long(i) * nb, nb) / std::sqrt(mu_[size_t(i)]);
        uvals.noalias() = E * uc;
        for (int t = 0; t < nt; ++t) {
            const double exact =
                field_value(params_, which, std::polar(r_[size_t(i)], kTwoPi * t / nt));
            err = std::max(err, std::abs(uvals(t) - exact));
            scale = std::max(scale, std::abs(exact));
        }
    }
    return err / std::max(scale, 1e-300);
}

double dirichlet_extension_check(const ProblemParams& params, const DiskGrid& grid,
                                 BasisElement which) {
    try {
        const ExtensionSolver solver(params, grid);
        return solver.error_for(which);
    } catch (const FactorizationSingular&) {
        DiskGrid g2 = grid;
        g2.R *= 1.01;
        try {
            const ExtensionSolver solver(params, g2);
            return solver.error_for(which);
        } catch (const FactorizationSingular&) {
            throw SingularTruncation("extension operator singular at R and 1.01 R");
        }
    }
}

GapReport uniqueness_gap(const ProblemParams& params, double rho) {
    params.validate();
    if (!(rho > 0.0)) throw UsageError("rho must be positive");
    double sup = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double r = rho * i / 99.0;
        for (int j = 0; j < 100; ++j)
            sup = std::max(sup, potential(params, std::polar(r, kTwoPi * j / 100.0)));
    }
    // critical circle of the potential: the roots of z^{N+1} = c
    const double ac = std::abs(params.c);
    if (ac > 0.0) {
        const double rc = std::pow(ac, 1.0 / (params.N + 1));
        if (rc <= rho) {
            const double base = std::arg(params.c);
            for (int q = 0; q <= params.N; ++q) {
                const double th = (base + kTwoPi * q) / (params.N + 1);
                sup = std::max(sup, potential(params, std::polar(rc, th)));
            }
        }
    }
    GapReport rep;
    rep.sup_v = sup;
    const double j01 = bessel_j0_first_zero();
    rep.lambda1 = (j01 / rho) * (j01 / rho);
    rep.satisfied = rep.sup_v < rep.lambda1;
    return rep;
}

Eigen::MatrixXd grid_coefficients(const std::function<double(cplx)>& f,
                                  const std::vector<double>& r, int M, int n_theta) {
    const int nt = n_theta > 0 ? n_theta : std::max(256, 16 * M);
    const Eigen::MatrixXd E = angular_eval_matrix(M, nt);
    Eigen::MatrixXd out(long(r.size()), 2 * M + 1);
    Eigen::VectorXd fv(nt);
    for (size_t i = 0; i < r.size(); ++i) {
        for (int t = 0; t < nt; ++t) fv(t) = f(std::polar(r[i], kTwoPi * t / nt));
        out.row(long(i)) = (kTwoPi / nt) * (E.transpose() * fv);
    }
    return out;
}

Eigen::MatrixXd to_coefficient_rows(const AssembledOperator& op, const Eigen::VectorXd& v) {
    const int n = int(op.r.size());
    const int nb = op.grid.nb();
    Eigen::MatrixXd out(n, nb);
    for (int i = 0; i < n; ++i)
        out.row(i) = v.segment(long(i) * nb, nb) / std::sqrt(op.mu[size_t(i)]);
    return out;
}

RefinedEigs refined_near_kernel(const ProblemParams& params, double R, int n_r_base,
                                int M, int n_eigs) {
    if (n_eigs < 1) throw UsageError("n_eigs must be positive");
    const std::array<int, 3> nrs{n_r_base, 2 * n_r_base, 4 * n_r_base};
    std::vector<AssembledOperator> ops;
    std::vector<EigenPairs> eigs;
    for (int g = 0; g < 3; ++g) {
        DiskGrid grid;
        grid.R = R;
        grid.n_r = nrs[size_t(g)];
        grid.M = M;
        ops.push_back(assemble_operator(params, grid));
        const int want = int(std::min<long>(n_eigs + 2, ops[size_t(g)].dim()));
        eigs.push_back(smallest_eigenpairs(ops[size_t(g)].A, want, 0.0));
    }

    const int nb = ops[0].grid.nb();
    // Coarse node i sits at fine node 2i+1 when n_r doubles.
    const auto restrict_to = [&](const AssembledOperator& /*fine*/, const Eigen::MatrixXd& V,
                                 int n_coarse) {
        Eigen::MatrixXd out(long(n_coarse) * nb, V.cols());
        for (int i = 0; i < n_coarse; ++i)
            out.middleRows(long(i) * nb, nb) = V.middleRows(long(2 * i + 1) * nb, nb);
        return out;
    };

    const Eigen::MatrixXd R1 =
        restrict_to(ops[1], eigs[1].vectors, int(ops[0].r.size()));
    const std::vector<int> m01 = greedy_match(eigs[0].vectors, R1);
    const Eigen::MatrixXd R2 =
        restrict_to(ops[2], eigs[2].vectors, int(ops[1].r.size()));
    const std::vector<int> m12 = greedy_match(eigs[1].vectors, R2);

    struct Chain {
        double xx;
        double fine;
        int fine_col;
    };
    std::vector<Chain> chains;
    for (int j = 0; j < n_eigs && j < int(m01.size()); ++j) {
        const int mid = m01[size_t(j)];
        if (mid < 0 || mid >= int(m12.size())) continue;
        const int fin = m12[size_t(mid)];
        if (fin < 0) continue;
        const double lc = eigs[0].values(j);
        const double lm = eigs[1].values(mid);
        const double lf = eigs[2].values(fin);
        const double l1 = (4.0 * lm - lc) / 3.0;
        const double l2 = (4.0 * lf - lm) / 3.0;
        chains.push_back({(16.0 * l2 - l1) / 15.0, lf, fin});
    }
    std::sort(chains.begin(), chains.end(),
              [](const Chain& a, const Chain& b) { return std::abs(a.xx) < std::abs(b.xx); });

    RefinedEigs out;
    Eigen::MatrixXd fine_vecs(eigs[2].vectors.rows(), long(chains.size()));
    for (size_t j = 0; j < chains.size(); ++j) {
        out.extrapolated.push_back(chains[j].xx);
        out.finest.push_back(chains[j].fine);
        fine_vecs.col(long(j)) = eigs[2].vectors.col(chains[j].fine_col);
    }
    out.alignment = kernel_alignments(ops[2], fine_vecs);
    return out;
}

} // namespace liouk
