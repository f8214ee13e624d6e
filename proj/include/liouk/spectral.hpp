#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "liouk/block_tridiag.hpp"
#include "liouk/errors.hpp"
#include "liouk/model.hpp"

namespace liouk {

// Polar finite-volume grid on the disk of radius R with homogeneous Dirichlet
// data at r = R. Radial nodes r_i = (i+1) h, h = R/n_r, i = 0..n_r-2 (the
// boundary node is eliminated); angular resolution keeps harmonics |m| <= M.
struct DiskGrid {
    double R = 40.0;
    int n_r = 300;
    int M = 8;

    void validate(const ProblemParams& params) const;
    double h() const { return R / n_r; }
    int n_nodes() const { return n_r - 1; }
    int nb() const { return 2 * M + 1; }
};

// Complex angular Fourier coefficients V_m(r), m = -M..M (index m + M), of
// theta -> V(r e^{i theta}) by the n_theta-point trapezoid rule. Requires
// n_theta >= 8 M so the tail aliasing sits below double rounding.
std::vector<cplx> angular_potential_coefficients(const ProblemParams& params, double r,
                                                 int M, int n_theta);

// Symmetrized operator for -Laplace - V in the weighted variables v = sqrt(mu) u,
// mu_i = r_i h except mu_0 = (9/8) h^2 which makes the one-sided origin closure
// symmetric. Angular basis per node: 1/sqrt(2 pi), cos(k theta)/sqrt(pi),
// sin(k theta)/sqrt(pi) interleaved, nb = 2M+1 columns.
struct AssembledOperator {
    ProblemParams params;
    DiskGrid grid;
    BlockTridiag A;
    std::vector<double> r;
    std::vector<double> mu;

    long dim() const { return A.dim(); }
};

AssembledOperator assemble_operator(const ProblemParams& params, const DiskGrid& grid,
                                    bool zero_potential = false);

// Single-mode radial operator (nb = 1 blocks) with the same stencil, closure
// and weighting; the potential enters through its angular mean, which for
// c = 0 is evaluated in closed form.
BlockTridiag radial_operator_1d(const ProblemParams& params, int m, double R, int n_r,
                                bool zero_potential = false);

// Eigenvalues of smallest |lambda - shift| by shift-inverted subspace iteration
// with Rayleigh-Ritz extraction. vectors columns are the weighted coordinates.
struct EigenPairs {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};
EigenPairs smallest_eigenpairs(const BlockTridiag& A, int n_eigs, double shift,
                               int max_iter = 500, unsigned seed = 12345);

// Near-kernel survey: eigenvalues sorted by |lambda|, the size of the leading
// cluster (largest consecutive |lambda| ratio, counted only when that ratio is
// at least 10), and per-vector alignment: the relative Euclidean distance of
// the coefficient samples u = v/sqrt(mu) from the span of the coefficient
// samples of the two decaying kernel fields Z1, Z2.
struct EigenReport {
    std::vector<double> eigenvalues;
    int near_zero_count = 0;
    std::vector<double> alignment;
    double gap_tol = 0.0;
    Eigen::MatrixXd vectors;
};
EigenReport near_kernel(const AssembledOperator& op, int n_eigs, double shift = 0.0);

// Retry wrapper around near_kernel: on FactorizationSingular the shift is
// nudged by 1e-6 and the solve retried, at most three times.
EigenReport near_kernel_with_retry(const AssembledOperator& op, int n_eigs,
                                   double shift = 0.0);

enum class BasisElement { Z0 = 0, Z1 = 1, Z2 = 2 };

// Relative sup error of the discrete harmonic-type extension of Z|_{r=R} into
// the disk against the field itself. A singular factorization is retried once
// with R inflated by 1%; a second failure raises SingularTruncation.
double dirichlet_extension_check(const ProblemParams& params, const DiskGrid& grid,
                                 BasisElement which);

// Same computation with the assembly and factorization shared across all three
// boundary fields; this is the path used for large grids.
class ExtensionSolver {
  public:
    ExtensionSolver(const ProblemParams& params, const DiskGrid& grid);
    double error_for(BasisElement which) const;

  private:
    ProblemParams params_;
    DiskGrid grid_;
    std::vector<double> r_;
    std::vector<double> mu_;
    BlockTridiagFactor factor_;
};

// sup V over the disk |z| <= rho (dense polar sweep plus the critical points
// z^{N+1} = c) against the first Dirichlet eigenvalue (j_{0,1}/rho)^2.
struct GapReport {
    double sup_v = 0.0;
    double lambda1 = 0.0;
    bool satisfied = false;
};
GapReport uniqueness_gap(const ProblemParams& params, double rho);

// Orthonormal-basis coefficient rows of theta -> f(r_i e^{i theta}) for each
// radius; n_theta = 0 selects max(256, 16 M) sample angles.
Eigen::MatrixXd grid_coefficients(const std::function<double(cplx)>& f,
                                  const std::vector<double>& r, int M, int n_theta = 0);

// Reshape a weighted eigenvector into per-node coefficient rows u = v/sqrt(mu).
Eigen::MatrixXd to_coefficient_rows(const AssembledOperator& op, const Eigen::VectorXd& v);

// Eigenvalues recomputed on n_r, 2 n_r and 4 n_r with eigenvector-correlation
// pairing across grids, then second-order Richardson extrapolation twice.
// Reports the h->0 limits with the finest-grid values and alignments of the
// matched modes, all sorted by |extrapolated|.
struct RefinedEigs {
    std::vector<double> extrapolated;
    std::vector<double> finest;
    std::vector<double> alignment;
};
RefinedEigs refined_near_kernel(const ProblemParams& params, double R, int n_r_base,
                                int M, int n_eigs);

} // namespace liouk
