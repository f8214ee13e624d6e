#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "liouk/model.hpp"

namespace liouk {

// Uniform angular quadrature ring of radius rho; n_theta a power of two >= 64.
struct PolarRing {
    double rho = 1e-2;
    int n_theta = 256;

    double theta(int j) const { return 2.0 * M_PI * j / n_theta; }
    void validate() const {
        if (rho <= 0.0) throw InvalidGrid("PolarRing: rho must be > 0");
        if (n_theta < 64 || (n_theta & (n_theta - 1)) != 0)
            throw InvalidGrid("PolarRing: n_theta must be a power of two >= 64");
    }
};

enum class Parity { Const, Cos, Sin };

// Normalized trig projection of f(theta):
// Const: (1/2pi) Int f; Cos: (1/pi) Int f cos(m theta); Sin: (1/pi) Int f sin(m theta).
double ring_project(const std::function<double(double)>& f, const PolarRing& ring,
                    int mode, Parity parity);

// Truncated ring operator. Rows are the trig functionals in the order
// (const, cos 1, sin 1, ..., cos K, sin K); columns are the kernel candidates
// (Re phi_0, rho^{-1} phi_1^1, rho^{-1} phi_1^2, ..., rho^{-K} phi_K^2).
// dev is the max-row-sum norm of entries - I; dev_spectral a power-iteration
// estimate of the spectral norm of the same difference.
struct TMatrix {
    int K;
    double rho;
    Eigen::MatrixXd entries;
    double dev;
    double dev_spectral;
};

TMatrix t_matrix(const ProblemParams& p, double rho, int K, int n_theta);

// Log-log slope of dev against rho; expected ~ N+1. Needs >= 3 radii.
double t_deviation_scaling(const ProblemParams& p, const std::vector<double>& rhos, int K);

// Coefficients of psi in the unrescaled basis {Re phi_0, phi_k^1, phi_k^2}
// and the sup-norm mismatch of the reconstruction on the quadrature nodes.
struct RingReconstruction {
    std::vector<double> a;  // a[0..K]; a[0] multiplies Re phi_0
    std::vector<double> b;  // b[0] unused placeholder 0; b[1..K]
    double reconstruction_error;
};

// Solves T x = (trig projections of psi); throws NotDiagonallyDominant when
// dev >= 1/2.
RingReconstruction ring_reconstruct(const ProblemParams& p,
                                    const std::function<double(double)>& psi, double rho,
                                    int K);

// Diagnostic table of raw (unnormalized) projections
//   cos variant: Int phi_k^1(rho e^{i theta}) cos(j theta) d theta,
//   sin variant: Int phi_k^2(rho e^{i theta}) sin(j theta) d theta,
// k, j = 0..kmax; leading value pi rho^k delta_kj.
Eigen::MatrixXd raw_projection_table(const ProblemParams& p, double rho, int kmax,
                                     bool sin_part);

// Column function s of the T matrix evaluated at angle theta (rescaling
// applied as e^{ik theta}, overflow-free).
double ring_basis_function(const ProblemParams& p, double rho, int col, double theta);

} // namespace liouk
