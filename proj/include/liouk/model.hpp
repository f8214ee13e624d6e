#pragma once

#include <array>
#include <complex>
#include <vector>

#include "liouk/errors.hpp"

namespace liouk {

using cplx = std::complex<double>;

// z^n by repeated multiplication; integer exponents only, no branch cuts.
cplx ipow(cplx z, int n);

// Vortex multiplicity N >= 0 and the translation parameter c.
struct ProblemParams {
    int N = 0;
    cplx c{0.0, 0.0};

    double c1() const { return c.real(); }
    double c2() const { return c.imag(); }
    void validate() const {
        if (N < 0) throw UsageError("ProblemParams: N must be >= 0");
    }
};

// A point z with the recurring quantity w = z^{N+1} - c cached.
struct ComplexSample {
    cplx z;
    cplx w;
    ComplexSample(const ProblemParams& p, cplx z_) : z(z_), w(ipow(z_, p.N + 1) - p.c) {}
};

enum class ModePart { Complex, RealPart, ImagPart };

// Fourier mode index k with the part selector and its normalization
// (N+1)/(N+1+k) for the real/imaginary parts, 1 for the complex mode.
struct ModeFunction {
    int k = 0;
    ModePart part = ModePart::Complex;

    double normalization(const ProblemParams& p) const {
        if (part == ModePart::Complex) return 1.0;
        return double(p.N + 1) / double(p.N + 1 + k);
    }
    void validate() const {
        if (k < 0) throw UsageError("ModeFunction: k must be >= 0");
        if (part == ModePart::ImagPart && k < 1)
            throw UsageError("ModeFunction: imaginary part requires k >= 1");
    }
};

// Values of the three spanning elements at one point:
// Z0 = (1-|w|^2)/(1+|w|^2), Z1 = Re w/(1+|w|^2), Z2 = Im w/(1+|w|^2).
struct KernelBasisValue {
    double Z0, Z1, Z2;
};

// 3x3 change of basis from (Z0, Z1, Z2) to (Re phi_0, phi_{N+1}^1, phi_{N+1}^2).
struct BasisChangeMatrix {
    std::array<std::array<double, 3>, 3> entries;
    double det;
};

// V(z) = 8 (N+1)^2 |z|^{2N} / (1 + |z^{N+1} - c|^2)^2.
double potential(const ProblemParams& p, cplx z);

// ln[ 8 (N+1)^2 |1 + tau mu z^k|^2 / (1 + |z^{N+1}(1 + tau z^k) - c|^2)^2 ],
// mu = (N+1+k)/(N+1). Throws SingularPoint when 1 + tau mu z^k ~ 0.
double solution_u(const ProblemParams& p, cplx tau, int k, cplx z);

// Same solution without the singular-weight split:
// ln[ 8 |f'(z)|^2 / (1 + |f(z)|^2)^2 ] = solution_u + 2N ln|z|.
// Satisfies Delta u + e^u = 0 away from zeros of f'.
double solution_u_conformal(const ProblemParams& p, cplx tau, int k, cplx z);

// phi_k(z) = z^k ( (N+1+k)/(N+1) - 2 z^{N+1} conj(w) / (1+|w|^2) ).
cplx phi_mode_complex(const ProblemParams& p, int k, cplx z);

// Normalized real/imaginary parts; for part == Complex use phi_mode_complex.
double phi_mode_part(const ProblemParams& p, const ModeFunction& mode, cplx z);

KernelBasisValue kernel_basis(const ProblemParams& p, cplx z);

// M(c) with rows (1, -2c1, -2c2), (c1, 1-c1^2+c2^2, -2c1c2),
// (c2, -2c1c2, 1+c1^2-c2^2); det recomputed from the entries.
BasisChangeMatrix basis_change_matrix(const ProblemParams& p);

// Log-log slope of sup_theta |z^{N+1} conj(w)/(1+|w|^2) - 1| over the given
// radii (64 angles per radius). Expected ~ -(N+1). Throws DegenerateFit if
// fewer than 3 radii.
double asymptotic_decay_fit(const ProblemParams& p, const std::vector<double>& radii);

} // namespace liouk
