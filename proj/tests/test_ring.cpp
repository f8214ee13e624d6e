#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "liouk/errors.hpp"
#include "liouk/fourier_ring.hpp"

using namespace liouk;

TEST_CASE("ring projection is an orthonormal trig analysis") {
    PolarRing ring;
    ring.rho = 0.3;
    ring.n_theta = 256;
    auto f = [](double t) { return 1.5 + 2.0 * std::cos(3.0 * t) - 0.25 * std::sin(7.0 * t); };
    CHECK(ring_project(f, ring, 0, Parity::Const) == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(ring_project(f, ring, 3, Parity::Cos) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(ring_project(f, ring, 7, Parity::Sin) == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(std::abs(ring_project(f, ring, 2, Parity::Cos)) < 1e-13);
    CHECK(std::abs(ring_project(f, ring, 3, Parity::Sin)) < 1e-13);
    CHECK_THROWS_AS(ring_project(f, ring, 0, Parity::Cos), UsageError);
}

TEST_CASE("ring validation") {
    PolarRing bad;
    bad.rho = -1.0;
    CHECK_THROWS_AS(bad.validate(), InvalidGrid);
    bad.rho = 0.1;
    bad.n_theta = 100;
    CHECK_THROWS_AS(bad.validate(), InvalidGrid);
    bad.n_theta = 32;
    CHECK_THROWS_AS(bad.validate(), InvalidGrid);
    bad.n_theta = 128;
    CHECK_NOTHROW(bad.validate());
}

TEST_CASE("raw projections are diagonal at c = 0") {
    // At c = 0 the bracket is radial, so phi_k^1 is exactly a cos k theta
    // harmonic and the quadrature is exact below the Nyquist limit.
    const double rho = 0.5;
    for (int N : {0, 2}) {
        ProblemParams p{N, {0.0, 0.0}};
        double rr = std::pow(rho, 2 * (N + 1));
        Eigen::MatrixXd tab = raw_projection_table(p, rho, 6, false);
        for (int k = 0; k <= 6; ++k) {
            double norm = double(N + 1) / double(N + 1 + k);
            double mu = 1.0 / norm;
            double bracket = norm * (mu - 2.0 * rr / (1.0 + rr));
            for (int j = 1; j <= 6; ++j) {
                double expect = (j == k) ? M_PI * std::pow(rho, k) * bracket : 0.0;
                CHECK(std::abs(tab(k, j) - expect) < 1e-12);
            }
        }
    }
}

TEST_CASE("deviation from identity scales like rho^(N+1)") {
    ProblemParams p{0, {0.8, 0.6}};
    TMatrix coarse = t_matrix(p, 1e-1, 8, 256);
    TMatrix fine = t_matrix(p, 1e-2, 8, 256);
    CHECK(fine.dev < coarse.dev);
    double ratio = coarse.dev / fine.dev;
    CHECK(ratio == doctest::Approx(10.0).epsilon(0.35));
    CHECK(fine.dev < 0.5);
    CHECK(fine.dev_spectral > 0.0);
}

TEST_CASE("deviation is stable under truncation growth") {
    ProblemParams p{1, {0.8, 0.6}};
    TMatrix a = t_matrix(p, 1e-2, 16, 256);
    TMatrix b = t_matrix(p, 1e-2, 20, 256);
    CHECK(a.dev == doctest::Approx(b.dev).epsilon(0.25));
}

TEST_CASE("finite mode combinations are recovered on the ring") {
    ProblemParams p{0, {0.2, 0.1}};
    const double rho = 0.1;
    auto psi = [&p, rho](double theta) {
        cplx z = std::polar(rho, theta);
        return 2.0 * phi_mode_part(p, ModeFunction{1, ModePart::RealPart}, z) +
               0.5 * phi_mode_part(p, ModeFunction{3, ModePart::ImagPart}, z) -
               1.25 * phi_mode_part(p, ModeFunction{0, ModePart::RealPart}, z);
    };
    RingReconstruction rec = ring_reconstruct(p, psi, rho, 5);
    CHECK(rec.a[0] == doctest::Approx(-1.25).epsilon(1e-9));
    CHECK(rec.a[1] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(rec.b[3] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(std::abs(rec.a[2]) < 1e-9);
    CHECK(std::abs(rec.b[5]) < 1e-9);
    CHECK(rec.reconstruction_error < 1e-9);
    CHECK(rec.b[0] == 0.0);
}

TEST_CASE("reconstruction refuses a ring too far from the identity") {
    ProblemParams p{0, {0.9, 0.1}};
    // Close to the branch point the columns are nowhere near the trig frame.
    const double rho = 0.85;
    TMatrix tm = t_matrix(p, rho, 6, 256);
    REQUIRE(tm.dev >= 0.5);
    auto psi = [](double theta) { return std::cos(theta); };
    CHECK_THROWS_AS(ring_reconstruct(p, psi, rho, 6), NotDiagonallyDominant);
}

TEST_CASE("ring basis columns match the reconstruction contract") {
    ProblemParams p{1, {0.3, 0.4}};
    const double rho = 0.1;
    const int K = 4;
    auto psi = [&p, rho](double theta) {
        cplx z = std::polar(rho, theta);
        return phi_mode_part(p, ModeFunction{2, ModePart::RealPart}, z);
    };
    RingReconstruction rec = ring_reconstruct(p, psi, rho, K);
    // Sum the rescaled columns with the solved coefficients; a[k] was mapped
    // back to the unrescaled basis, so scale it forward again.
    for (double theta : {0.3, 1.7, 4.4}) {
        double acc = rec.a[0] * ring_basis_function(p, rho, 0, theta);
        for (int k = 1; k <= K; ++k) {
            acc += rec.a[k] * std::pow(rho, k) * ring_basis_function(p, rho, 2 * k - 1, theta);
            acc += rec.b[k] * std::pow(rho, k) * ring_basis_function(p, rho, 2 * k, theta);
        }
        CHECK(acc == doctest::Approx(psi(theta)).epsilon(1e-8));
    }
}
