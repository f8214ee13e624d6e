#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "liouk/errors.hpp"
#include "liouk/residual.hpp"

using namespace liouk;

namespace {
CartesianGrid grid_at(cplx center, double hw, int n) {
    CartesianGrid g;
    g.center = center;
    g.half_width = hw;
    g.n = n;
    return g;
}
} // namespace

TEST_CASE("five point laplacian is exact on low-degree polynomials") {
    CartesianGrid g = grid_at({0.3, 0.2}, 0.4, 41);
    int i = 20, j = 20;
    // x^2 -> 2, x^2 + y^2 -> 4, x^2 - y^2 and cubics -> 0 up to rounding.
    CHECK(fd_laplacian([](cplx z) { return z.real() * z.real(); }, g, i, j) ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fd_laplacian([](cplx z) { return std::norm(z); }, g, i, j) ==
          doctest::Approx(4.0).epsilon(1e-9));
    CHECK(std::abs(fd_laplacian(
              [](cplx z) { return z.real() * z.real() - z.imag() * z.imag(); }, g, i, j)) <
          1e-9);
    CHECK(std::abs(fd_laplacian([](cplx z) { return std::pow(z.real(), 3); }, g, i, j) -
                   6.0 * g.z(i, j).real()) < 1e-8);
}

TEST_CASE("five point laplacian approximates a smooth log profile") {
    CartesianGrid g = grid_at({0.1, -0.2}, 0.3, 41);
    auto f = [](cplx z) { return std::log(1.0 + std::norm(z)); };
    int i = 20, j = 20;
    cplx z0 = g.z(i, j);
    double exact = 4.0 / ((1.0 + std::norm(z0)) * (1.0 + std::norm(z0)));
    CHECK(fd_laplacian(f, g, i, j) == doctest::Approx(exact).epsilon(1e-3));
}

TEST_CASE("laplacian rejects boundary nodes") {
    CartesianGrid g = grid_at({0.0, 0.0}, 0.5, 11);
    auto f = [](cplx z) { return std::norm(z); };
    CHECK_THROWS_AS(fd_laplacian(f, g, 0, 5), BoundaryNode);
    CHECK_THROWS_AS(fd_laplacian(f, g, 5, 10), BoundaryNode);
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(grid_at({0, 0}, 0.5, 40).validate(), InvalidGrid);
    CHECK_THROWS_AS(grid_at({0, 0}, 0.5, 3).validate(), InvalidGrid);
    CHECK_THROWS_AS(grid_at({0, 0}, -1.0, 41).validate(), InvalidGrid);
    CHECK_NOTHROW(grid_at({0, 0}, 0.5, 41).validate());
}

TEST_CASE("residual ladder sees second order for a manufactured solution") {
    // u = log(8 / (1 + |z|^2)^2) satisfies Delta u + e^u = 0 everywhere.
    CartesianGrid g = grid_at({0.4, 0.3}, 0.5, 41);
    auto u = [](cplx z) { return std::log(8.0) - 2.0 * std::log1p(std::norm(z)); };
    auto src = [](cplx, double uval) { return std::exp(uval); };
    ResidualReport rep = residual_ladder(u, src, g);
    REQUIRE(rep.mesh_ladder.size() == 3);
    CHECK(rep.fitted_order == doctest::Approx(2.0).epsilon(0.1));
    CHECK(rep.mesh_ladder[2].sup < rep.mesh_ladder[0].sup);
    CHECK(rep.excluded_nodes == 0);
}

TEST_CASE("liouville residual converges in both arrangements") {
    ProblemParams p{1, {0.5, 0.3}};
    CartesianGrid g = grid_at({0.4, 0.3}, 0.5, 41);
    ResidualReport weighted = liouville_residual(p, 0.0, 0, g, true);
    CHECK(weighted.fitted_order == doctest::Approx(2.0).epsilon(0.12));

    CartesianGrid away = grid_at({1.0, 0.5}, 0.4, 41);
    ResidualReport conformal = liouville_residual(p, 0.0, 0, away, false);
    CHECK(conformal.fitted_order == doctest::Approx(2.0).epsilon(0.12));
}

TEST_CASE("tagged fields evaluate consistently") {
    ProblemParams p{1, {0.5, 0.3}};
    cplx z{0.7, -0.4};
    KernelBasisValue kb = kernel_basis(p, z);
    CHECK(phi_tag_value(p, PhiTag::z0(), z) == doctest::Approx(kb.Z0).epsilon(1e-14));
    CHECK(phi_tag_value(p, PhiTag::z1(), z) == doctest::Approx(kb.Z1).epsilon(1e-14));
    CHECK(phi_tag_value(p, PhiTag::z2(), z) == doctest::Approx(kb.Z2).epsilon(1e-14));
    CHECK(phi_tag_value(p, PhiTag::one(), z) == 1.0);
    CHECK(phi_tag_value(p, PhiTag::z0z1(), z) ==
          doctest::Approx(kb.Z0 * kb.Z1).epsilon(1e-14));
    ModeFunction m{2, ModePart::RealPart};
    CHECK(phi_tag_value(p, PhiTag::of_mode(2, ModePart::RealPart), z) ==
          doctest::Approx(phi_mode_part(p, m, z)).epsilon(1e-14));
}

TEST_CASE("kernel fields pass, non-kernel fields fail") {
    ProblemParams p{0, {0.0, 0.0}};
    CartesianGrid g = grid_at({0.4, 0.3}, 0.5, 41);
    ResidualReport z0 = linearized_residual(p, PhiTag::z0(), g);
    CHECK(z0.fitted_order == doctest::Approx(2.0).epsilon(0.15));

    ResidualReport mode = linearized_residual(p, PhiTag::of_mode(2, ModePart::RealPart), g);
    CHECK(mode.fitted_order == doctest::Approx(2.0).epsilon(0.15));

    ResidualReport one = linearized_residual(p, PhiTag::one(), g);
    CHECK(one.fitted_order < 1.0);
    CHECK(one.mesh_ladder.back().sup > 1e-3);

    ResidualReport prod = linearized_residual(p, PhiTag::z0z1(), g);
    CHECK(prod.fitted_order < 1.0);
    CHECK(prod.mesh_ladder.back().sup > 1e-3);
}

TEST_CASE("tau derivative errors shrink at second order") {
    ProblemParams p{1, {0.3, -0.2}};
    cplx z{0.6, 0.5};
    auto [e1r, e1i] = tau_derivative_check(p, 2, z, 1e-2);
    auto [e2r, e2i] = tau_derivative_check(p, 2, z, 5e-3);
    CHECK(e2r < 0.35 * e1r);
    CHECK(e2i < 0.35 * e1i);
    auto [a_r, a_i] = tau_derivative_check(p, 2, z, 1e-3);
    CHECK(a_r < 1e-5);
    CHECK(a_i < 1e-5);
}

TEST_CASE("field scale reflects the sup of the field") {
    ProblemParams p{1, {0.5, 0.3}};
    CartesianGrid g = grid_at({0.4, 0.3}, 0.5, 41);
    double s = field_scale_on_grid(p, PhiTag::one(), g);
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    double s0 = field_scale_on_grid(p, PhiTag::z0(), g);
    CHECK(s0 > 0.0);
    CHECK(s0 <= 1.0 + 1e-12);
}
