#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "liouk/model.hpp"

namespace liouk {

// Square tensor grid; n odd so the center is a node.
struct CartesianGrid {
    cplx center{0.0, 0.0};
    double half_width = 0.5;
    int n = 41;

    double h() const { return 2.0 * half_width / (n - 1); }
    cplx z(int i, int j) const {
        return center + cplx(-half_width + i * h(), -half_width + j * h());
    }
    void validate() const {
        if (n < 5 || n % 2 == 0) throw InvalidGrid("CartesianGrid: n must be odd and >= 5");
        if (half_width <= 0.0) throw InvalidGrid("CartesianGrid: half_width must be > 0");
    }
};

struct LadderEntry {
    double h;
    double sup;
    double l2;
};

struct ResidualReport {
    std::vector<LadderEntry> mesh_ladder;
    double fitted_order;
    long excluded_nodes;
};

// 5-point stencil (f_E + f_W + f_N + f_S - 4 f_C)/h^2 at interior node (i, j).
double fd_laplacian(const std::function<double(cplx)>& f, const CartesianGrid& grid,
                    int i, int j);

// Residual of Delta u + source(z, u) on the ladder h, h/2, h/4 of `grid`.
// Nodes whose evaluation throws or where |u| > 700 are excluded; more than 1%
// exclusions rejects the report.
ResidualReport residual_ladder(const std::function<double(cplx)>& u,
                               const std::function<double(cplx, double)>& source,
                               const CartesianGrid& grid);

// Residual of the solution family against its own equation:
// weighted = true:  Delta solution_u + |z|^{2N} e^{solution_u},
// weighted = false: Delta u + e^u with u the conformal form (no weight split).
ResidualReport liouville_residual(const ProblemParams& p, cplx tau, int k,
                                  const CartesianGrid& grid, bool weighted);

// Which function to push through the linearized operator Delta + V.
struct PhiTag {
    enum class Kind { Z0, Z1, Z2, Mode, One, Z0Z1 } kind = Kind::Z0;
    ModeFunction mode{};  // used when kind == Mode (part must be Real/Imag)

    static PhiTag z0() { return {Kind::Z0, {}}; }
    static PhiTag z1() { return {Kind::Z1, {}}; }
    static PhiTag z2() { return {Kind::Z2, {}}; }
    static PhiTag of_mode(int k, ModePart part) { return {Kind::Mode, {k, part}}; }
    // Diagnostic controls: the constant 1 and the product Z0*Z1 are not
    // annihilated by the operator and must not converge to zero residual.
    static PhiTag one() { return {Kind::One, {}}; }
    static PhiTag z0z1() { return {Kind::Z0Z1, {}}; }
};

// Evaluate the tagged function at a point.
double phi_tag_value(const ProblemParams& p, const PhiTag& tag, cplx z);

ResidualReport linearized_residual(const ProblemParams& p, const PhiTag& tag,
                                   const CartesianGrid& grid);

// Central finite differences of the family in tau at tau = 0, against the
// analytic mode function: returns
//   ( |(U_{+d} - U_{-d})/(2d) - 2 Re phi_k|, |(U_{+id} - U_{-id})/(2d) + 2 Im phi_k| ).
std::pair<double, double> tau_derivative_check(const ProblemParams& p, int k, cplx z,
                                               double dtau);

// Sup of |phi_tag_value| over the interior nodes of the finest ladder rung;
// the scale reference used by the kernel-identity checks.
double field_scale_on_grid(const ProblemParams& p, const PhiTag& tag,
                           const CartesianGrid& grid);

} // namespace liouk
