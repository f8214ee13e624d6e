#pragma once

#include <Eigen/Dense>
#include <vector>

#include "liouk/errors.hpp"

namespace liouk {

// Symmetric block-tridiagonal matrix whose off-diagonal blocks are scalar
// multiples of the identity (the angular basis is not coupled across radial
// nodes). diag holds n column-major nb x nb blocks in one flat array.
struct BlockTridiag {
    int n = 0;
    int nb = 0;
    std::vector<double> diag;  // n * nb * nb
    std::vector<double> off;   // n - 1 scalars

    void allocate(int n_, int nb_) {
        n = n_;
        nb = nb_;
        diag.assign(size_t(n) * nb * nb, 0.0);
        off.assign(n > 0 ? size_t(n - 1) : 0, 0.0);
    }
    double* block(int i) { return diag.data() + size_t(i) * nb * nb; }
    const double* block(int i) const { return diag.data() + size_t(i) * nb * nb; }
    Eigen::Map<Eigen::MatrixXd> block_map(int i) {
        return Eigen::Map<Eigen::MatrixXd>(block(i), nb, nb);
    }
    Eigen::Map<const Eigen::MatrixXd> block_map(int i) const {
        return Eigen::Map<const Eigen::MatrixXd>(block(i), nb, nb);
    }
    long dim() const { return long(n) * nb; }

    void multiply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
    Eigen::MatrixXd dense() const;  // small problems / tests only
};

// In-place block LU of (A - shift I) with partial pivoting inside each block;
// the standard block-Thomas recursion D'_i = D_i - shift - e_{i-1}^2 (D'_{i-1})^{-1}.
// Consumes the matrix storage passed in (move it when the caller is done with A).
class BlockTridiagFactor {
  public:
    BlockTridiagFactor(BlockTridiag a, double shift);

    long dim() const { return a_.dim(); }
    void solve_inplace(Eigen::VectorXd& b) const;
    Eigen::VectorXd solve(const Eigen::VectorXd& b) const;

  private:
    BlockTridiag a_;        // diag re-used as LU factor storage
    std::vector<int> piv_;  // n * nb pivot rows
};

// Row-pivoted in-place LU of one dense block; piv must have room for A.rows().
// Throws FactorizationSingular when a pivot falls below 1e-14 * |A|_max.
void lu_inplace(Eigen::Map<Eigen::MatrixXd> A, int* piv);

// Solve with the factors produced by lu_inplace; B may have multiple columns.
void lu_solve_inplace(Eigen::Map<const Eigen::MatrixXd> LU, const int* piv,
                      Eigen::Ref<Eigen::MatrixXd> B);

} // namespace liouk
