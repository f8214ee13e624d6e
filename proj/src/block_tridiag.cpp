#include "liouk/block_tridiag.hpp"

#include <cmath>
#include <utility>

namespace liouk {

void BlockTridiag::multiply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
    y.resize(dim());
    for (int i = 0; i < n; ++i) {
        auto xi = x.segment(long(i) * nb, nb);
        auto yi = y.segment(long(i) * nb, nb);
        yi.noalias() = block_map(i) * xi;
        if (i > 0) yi.noalias() += off[i - 1] * x.segment(long(i - 1) * nb, nb);
        if (i + 1 < n) yi.noalias() += off[i] * x.segment(long(i + 1) * nb, nb);
    }
}

Eigen::VectorXd BlockTridiag::apply(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y;
    multiply(x, y);
    return y;
}

Eigen::MatrixXd BlockTridiag::dense() const {
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(dim(), dim());
    for (int i = 0; i < n; ++i) {
        D.block(long(i) * nb, long(i) * nb, nb, nb) = block_map(i);
        if (i + 1 < n) {
            for (int a = 0; a < nb; ++a) {
                D(long(i) * nb + a, long(i + 1) * nb + a) = off[i];
                D(long(i + 1) * nb + a, long(i) * nb + a) = off[i];
            }
        }
    }
    return D;
}

void lu_inplace(Eigen::Map<Eigen::MatrixXd> A, int* piv) {
    const int m = int(A.rows());
    const double scale = std::max(A.cwiseAbs().maxCoeff(), 1e-300);
    const double tiny = 1e-14 * scale;
    for (int j = 0; j < m; ++j) {
        Eigen::Index rel = 0;
        A.col(j).tail(m - j).cwiseAbs().maxCoeff(&rel);
        const int p = j + int(rel);
        piv[j] = p;
        if (p != j) A.row(j).swap(A.row(p));
        const double d = A(j, j);
        if (std::abs(d) < tiny)
            throw FactorizationSingular("pivot " + std::to_string(j) +
                                        " below singularity threshold");
        if (j + 1 < m) {
            A.col(j).tail(m - j - 1) /= d;
            A.bottomRightCorner(m - j - 1, m - j - 1).noalias() -=
                A.col(j).tail(m - j - 1) * A.row(j).segment(j + 1, m - j - 1);
        }
    }
}

void lu_solve_inplace(Eigen::Map<const Eigen::MatrixXd> LU, const int* piv,
                      Eigen::Ref<Eigen::MatrixXd> B) {
    const int m = int(LU.rows());
    for (int j = 0; j < m; ++j)
        if (piv[j] != j) B.row(j).swap(B.row(piv[j]));
    LU.triangularView<Eigen::UnitLower>().solveInPlace(B);
    LU.triangularView<Eigen::Upper>().solveInPlace(B);
}

BlockTridiagFactor::BlockTridiagFactor(BlockTridiag a, double shift) : a_(std::move(a)) {
    const int n = a_.n;
    const int nb = a_.nb;
    piv_.resize(size_t(n) * nb);
    Eigen::MatrixXd W(nb, nb);  // inverse of the previous pivot block
    for (int i = 0; i < n; ++i) {
        auto D = a_.block_map(i);
        D.diagonal().array() -= shift;
        if (i > 0) {
            const double e2 = a_.off[i - 1] * a_.off[i - 1];
            D.noalias() -= e2 * W;
        }
        lu_inplace(D, piv_.data() + size_t(i) * nb);
        if (i + 1 < n) {
            W.setIdentity();
            lu_solve_inplace(Eigen::Map<const Eigen::MatrixXd>(a_.block(i), nb, nb),
                             piv_.data() + size_t(i) * nb, W);
        }
    }
}

void BlockTridiagFactor::solve_inplace(Eigen::VectorXd& b) const {
    const int n = a_.n;
    const int nb = a_.nb;
    // Forward: z_i = (D'_i)^{-1} (b_i - e_{i-1} z_{i-1})
    for (int i = 0; i < n; ++i) {
        auto bi = b.segment(long(i) * nb, nb);
        if (i > 0) bi.noalias() -= a_.off[i - 1] * b.segment(long(i - 1) * nb, nb);
        Eigen::Map<Eigen::MatrixXd> Bi(bi.data(), nb, 1);
        lu_solve_inplace(Eigen::Map<const Eigen::MatrixXd>(a_.block(i), nb, nb),
                         piv_.data() + size_t(i) * nb, Bi);
    }
    // Backward: x_i = z_i - (D'_i)^{-1} e_i x_{i+1}
    Eigen::VectorXd t(nb);
    for (int i = n - 2; i >= 0; --i) {
        t.noalias() = a_.off[i] * b.segment(long(i + 1) * nb, nb);
        Eigen::Map<Eigen::MatrixXd> T(t.data(), nb, 1);
        lu_solve_inplace(Eigen::Map<const Eigen::MatrixXd>(a_.block(i), nb, nb),
                         piv_.data() + size_t(i) * nb, T);
        b.segment(long(i) * nb, nb) -= t;
    }
}

Eigen::VectorXd BlockTridiagFactor::solve(const Eigen::VectorXd& b) const {
    Eigen::VectorXd x = b;
    solve_inplace(x);
    return x;
}

} // namespace liouk
