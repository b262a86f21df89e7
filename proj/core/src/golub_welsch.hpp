#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qfht/errors.hpp"

namespace qfht::detail {

// Nodes and weights of a Gauss rule from the recurrence coefficients of the
// orthogonal polynomials: symmetric tridiagonal Jacobi matrix with diagonal
// `diag`, off-diagonal `offdiag`, and zeroth moment mu0.
inline std::pair<std::vector<double>, std::vector<double>>
golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag, double mu0) {
    const int m = static_cast<int>(diag.size());
    Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), m);
    Eigen::VectorXd e(m > 1 ? m - 1 : 1);
    for (int i = 0; i + 1 < m; ++i) e[i] = offdiag[static_cast<size_t>(i)];

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(d, e.head(std::max(m - 1, 0)),
                                  Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw NumericalError("golub_welsch: tridiagonal eigensolve failed");

    std::vector<double> nodes(m), weights(m);
    for (int i = 0; i < m; ++i) {
        nodes[static_cast<size_t>(i)] = solver.eigenvalues()[i];
        const double v0 = solver.eigenvectors()(0, i);
        weights[static_cast<size_t>(i)] = mu0 * v0 * v0;
    }
    return {std::move(nodes), std::move(weights)};
}

} // namespace qfht::detail
