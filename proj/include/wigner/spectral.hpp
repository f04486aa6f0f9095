#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace wigner {

// Full eigendecomposition B = V diag(lambda) V^T with eigenvalues sorted
// descending and orthonormal eigenvector columns.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;   // lambda_1 >= ... >= lambda_N
    Eigen::MatrixXd eigenvectors;  // column i pairs with eigenvalues(i)

    int n() const { return static_cast<int>(eigenvalues.size()); }
};

// Eigenvalue/overlap pairs (lambda_i, s_i) with s_i = <v_i, u>^2, in the
// decomposition's descending-eigenvalue order.
struct OverlapVector {
    Eigen::VectorXd eigenvalues;
    Eigen::VectorXd s;

    int n() const { return static_cast<int>(s.size()); }
};

inline SpectralDecomposition eig_symmetric(const Eigen::MatrixXd& b) {
    if (b.rows() != b.cols())
        throw std::invalid_argument("eig_symmetric: matrix must be square");
    if (!b.allFinite())
        throw std::invalid_argument("eig_symmetric: matrix has non-finite entries");
    const double scale = b.size() > 0 ? b.cwiseAbs().maxCoeff() : 0.0;
    const double asym = (b - b.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(1.0, scale))
        throw std::invalid_argument("eig_symmetric: matrix not symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_symmetric: eigensolver did not converge");

    // Eigen returns ascending order; flip to descending and fix each
    // eigenvector's sign so its largest-magnitude component is positive.
    const int n = static_cast<int>(b.rows());
    SpectralDecomposition dec;
    dec.eigenvalues.resize(n);
    dec.eigenvectors.resize(n, n);
    for (int i = 0; i < n; ++i) {
        dec.eigenvalues(i) = solver.eigenvalues()(n - 1 - i);
        Eigen::VectorXd v = solver.eigenvectors().col(n - 1 - i);
        int pivot = 0;
        v.cwiseAbs().maxCoeff(&pivot);
        if (v(pivot) < 0.0) v = -v;
        dec.eigenvectors.col(i) = v;
    }
    return dec;
}

inline OverlapVector overlaps(const SpectralDecomposition& dec,
                              const Eigen::VectorXd& u) {
    if (u.size() != dec.eigenvectors.rows())
        throw std::invalid_argument("overlaps: dimension mismatch");
    if (std::abs(u.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("overlaps: u must be a unit vector");
    OverlapVector ov;
    ov.eigenvalues = dec.eigenvalues;
    const Eigen::VectorXd proj = dec.eigenvectors.transpose() * u;
    ov.s = proj.cwiseAbs2();
    return ov;
}

// u^T B^k u by k repeated matrix-vector products; B^k is never formed.
inline double quadratic_form(const Eigen::MatrixXd& b, const Eigen::VectorXd& u,
                             int k) {
    if (k < 0)
        throw std::domain_error("quadratic_form: k must be >= 0");
    if (b.rows() != b.cols() || b.rows() != u.size())
        throw std::invalid_argument("quadratic_form: dimension mismatch");
    Eigen::VectorXd w = u;
    for (int j = 0; j < k; ++j) w = b * w;
    return u.dot(w);
}

// Sum of s_i over the floor(c*N) largest-eigenvalue indices.
inline double energy_sum(const OverlapVector& ov, double c) {
    if (!(c > 0.0 && c <= 1.0))
        throw std::domain_error("energy_sum: c must be in (0, 1]");
    const int n = ov.n();
    int top = static_cast<int>(std::floor(c * n + 1e-9));
    if (top > n) top = n;
    double sum = 0.0;
    for (int i = 0; i < top; ++i) sum += ov.s(i);
    return sum;
}

}  // namespace wigner
