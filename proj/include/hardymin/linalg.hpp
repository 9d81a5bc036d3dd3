#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace hardymin {

template <typename Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

template <typename Derived>
Eigen::Matrix<RealOf<Derived>, Eigen::Dynamic, 1> singular_values(const Eigen::MatrixBase<Derived>& m) {
  using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::JacobiSVD<Plain> svd(m.eval());
  return svd.singularValues();
}

/// inf over the input unit sphere of |M x|; zero when M has more columns than rows.
template <typename Derived>
RealOf<Derived> smallest_singular_value(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0 || m.cols() == 0) return RealOf<Derived>(0);
  if (m.rows() < m.cols()) return RealOf<Derived>(0);
  return singular_values(m).minCoeff();
}

template <typename Derived>
RealOf<Derived> largest_singular_value(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0 || m.cols() == 0) return RealOf<Derived>(0);
  return singular_values(m).maxCoeff();
}

/// Right singular vector for the smallest singular value (a minimizing input vector).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> minimizing_vector(const Eigen::MatrixBase<Derived>& m) {
  using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::JacobiSVD<Plain> svd(m.eval(), Eigen::ComputeFullV);
  const Eigen::Index n = m.cols();
  const Eigen::Index k = std::min<Eigen::Index>(m.rows(), n);
  // Columns past the rank of a wide matrix span its kernel.
  return svd.matrixV().col(k < n ? n - 1 : k - 1);
}

/// Number of input directions with |M x| <= threshold * sigma_max(M).
template <typename Derived>
Eigen::Index numerical_kernel_dimension(const Eigen::MatrixBase<Derived>& m, RealOf<Derived> rank_tol) {
  const auto s = singular_values(m);
  const RealOf<Derived> cut = rank_tol * std::max<RealOf<Derived>>(s.size() ? s.maxCoeff() : 0, 1);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) rank += s(i) > cut;
  return m.cols() - rank;
}

/// Largest eigenvalue of a Hermitian matrix.
template <typename Derived>
RealOf<Derived> hermitian_max_eigenvalue(const Eigen::MatrixBase<Derived>& h) {
  using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::SelfAdjointEigenSolver<Plain> es(h.eval(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

template <typename Derived>
RealOf<Derived> hermitian_min_eigenvalue(const Eigen::MatrixBase<Derived>& h) {
  using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::SelfAdjointEigenSolver<Plain> es(h.eval(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// Haar-like random unitary from the QR factorization of a matrix drawn by `draw`.
template <typename Scalar, typename Draw>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> random_unitary(Eigen::Index n, Draw&& draw) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = draw();
  Eigen::HouseholderQR<decltype(g)> qr(g);
  return qr.householderQ() * Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
}

}  // namespace hardymin
