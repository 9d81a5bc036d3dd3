#pragma once

#include <vector>

#include "hardymin/fourier.hpp"

namespace hardymin {

/// Orthonormal basis of K_u = H^2 (-) uH^2 for a finite Blaschke product u.
struct ModelBasis {
  BlaschkeProduct inner;
  std::vector<FourierWindow> basis;
  int dim = 0;
  double tol = 0;  // tail tolerance the basis windows were built with

  /// Gram matrix of the stored windows (identity up to tails and rounding).
  Eigen::MatrixXcd gram() const;
  double max_tail() const;
};

/// Takenaka-Malmquist basis
///     e_k(z) = sqrt(1 - |a_k|^2) / (1 - conj(a_k) z) * prod_{i<k} b_{a_i}(z),
/// zeros taken in the order stored in u.  Widens the windows while the Gram
/// defect exceeds 1e-8.
ModelBasis tm_basis(const BlaschkeProduct& u, double tol);

/// k_w(z) = (1 - conj(u(w)) u(z)) / (1 - conj(w) z).
FourierWindow reproducing_kernel(const BlaschkeProduct& u, Complex w, double tol);

/// Coordinates <f, e_k>.
Eigen::VectorXcd project_onto_Ku(const ModelBasis& basis, const FourierWindow& f);

/// sum_k coords(k) e_k as a window.
FourierWindow synthesize(const ModelBasis& basis, const Eigen::VectorXcd& coords);

}  // namespace hardymin
