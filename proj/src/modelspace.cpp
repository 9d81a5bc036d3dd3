#include "hardymin/modelspace.hpp"

#include <cmath>
#include <stdexcept>

namespace hardymin {

namespace {

constexpr double kGramDefectLimit = 1e-8;
constexpr int kMaxWidenings = 4;

std::vector<FourierWindow> build_tm(const BlaschkeProduct& u, double tol) {
  const auto& a = u.zeros();
  std::vector<FourierWindow> out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Complex pole[] = {a[k]};
    const double scale = std::sqrt(1.0 - std::norm(a[k]));
    out.push_back(rational_window(scale, std::span<const Complex>(a.data(), k), pole, tol));
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd ModelBasis::gram() const {
  Eigen::MatrixXcd g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) g(j, k) = window_inner_product(basis[k], basis[j]);
  return g;
}

double ModelBasis::max_tail() const {
  double t = 0;
  for (const auto& e : basis) t = std::max(t, e.tail_bound);
  return t;
}

ModelBasis tm_basis(const BlaschkeProduct& u, double tol) {
  if (u.degree() < 1) throw std::invalid_argument("tm_basis: inner function must be nonconstant (degree >= 1)");
  if (!(tol > 0)) throw std::invalid_argument("tm_basis: tol must be positive");
  ModelBasis mb{u, {}, u.degree(), tol};
  for (int attempt = 0; attempt <= kMaxWidenings; ++attempt) {
    mb.basis = build_tm(u, mb.tol);
    const double defect = (mb.gram() - Eigen::MatrixXcd::Identity(mb.dim, mb.dim)).cwiseAbs().maxCoeff();
    if (defect <= kGramDefectLimit) return mb;
    mb.tol *= 1e-2;
  }
  throw std::runtime_error("tm_basis: Gram defect stays above 1e-8 after widening");
}

FourierWindow reproducing_kernel(const BlaschkeProduct& u, Complex w, double tol) {
  if (!(std::abs(w) < 1.0)) throw std::invalid_argument("reproducing_kernel: point must lie in the open unit disc");
  const Complex pole[] = {w};
  auto szego = rational_window(1.0, {}, pole, tol);
  auto u_over = rational_window(u.constant(), u.zeros(), pole, tol);
  return add(szego, scale(u_over, -std::conj(u(w))));
}

Eigen::VectorXcd project_onto_Ku(const ModelBasis& basis, const FourierWindow& f) {
  Eigen::VectorXcd c(basis.dim);
  for (int k = 0; k < basis.dim; ++k) c(k) = window_inner_product(f, basis.basis[k]);
  return c;
}

FourierWindow synthesize(const ModelBasis& basis, const Eigen::VectorXcd& coords) {
  if (coords.size() != basis.dim) throw std::invalid_argument("synthesize: coordinate vector has wrong length");
  auto out = FourierWindow::zeros(0, 0);
  for (int k = 0; k < basis.dim; ++k) out = add(out, scale(basis.basis[k], coords(k)));
  return out;
}

}  // namespace hardymin
