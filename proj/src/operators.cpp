#include "hardymin/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace hardymin {

namespace {

// Piecewise constant symbols decay like 1/n; this many coefficients per side
// keeps their reported tails near 1e-2.
constexpr int kPiecewiseHalfWidth = 4096;

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": size must be >= 1");
}

int model_reach(const ModelBasis& basis) {
  int h = 0;
  for (const auto& e : basis.basis) h = std::max(h, e.highest());
  return h;
}

FourierWindow symbol_window_for(const SymbolExpr& phi, int reach, double tol) {
  if (is_piecewise(phi)) reach = std::max(reach, kPiecewiseHalfWidth);
  return symbol_to_window(phi, {-reach, reach}, tol);
}

double gram_error(const Eigen::MatrixXcd& cols, double col_error) {
  const double norm = cols.size() ? cols.colwise().norm().maxCoeff() : 0.0;
  return 2.0 * norm * col_error + col_error * col_error;
}

OperatorMatrix gram_of(const OperatorMatrix& image) {
  return {image.entries.adjoint() * image.entries, image.in_basis, image.in_basis,
          gram_error(image.entries, image.entry_error)};
}

BasisLabel model_label(const ModelBasis& basis) { return {{kModel, 0, basis.dim - 1}}; }

}  // namespace

OperatorMatrix toeplitz_matrix(const FourierWindow& symbol, int rows, int cols) {
  require_positive(rows, "toeplitz_matrix");
  require_positive(cols, "toeplitz_matrix");
  Eigen::MatrixXcd m(rows, cols);
  for (int j = 0; j < rows; ++j)
    for (int k = 0; k < cols; ++k) m(j, k) = symbol[j - k];
  return {std::move(m), {{kAnalytic, 0, cols - 1}}, {{kAnalytic, 0, rows - 1}}, symbol.tail_bound};
}

OperatorMatrix toeplitz_matrix(const SymbolExpr& phi, int rows, int cols, double tol) {
  require_positive(rows, "toeplitz_matrix");
  require_positive(cols, "toeplitz_matrix");
  auto out = toeplitz_matrix(symbol_to_window(phi, {-(cols - 1), rows - 1}, tol), rows, cols);
  out.entry_error = 0;  // every coefficient used is computed in closed form
  return out;
}

OperatorMatrix hankel_matrix(const FourierWindow& symbol, int out_rows, int cols) {
  require_positive(out_rows, "hankel_matrix");
  require_positive(cols, "hankel_matrix");
  Eigen::MatrixXcd m(out_rows, cols);
  for (int j = 1; j <= out_rows; ++j)
    for (int k = 0; k < cols; ++k) m(j - 1, k) = symbol[-j - k];
  return {std::move(m), {{kAnalytic, 0, cols - 1}}, {{kCoanalytic, 1, out_rows}}, symbol.tail_bound};
}

OperatorMatrix hankel_matrix(const SymbolExpr& phi, int out_rows, int cols, double tol) {
  require_positive(out_rows, "hankel_matrix");
  require_positive(cols, "hankel_matrix");
  auto out = hankel_matrix(symbol_to_window(phi, {-(out_rows + cols - 1), -1}, tol), out_rows, cols);
  out.entry_error = 0;
  return out;
}

OperatorMatrix dual_toeplitz_matrix(const FourierWindow& symbol, int size) {
  require_positive(size, "dual_toeplitz_matrix");
  Eigen::MatrixXcd m(size, size);
  for (int j = 1; j <= size; ++j)
    for (int k = 1; k <= size; ++k) m(j - 1, k - 1) = symbol[k - j];
  return {std::move(m), {{kCoanalytic, 1, size}}, {{kCoanalytic, 1, size}}, symbol.tail_bound};
}

OperatorMatrix dual_toeplitz_matrix(const SymbolExpr& phi, int size, double tol) {
  require_positive(size, "dual_toeplitz_matrix");
  auto out = dual_toeplitz_matrix(symbol_to_window(phi, {-(size - 1), size - 1}, tol), size);
  out.entry_error = 0;
  return out;
}

OperatorMatrix truncated_toeplitz(const ModelBasis& basis, const SymbolExpr& phi, double tol) {
  const auto w = symbol_window_for(phi, model_reach(basis), tol);
  const double sup = sup_bound(phi);
  Eigen::MatrixXcd a(basis.dim, basis.dim);
  double err = 0;
  for (int k = 0; k < basis.dim; ++k) {
    const auto image = window_multiply(w, basis.basis[k]);
    for (int j = 0; j < basis.dim; ++j) {
      a(j, k) = window_inner_product(image, basis.basis[j]);
      // phi's coefficients are exact on the indices this pairing touches, so
      // only the basis tails contribute.
      const double tk = basis.basis[k].tail_bound, tj = basis.basis[j].tail_bound;
      err = std::max(err, sup * (tk + tj + tk * tj));
    }
  }
  if (is_piecewise(phi)) err = std::max(err, w.tail_bound);
  return {std::move(a), model_label(basis), model_label(basis), err};
}

OperatorMatrix compressed_shift(const ModelBasis& basis) {
  return truncated_toeplitz(basis, SymbolExpr::monomial(1), basis.tol);
}

OperatorMatrix toeplitz_on_model_space(const ModelBasis& basis, const FourierWindow& psi) {
  std::vector<FourierWindow> images;
  int reach = 0;
  double err = 0;
  for (const auto& e : basis.basis) {
    images.push_back(analytic_part(window_multiply(psi, e)));
    reach = std::max(reach, images.back().highest());
    err = std::max(err, images.back().tail_bound);
  }
  Eigen::MatrixXcd m(reach + 1, basis.dim);
  for (int k = 0; k < basis.dim; ++k)
    for (int j = 0; j <= reach; ++j) m(j, k) = images[k][j];
  return {std::move(m), model_label(basis), {{kAnalytic, 0, reach}}, err};
}

OperatorMatrix hankel_on_model_space(const ModelBasis& basis, const FourierWindow& psi) {
  std::vector<FourierWindow> images;
  int reach = 1;
  double err = 0;
  for (const auto& e : basis.basis) {
    images.push_back(coanalytic_part(window_multiply(psi, e)));
    reach = std::max(reach, -images.back().lowest());
    err = std::max(err, images.back().tail_bound);
  }
  Eigen::MatrixXcd m(reach, basis.dim);
  for (int k = 0; k < basis.dim; ++k)
    for (int j = 1; j <= reach; ++j) m(j - 1, k) = images[k][-j];
  return {std::move(m), model_label(basis), {{kCoanalytic, 1, reach}}, err};
}

OperatorMatrix BGramParts::total() const {
  return {toeplitz_gram.entries + hankel_gram.entries, toeplitz_gram.in_basis, toeplitz_gram.out_basis,
          toeplitz_gram.entry_error + hankel_gram.entry_error};
}

BGramParts b_gram_parts(const ModelBasis& basis, const SymbolExpr& phi, double tol) {
  const auto w = symbol_window_for(phi, model_reach(basis), tol);
  const auto conj_u = window_conjugate(inner_window(basis.inner, tol));
  BGramParts parts;
  parts.toeplitz_image = toeplitz_on_model_space(basis, window_multiply(conj_u, w));
  parts.hankel_image = hankel_on_model_space(basis, w);
  parts.toeplitz_gram = gram_of(parts.toeplitz_image);
  parts.hankel_gram = gram_of(parts.hankel_image);
  return parts;
}

OperatorMatrix b_gram(const ModelBasis& basis, const SymbolExpr& phi, double tol) {
  return b_gram_parts(basis, phi, tol).total();
}

DttoSymbols dtto_symbols(const BlaschkeProduct& u, const SymbolExpr& phi, int n, double tol) {
  require_positive(n, "dtto_symbols");
  const auto uw = inner_window(u, tol);
  // Wide enough that u*phi and conj(u)*phi are exact on |index| <= 2n up to u's tail.
  const auto w = symbol_window_for(phi, 2 * n + 1 + uw.highest(), tol);
  return {w, window_multiply(uw, w), window_multiply(window_conjugate(uw), w)};
}

namespace {

// Entry of U* D_phi U between basis vectors; analytic index >= 0, coanalytic index >= 1.
struct DttoEntries {
  const DttoSymbols& s;
  Complex analytic_from_analytic(int j, int k) const { return s.phi[j - k]; }
  Complex coanalytic_from_analytic(int j, int k) const { return s.u_phi[-j - k]; }
  Complex analytic_from_coanalytic(int j, int k) const { return s.conj_u_phi[j + k]; }
  Complex coanalytic_from_coanalytic(int j, int k) const { return s.phi[k - j]; }
};

OperatorMatrix assemble(const DttoSymbols& s, int n, int analytic_rows, int coanalytic_rows) {
  const DttoEntries e{s};
  Eigen::MatrixXcd m(analytic_rows + coanalytic_rows, 2 * n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < analytic_rows; ++j) {
      m(j, k) = e.analytic_from_analytic(j, k);
      m(j, n + k) = e.analytic_from_coanalytic(j, k + 1);
    }
    for (int j = 1; j <= coanalytic_rows; ++j) {
      m(analytic_rows + j - 1, k) = e.coanalytic_from_analytic(j, k);
      m(analytic_rows + j - 1, n + k) = e.coanalytic_from_coanalytic(j, k + 1);
    }
  }
  const double err = std::max({s.u_phi.tail_bound, s.conj_u_phi.tail_bound, s.phi.tail_bound});
  return {std::move(m),
          {{kShiftedAnalytic, 0, n - 1}, {kCoanalytic, 1, n}},
          {{kShiftedAnalytic, 0, analytic_rows - 1}, {kCoanalytic, 1, coanalytic_rows}},
          err};
}

}  // namespace

OperatorMatrix dtto_block(const BlaschkeProduct& u, const SymbolExpr& phi, int n, double tol) {
  const auto s = dtto_symbols(u, phi, n, tol);
  auto out = assemble(s, n, n, n);
  // Coefficients of phi itself are exact on the square block's index range.
  out.entry_error = std::max(s.u_phi.tail_bound, s.conj_u_phi.tail_bound);
  if (is_piecewise(phi)) out.entry_error = sup_bound(phi) * inner_window(u, tol).tail_bound;
  return out;
}

OperatorMatrix dtto_columns(const BlaschkeProduct& u, const SymbolExpr& phi, int n, double tol) {
  const auto s = dtto_symbols(u, phi, n, tol);
  const int analytic_rows = std::max({n, s.phi.highest() + n, s.conj_u_phi.highest()});
  const int coanalytic_rows = std::max({n, -s.u_phi.lowest(), n - s.phi.lowest()});
  return assemble(s, n, analytic_rows, coanalytic_rows);
}

OperatorMatrix conjugation_action(const BlaschkeProduct& u, int n, double tol) {
  require_positive(n, "conjugation_action");
  if (!(tol > 0)) throw std::invalid_argument("conjugation_action: tol must be positive");
  if (u.degree() < 1) throw std::invalid_argument("conjugation_action: inner function must be nonconstant");
  // C_u(u z^k) = conj(z)^{k+1} and C_u(conj(z)^k) = u z^{k-1}: a coordinate swap,
  // closed on this truncation and independent of u.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    m(n + k, k) = 1.0;
    m(k, n + k) = 1.0;
  }
  BasisLabel label{{kShiftedAnalytic, 0, n - 1}, {kCoanalytic, 1, n}};
  return {std::move(m), label, label, 0.0};
}

}  // namespace hardymin
