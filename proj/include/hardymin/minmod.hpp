#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hardymin/errors.hpp"
#include "hardymin/operators.hpp"

namespace hardymin {

enum class Method { finite_exact, galerkin_sweep, oracle, bounds };

std::string_view to_string(Method m);
Method method_from_string(std::string_view s);

struct MinModReport {
  double value = 0;
  Method method = Method::finite_exact;
  std::optional<int> truncation;
  double entry_error_bound = 0;
  std::optional<double> oracle_value;
  std::optional<double> discrepancy;

  /// Which minimum modulus `value` refers to, e.g. "m(D_phi)" or "m(B_phi)".
  std::string quantity = "m(D_phi)";
  std::optional<double> lower;
  std::optional<double> upper;
  /// Values of independent routes computed alongside `value`.
  std::vector<std::pair<std::string, double>> checks;
  std::vector<std::string> notes;

  void attach_oracle(double v);
};

double sigma_min(const OperatorMatrix& m);
double sigma_max(const OperatorMatrix& m);

/// m(D_phi) = m(A_{conj(phi)}) for unimodular phi: a dim K_u sized computation.
MinModReport min_modulus_unimodular(const BlaschkeProduct& u, const SymbolExpr& phi, double tol);

/// m(D_phi) = sqrt(1 - sup_f (|T_{conj(u phi)} f|^2 + |H_{conj(phi)} f|^2)) over unit f in K_u,
/// evaluated through the Gram of the Toeplitz and Hankel images.
MinModReport min_modulus_toeplitz_hankel(const BlaschkeProduct& u, const SymbolExpr& phi, double tol);

struct MinModBounds {
  double lower = 0;
  double upper = 1;
  double toeplitz_norm_sq = 0;  // |T_{conj(u phi)}|_{K_u}|^2
  double hankel_norm_sq = 0;    // |H_{conj(phi)}|_{K_u}|^2
};

/// Two-sided estimate of m(D_phi) from the separate Toeplitz and Hankel norms.
MinModBounds min_modulus_bounds(const BlaschkeProduct& u, const SymbolExpr& phi, double tol);

/// m(B_phi), B_phi = P_{K_u^perp} M_phi on K_u, for unimodular or analytic phi.
MinModReport min_modulus_b_operator(const BlaschkeProduct& u, const SymbolExpr& phi, double tol);

/// m(D_phi) = m(T_{conj(phi)}|_{K_u}) for an inner symbol phi.
MinModReport min_modulus_inner_symbol(const BlaschkeProduct& u, const SymbolExpr& phi, double tol);

struct ReducedMinModulus {
  double value = 0;
  bool degenerate = false;  // every singular value fell under the rank cut
  Eigen::Index kernel_dim = 0;
};

/// Smallest singular value above rank_tol * sigma_max.
ReducedMinModulus reduced_min_modulus(const OperatorMatrix& m, double rank_tol = 1e-8);

/// sigma_min of D_phi restricted to growing input blocks with full output.
/// The values are upper bounds on m(D_phi) and non-increasing in N.
std::vector<MinModReport> galerkin_sweep(const BlaschkeProduct& u, const SymbolExpr& phi, const std::vector<int>& schedule,
                                         double tol);

/// Truncations N_i where value(N_i) exceeds value(N_{i-1}) by more than 2 tol.
std::vector<int> monotonicity_violations(const std::vector<MinModReport>& sweep, double tol);

struct AdjointCheck {
  double sigma_min = 0;
  double sigma_min_adjoint = 0;
  Eigen::Index kernel_dim = 0;
  Eigen::Index kernel_dim_adjoint = 0;

  double difference() const { return std::abs(sigma_min - sigma_min_adjoint); }
};

AdjointCheck check_minmod_adjoint(const OperatorMatrix& m, double rank_tol = 1e-8);

/// max |C conj(D) conj(C) - D^*| for the antilinear C(x) = C conj(x).
double complex_symmetry_residual(const OperatorMatrix& d, const OperatorMatrix& c);

/// Worker threads for sweeps: MINMOD_THREADS if set, else the hardware count.
unsigned worker_count();

}  // namespace hardymin
