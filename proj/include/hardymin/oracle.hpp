#pragma once

#include <optional>
#include <vector>

#include "hardymin/errors.hpp"
#include "hardymin/operators.hpp"

namespace hardymin {

/// Spectrum {alpha, alpha + beta |x|^2} of alpha I + beta x (x) x; a single point when beta = 0.
std::vector<Complex> rank_one_spectrum(Complex alpha, Complex beta, double x_norm_sq);

/// m(S_u) = |u(0)|: S_u* S_u = I - x (x) x with |x|^2 = 1 - |u(0)|^2.
double oracle_m_compressed_shift(const BlaschkeProduct& u);

/// m(D_z): 0 when u(0) = 0, else |u(0)|.
double oracle_m_dual_shift(const BlaschkeProduct& u);

/// 1 when phi is a unimodular constant, nothing otherwise.
std::optional<double> oracle_constant_symbol(const SymbolExpr& phi);

/// m(B_z) = sqrt(1 - |u(0)|^2) when dim K_u = 1, else 0.
double oracle_m_b_shift(const BlaschkeProduct& u);

enum class RangeKind { finite_set, sampled_curve, segment };

/// Model of the essential range of a symbol.  For `segment` the two points are
/// the endpoints; `exact` marks models with no sampling error.
struct EssRangeModel {
  RangeKind kind = RangeKind::finite_set;
  std::vector<Complex> points;
  std::vector<double> measures;  // arc measure per point, finite_set only
  bool exact = true;
};

/// Piecewise constant symbols give their values, real-plus-constant continuous
/// symbols a segment, everything else `resolution` samples of the curve.
EssRangeModel ess_range(const SymbolExpr& phi, int resolution = 4096);

struct NormalBounds {
  double lower = 0;
  double upper = 0;
  std::optional<double> exact;
  EssRangeModel range;
};

/// Bounds on m(D_phi) for normal D_phi from the essential range of phi:
/// dist(0, conv R) <= m <= min |R|.  Normality is certified structurally
/// (phi real valued plus a constant) unless `assume_normal` is set.
NormalBounds normal_dtto_bounds(const SymbolExpr& phi, int resolution = 4096, bool assume_normal = false);

struct NehariNorm {
  double value = 0;
  bool exact_zero = false;  // u divides phi, so conj(u) phi is analytic
  int truncation = 0;
  double entry_error = 0;
};

/// |A_phi| = |H_{conj(u) phi}| for analytic phi, as sigma_max of the size x size
/// Hankel section.  A lower bound that increases with size; size <= 0 picks one
/// covering every coefficient the window carries.
NehariNorm nehari_norm(const BlaschkeProduct& u, const SymbolExpr& phi, int size, double tol);

double distance_to_segment(Complex a, Complex b, Complex q);
/// Distance from q to the convex hull of `points` (zero when inside).
double distance_to_convex_hull(std::vector<Complex> points, Complex q);

}  // namespace hardymin
