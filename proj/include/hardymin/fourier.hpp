#pragma once

#include <span>

#include "hardymin/symbol.hpp"
#include "hardymin/window.hpp"

namespace hardymin {

/// Inclusive range of Laurent indices.
struct IndexRange {
  int first = 0;
  int last = 0;
};

/// Coefficients 0..n_max of b_a with the l2 tail of the geometric remainder.
FourierWindow blaschke_factor_coeffs(Complex a, int n_max);

/// Taylor window of
///     scale * prod_i b_{zeros[i]}(z) * prod_j 1 / (1 - conj(poles[j]) z)
/// long enough that the certified l2 tail is <= tol and covering at least
/// indices 0..min_last.  The tail certificate is a Cauchy estimate on a circle
/// of radius 1 < r < 1/rho, rho the largest nonzero |zero| or |pole|.
FourierWindow rational_window(Complex scale, std::span<const Complex> zeros, std::span<const Complex> poles, double tol,
                              int min_last = 0);

/// Window of the inner function u, tail <= tol.
FourierWindow inner_window(const BlaschkeProduct& u, double tol);

/// Fourier coefficients of phi on at least `range`.  For rational variants the
/// window is widened until the certified tail is <= tol; for piecewise
/// constant symbols the coefficients are exact on `range` and the O(1/n)
/// tail is reported as is.
FourierWindow symbol_to_window(const SymbolExpr& phi, IndexRange range, double tol);

/// Closed-form coefficient of a piecewise constant symbol.
Complex piecewise_coefficient(const PiecewiseArcs& p, int n);

}  // namespace hardymin
