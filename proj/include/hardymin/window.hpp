#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace hardymin {

/// A finite slice of a Laurent series on the unit circle.
///
/// `coeffs[i]` holds the Fourier coefficient at index `offset + i`, with the
/// convention f^(n) = (1/2pi) * integral f(e^{it}) e^{-int} dt.  Everything the
/// window does not store is accounted for by `tail_bound`, an l2 bound on the
/// difference between the true function and the stored slice.
template <typename Real>
struct BasicFourierWindow {
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  int offset = 0;
  Vector coeffs = Vector::Zero(1);
  Real tail_bound = 0;

  BasicFourierWindow() = default;
  BasicFourierWindow(int first, Vector c, Real tail = 0)
      : offset(first), coeffs(std::move(c)), tail_bound(tail) {
    if (coeffs.size() == 0) throw std::invalid_argument("FourierWindow: empty coefficient vector");
    if (!(tail_bound >= 0) || !std::isfinite(static_cast<double>(tail_bound)))
      throw std::invalid_argument("FourierWindow: tail bound must be finite and nonnegative");
  }

  static BasicFourierWindow monomial(int n, Scalar c = Scalar(1)) {
    Vector v(1);
    v(0) = c;
    return BasicFourierWindow(n, v);
  }

  /// Zero-filled window on [first, last].
  static BasicFourierWindow zeros(int first, int last) {
    return BasicFourierWindow(first, Vector::Zero(std::max(1, last - first + 1)));
  }

  int lowest() const { return offset; }
  int highest() const { return offset + static_cast<int>(coeffs.size()) - 1; }
  int size() const { return static_cast<int>(coeffs.size()); }

  Scalar operator[](int n) const {
    const int i = n - offset;
    return (i < 0 || i >= coeffs.size()) ? Scalar(0) : coeffs(i);
  }

  Real l2_norm() const { return coeffs.norm(); }
  Real l1_norm() const { return coeffs.cwiseAbs().sum(); }
};

using FourierWindow = BasicFourierWindow<double>;

/// Same function, stored on a (weakly) larger index range.
template <typename Real>
BasicFourierWindow<Real> widen(const BasicFourierWindow<Real>& f, int first, int last) {
  const int lo = std::min(first, f.lowest());
  const int hi = std::max(last, f.highest());
  auto out = BasicFourierWindow<Real>::zeros(lo, hi);
  out.coeffs.segment(f.lowest() - lo, f.size()) = f.coeffs;
  out.tail_bound = f.tail_bound;
  return out;
}

/// Coefficients with index in [first, last].  The discarded stored mass is not
/// added to the tail: this is the orthogonal projection onto those indices,
/// and `tail_bound` stays a bound for the projected function.
template <typename Real>
BasicFourierWindow<Real> restrict_indices(const BasicFourierWindow<Real>& f, int first, int last) {
  if (last < first) throw std::invalid_argument("restrict_indices: empty index range");
  auto out = BasicFourierWindow<Real>::zeros(first, last);
  const int lo = std::max(first, f.lowest());
  const int hi = std::min(last, f.highest());
  if (lo <= hi) out.coeffs.segment(lo - first, hi - lo + 1) = f.coeffs.segment(lo - f.lowest(), hi - lo + 1);
  out.tail_bound = f.tail_bound;
  return out;
}

/// P: keep indices >= 0.
template <typename Real>
BasicFourierWindow<Real> analytic_part(const BasicFourierWindow<Real>& f) {
  return restrict_indices(f, 0, std::max(0, f.highest()));
}

/// P_-: keep indices < 0.
template <typename Real>
BasicFourierWindow<Real> coanalytic_part(const BasicFourierWindow<Real>& f) {
  return restrict_indices(f, std::min(-1, f.lowest()), -1);
}

template <typename Real>
BasicFourierWindow<Real> shift(const BasicFourierWindow<Real>& f, int k) {
  auto out = f;
  out.offset += k;
  return out;
}

template <typename Real>
BasicFourierWindow<Real> scale(const BasicFourierWindow<Real>& f, std::complex<Real> c) {
  return BasicFourierWindow<Real>(f.offset, f.coeffs * c, std::abs(c) * f.tail_bound);
}

template <typename Real>
BasicFourierWindow<Real> add(const BasicFourierWindow<Real>& f, const BasicFourierWindow<Real>& g) {
  const int lo = std::min(f.lowest(), g.lowest());
  const int hi = std::max(f.highest(), g.highest());
  auto out = BasicFourierWindow<Real>::zeros(lo, hi);
  out.coeffs.segment(f.lowest() - lo, f.size()) += f.coeffs;
  out.coeffs.segment(g.lowest() - lo, g.size()) += g.coeffs;
  out.tail_bound = f.tail_bound + g.tail_bound;
  return out;
}

/// Cauchy product.  The tail propagates as |f|_1 t(g) + |g|_1 t(f) + t(f) t(g);
/// the l1 norm of the stored coefficients bounds the sup norm of that part.
template <typename Real>
BasicFourierWindow<Real> window_multiply(const BasicFourierWindow<Real>& f, const BasicFourierWindow<Real>& g) {
  using Vector = typename BasicFourierWindow<Real>::Vector;
  const Eigen::Index n = f.coeffs.size(), m = g.coeffs.size();
  Vector out = Vector::Zero(n + m - 1);
  // Short operand in the outer loop keeps the inner axpy long.
  const auto& a = n <= m ? f.coeffs : g.coeffs;
  const auto& b = n <= m ? g.coeffs : f.coeffs;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) == std::complex<Real>(0)) continue;
    out.segment(i, b.size()) += a(i) * b;
  }
  const Real tail = f.l1_norm() * g.tail_bound + g.l1_norm() * f.tail_bound + f.tail_bound * g.tail_bound;
  return BasicFourierWindow<Real>(f.offset + g.offset, std::move(out), tail);
}

/// f -> conj(f): g^(n) = conj(f^(-n)).
template <typename Real>
BasicFourierWindow<Real> window_conjugate(const BasicFourierWindow<Real>& f) {
  return BasicFourierWindow<Real>(-f.highest(), f.coeffs.reverse().conjugate(), f.tail_bound);
}

/// <f, g> = sum f^(n) conj(g^(n)) over the common support.
template <typename Real>
std::complex<Real> window_inner_product(const BasicFourierWindow<Real>& f, const BasicFourierWindow<Real>& g) {
  const int lo = std::max(f.lowest(), g.lowest());
  const int hi = std::min(f.highest(), g.highest());
  if (lo > hi) return std::complex<Real>(0);
  const int len = hi - lo + 1;
  // Eigen's dot conjugates its first argument.
  return g.coeffs.segment(lo - g.lowest(), len).dot(f.coeffs.segment(lo - f.lowest(), len));
}

/// Bound on |<f_true, g_true> - window_inner_product(f, g)|.
template <typename Real>
Real inner_product_error(const BasicFourierWindow<Real>& f, const BasicFourierWindow<Real>& g) {
  return f.l2_norm() * g.tail_bound + g.l2_norm() * f.tail_bound + f.tail_bound * g.tail_bound;
}

/// Evaluates the stored series at a point; for analytic windows any |z| <= 1 is fine.
template <typename Real>
std::complex<Real> evaluate(const BasicFourierWindow<Real>& f, std::complex<Real> z) {
  if (f.lowest() < 0 && std::abs(z) < Real(1) - Real(1e-15))
    throw std::invalid_argument("evaluate: window has negative indices; point must lie on the circle");
  std::complex<Real> acc(0);
  for (int i = f.size() - 1; i >= 0; --i) acc = acc * z + f.coeffs(i);
  return acc * std::pow(z, f.offset);
}

}  // namespace hardymin
