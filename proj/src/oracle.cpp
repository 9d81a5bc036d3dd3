#include "hardymin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hardymin/linalg.hpp"

namespace hardymin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::optional<std::vector<Complex>> piecewise_values(const SymbolExpr& phi) {
  if (const auto* p = std::get_if<PiecewiseArcs>(&phi.node())) {
    std::vector<Complex> v;
    for (const auto& a : p->arcs)
      if (std::find(v.begin(), v.end(), a.value) == v.end()) v.push_back(a.value);
    return v;
  }
  if (const auto* s = std::get_if<SumWithConstant>(&phi.node())) {
    auto v = piecewise_values(*s->left);
    if (v)
      for (auto& x : *v) x += s->constant;
    return v;
  }
  if (const auto* c = std::get_if<Conjugate>(&phi.node())) {
    auto v = piecewise_values(*c->of);
    if (v)
      for (auto& x : *v) x = std::conj(x);
    return v;
  }
  return std::nullopt;
}

const PiecewiseArcs& arcs_of(const SymbolExpr& phi) {
  if (const auto* s = std::get_if<SumWithConstant>(&phi.node())) return arcs_of(*s->left);
  if (const auto* c = std::get_if<Conjugate>(&phi.node())) return arcs_of(*c->of);
  return std::get<PiecewiseArcs>(phi.node());
}

// Total arc length carrying each value; arcs and values line up in order of first appearance.
std::vector<double> arc_measures(const SymbolExpr& phi, const std::vector<Complex>& values) {
  const auto& arcs = arcs_of(phi).arcs;
  std::vector<Complex> raw;
  for (const auto& a : arcs)
    if (std::find(raw.begin(), raw.end(), a.value) == raw.end()) raw.push_back(a.value);
  std::vector<double> m(values.size(), 0.0);
  for (const auto& a : arcs) {
    const auto i = static_cast<std::size_t>(std::find(raw.begin(), raw.end(), a.value) - raw.begin());
    m[i] += a.from < a.to ? a.to - a.from : kTwoPi - a.from + a.to;
  }
  return m;
}

// Golden section search for a minimum of f on [a, b].
template <typename F>
double golden_min(F&& f, double a, double b) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    if (fc < fd) {
      b = d, d = c, fd = fc;
      c = b - g * (b - a), fc = f(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + g * (b - a), fd = f(d);
    }
  }
  return f(0.5 * (a + b));
}

double periodic_eval(const SymbolExpr& phi, double theta) {
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0) theta += kTwoPi;
  if (theta >= kTwoPi) theta = 0;
  return eval_symbol(phi, theta).real();
}

// Global minimum of a smooth periodic f: best sample, then refinement between its neighbours.
template <typename F>
double periodic_min(F&& f, int resolution) {
  const double h = kTwoPi / resolution;
  int best = 0;
  double fb = INFINITY;
  for (int i = 0; i < resolution; ++i) {
    const double v = f(i * h);
    if (v < fb) fb = v, best = i;
  }
  return std::min(fb, golden_min(f, (best - 1) * h, (best + 1) * h));
}

}  // namespace

std::vector<Complex> rank_one_spectrum(Complex alpha, Complex beta, double x_norm_sq) {
  if (!(x_norm_sq > 0)) throw std::invalid_argument("rank_one_spectrum: |x|^2 must be positive");
  if (beta == Complex(0)) return {alpha};
  return {alpha, alpha + beta * x_norm_sq};
}

double oracle_m_compressed_shift(const BlaschkeProduct& u) {
  if (u.degree() < 1) throw std::invalid_argument("oracle_m_compressed_shift: inner function must be nonconstant");
  const double defect = 1.0 - std::norm(u.at_origin());
  if (defect <= 0) return 1.0;
  double low = INFINITY;
  for (const auto& s : rank_one_spectrum(1.0, -1.0, defect)) low = std::min(low, s.real());
  return std::sqrt(std::max(0.0, low));
}

double oracle_m_dual_shift(const BlaschkeProduct& u) {
  if (u.degree() < 1) throw std::invalid_argument("oracle_m_dual_shift: inner function must be nonconstant");
  if (u.vanishes_at_origin()) return 0.0;
  return std::abs(u.at_origin());
}

std::optional<double> oracle_constant_symbol(const SymbolExpr& phi) {
  if (auto c = as_constant(phi); c && std::abs(std::abs(*c) - 1.0) <= 1e-12) return 1.0;
  return std::nullopt;
}

double oracle_m_b_shift(const BlaschkeProduct& u) {
  if (u.degree() < 1) throw std::invalid_argument("oracle_m_b_shift: inner function must be nonconstant");
  if (u.degree() > 1) return 0.0;
  return std::sqrt(std::max(0.0, 1.0 - std::norm(u.at_origin())));
}

EssRangeModel ess_range(const SymbolExpr& phi, int resolution) {
  if (auto v = piecewise_values(phi)) {
    EssRangeModel m{RangeKind::finite_set, std::move(*v), {}, true};
    m.measures = arc_measures(phi, m.points);
    return m;
  }
  if (resolution < 64) throw std::invalid_argument("ess_range: resolution must be >= 64");
  if (auto c = real_plus_constant(phi)) {
    const Complex shift = *c;
    auto r = [&](double t) { return periodic_eval(phi, t); };
    const double lo = periodic_min(r, resolution);
    const double hi = -periodic_min([&](double t) { return -r(t); }, resolution);
    if (hi - lo == 0) return {RangeKind::finite_set, {shift + lo}, {kTwoPi}, true};
    return {RangeKind::segment, {shift + lo, shift + hi}, {}, true};
  }
  EssRangeModel m{RangeKind::sampled_curve, {}, {}, false};
  m.points.reserve(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) m.points.push_back(eval_symbol(phi, kTwoPi * i / resolution));
  return m;
}

NormalBounds normal_dtto_bounds(const SymbolExpr& phi, int resolution, bool assume_normal) {
  if (!real_plus_constant(phi) && !assume_normal)
    throw UnsupportedSymbol("normal_dtto_bounds: normality of D_phi is not certified for this symbol");
  NormalBounds b;
  b.range = ess_range(phi, resolution);
  if (b.range.kind == RangeKind::segment) {
    const double d = distance_to_segment(b.range.points[0], b.range.points[1], 0.0);
    b.lower = b.upper = d;
    b.exact = d;
    return b;
  }
  b.lower = distance_to_convex_hull(b.range.points, 0.0);
  b.upper = INFINITY;
  for (const auto& p : b.range.points) b.upper = std::min(b.upper, std::abs(p));
  if (b.range.kind == RangeKind::finite_set && b.range.points.size() == 1) b.exact = b.upper;
  return b;
}

NehariNorm nehari_norm(const BlaschkeProduct& u, const SymbolExpr& phi, int size, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("nehari_norm: tol must be positive");
  if (u.degree() < 1) throw std::invalid_argument("nehari_norm: inner function must be nonconstant");
  if (!is_analytic(phi)) throw std::invalid_argument("nehari_norm: symbol must be analytic");
  if (auto inner = as_inner(phi); inner && divides(u, *inner)) return {0.0, true, 0, 0.0};
  const auto uw = inner_window(u, tol);
  const auto w = symbol_to_window(phi, {0, uw.highest() + 1}, tol);
  const auto psi = window_multiply(window_conjugate(uw), w);
  const int n = size > 0 ? size : std::max(1, -psi.lowest());
  const auto h = hankel_matrix(psi, n, n);
  return {largest_singular_value(h.entries), false, n, psi.tail_bound};
}

}  // namespace hardymin
