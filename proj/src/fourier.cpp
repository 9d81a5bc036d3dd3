#include "hardymin/fourier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hardymin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxTaylorLength = 1 << 21;
constexpr int kRadiusGrid = 96;

struct TailPlan {
  int last = 0;  // highest stored Taylor index
  double bound = 0;
};

// log of the sup of the rational factor on |z| = r.
double log_sup_on_circle(double r, const std::vector<double>& zero_moduli, const std::vector<double>& pole_moduli) {
  double s = 0;
  for (double a : zero_moduli) s += std::log((r + a) / (1.0 - a * r));
  for (double p : pole_moduli) s -= std::log(1.0 - p * r);
  return s;
}

// Cauchy estimate |c_n| <= M(r) r^{-n}; the l2 mass past index L is at most
// M(r) r^{-(L+1)} / sqrt(1 - r^{-2}).
double log_tail(double log_scale, double r, int last, const std::vector<double>& zm, const std::vector<double>& pm) {
  return log_scale + log_sup_on_circle(r, zm, pm) - (last + 1.0) * std::log(r) - 0.5 * std::log1p(-1.0 / (r * r));
}

TailPlan plan_tail(double log_scale, const std::vector<double>& zm, const std::vector<double>& pm, double tol,
                   int min_last) {
  double rho = 0;
  for (double a : zm) rho = std::max(rho, a);
  for (double p : pm) rho = std::max(rho, p);
  const double r_max = 1.0 / rho;
  const double log_tol = std::log(tol);

  double best = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kRadiusGrid; ++i) {
    const double r = 1.0 + (r_max - 1.0) * i / kRadiusGrid;
    const double need = (log_scale + log_sup_on_circle(r, zm, pm) - 0.5 * std::log1p(-1.0 / (r * r)) - log_tol) /
                        std::log(r);
    best = std::min(best, std::max(0.0, std::ceil(need) - 1.0));
  }
  if (!(best < kMaxTaylorLength))
    throw std::runtime_error("rational_window: requested tolerance needs more than 2^21 coefficients");
  TailPlan plan;
  plan.last = std::max(static_cast<int>(best), min_last);
  double lt = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kRadiusGrid; ++i) {
    const double r = 1.0 + (r_max - 1.0) * i / kRadiusGrid;
    lt = std::min(lt, log_tail(log_scale, r, plan.last, zm, pm));
  }
  plan.bound = std::exp(lt);
  return plan;
}

}  // namespace

FourierWindow blaschke_factor_coeffs(Complex a, int n_max) {
  const double m = std::abs(a);
  if (!(m < 1.0)) throw std::invalid_argument("blaschke_factor_coeffs: zero must lie in the open unit disc");
  if (n_max < 1) throw std::invalid_argument("blaschke_factor_coeffs: n_max must be >= 1");
  Eigen::VectorXcd c(n_max + 1);
  const double defect = 1.0 - m * m;
  c(0) = -a;
  Complex power = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    c(n) = defect * power;
    power *= std::conj(a);
  }
  return FourierWindow(0, std::move(c), std::sqrt(defect) * std::pow(m, n_max));
}

FourierWindow rational_window(Complex scale, std::span<const Complex> zeros, std::span<const Complex> poles, double tol,
                              int min_last) {
  if (!(tol > 0)) throw std::invalid_argument("rational_window: tol must be positive");
  int origin_zeros = 0;
  std::vector<Complex> nz, np;
  std::vector<double> zm, pm;
  for (const auto& a : zeros) {
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("rational_window: zeros must lie in the open unit disc");
    if (a == Complex(0)) {
      ++origin_zeros;
    } else {
      nz.push_back(a);
      zm.push_back(std::abs(a));
    }
  }
  for (const auto& p : poles) {
    if (!(std::abs(p) < 1.0)) throw std::invalid_argument("rational_window: poles must lie in the open unit disc");
    if (p != Complex(0)) {
      np.push_back(p);
      pm.push_back(std::abs(p));
    }
  }

  if (nz.empty() && np.empty()) {
    auto w = FourierWindow::monomial(origin_zeros, scale);
    return widen(w, 0, std::max(min_last, origin_zeros));
  }

  const auto plan = plan_tail(std::log(std::abs(scale)), zm, pm, tol, std::max(0, min_last - origin_zeros));
  const int len = plan.last + 1;
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(len);
  x(0) = scale;
  // 1/(1 - conj(p) z):  y_n = x_n + conj(p) y_{n-1}
  auto divide = [&](Complex p) {
    const Complex cp = std::conj(p);
    for (int n = 1; n < len; ++n) x(n) += cp * x(n - 1);
  };
  for (const auto& p : np) divide(p);
  for (const auto& a : nz) {
    divide(a);
    // times (z - a)
    for (int n = len - 1; n >= 1; --n) x(n) = x(n - 1) - a * x(n);
    x(0) = -a * x(0);
  }
  FourierWindow w(origin_zeros, std::move(x), plan.bound);
  return widen(w, 0, std::max(min_last, w.highest()));
}

FourierWindow inner_window(const BlaschkeProduct& u, double tol) {
  return rational_window(u.constant(), u.zeros(), {}, tol);
}

Complex piecewise_coefficient(const PiecewiseArcs& p, int n) {
  Complex acc = 0;
  auto piece = [&](double a, double b, Complex v) {
    if (n == 0) {
      acc += v * (b - a) / kTwoPi;
    } else {
      const Complex i(0.0, 1.0);
      acc += v * (std::polar(1.0, -n * a) - std::polar(1.0, -n * b)) / (kTwoPi * i * static_cast<double>(n));
    }
  };
  for (const auto& arc : p.arcs) {
    if (arc.from < arc.to) {
      piece(arc.from, arc.to, arc.value);
    } else {
      piece(arc.from, kTwoPi, arc.value);
      piece(0.0, arc.to, arc.value);
    }
  }
  return acc;
}

namespace {

FourierWindow piecewise_window(const PiecewiseArcs& p, IndexRange range) {
  Eigen::VectorXcd c(range.last - range.first + 1);
  for (int n = range.first; n <= range.last; ++n) c(n - range.first) = piecewise_coefficient(p, n);

  // |phi^(n)| <= J / (2 pi |n|), J the total jump, and sum_{n > N} 1/n^2 < 1/N.
  double jump = 0, energy = 0;
  for (const auto& arc : p.arcs) {
    jump += 2.0 * std::abs(arc.value);
    const double len = arc.from < arc.to ? arc.to - arc.from : kTwoPi - arc.from + arc.to;
    energy += std::norm(arc.value) * len / kTwoPi;
  }
  auto side = [](int covered) { return covered >= 1 ? 1.0 / covered : std::numbers::pi * std::numbers::pi / 6.0; };
  const double sum = side(range.last) + side(-range.first);
  const double tail = std::min(jump / kTwoPi * std::sqrt(sum), std::sqrt(energy));
  return FourierWindow(range.first, std::move(c), tail);
}

}  // namespace

FourierWindow symbol_to_window(const SymbolExpr& phi, IndexRange range, double tol) {
  if (range.last < range.first) throw std::invalid_argument("symbol_to_window: empty index range");
  if (!(tol > 0)) throw std::invalid_argument("symbol_to_window: tol must be positive");

  if (const auto* p = std::get_if<LaurentPoly>(&phi.node())) {
    FourierWindow w(p->offset, p->coeffs);
    return widen(w, range.first, range.last);
  }
  if (const auto* q = std::get_if<BlaschkeQuotient>(&phi.node())) {
    auto w = rational_window(q->constant, q->zeros, {}, tol, range.last - q->z_power);
    return widen(shift(w, q->z_power), range.first, range.last);
  }
  if (const auto* c = std::get_if<Conjugate>(&phi.node())) {
    return window_conjugate(symbol_to_window(*c->of, {-range.last, -range.first}, tol));
  }
  if (const auto* s = std::get_if<SumWithConstant>(&phi.node())) {
    auto w = symbol_to_window(*s->left, {std::min(range.first, 0), std::max(range.last, 0)}, tol);
    w.coeffs(-w.offset) += s->constant;
    return w;
  }
  return piecewise_window(std::get<PiecewiseArcs>(phi.node()), range);
}

}  // namespace hardymin
