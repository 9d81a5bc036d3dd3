#include "hardymin/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hardymin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kUnimodularTol = 1e-12;
constexpr double kAngleTol = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_unimodular(Complex c, const char* what) {
  if (std::abs(std::abs(c) - 1.0) > kUnimodularTol)
    throw std::invalid_argument(std::string(what) + ": constant must have modulus 1");
}

void check_zeros(const std::vector<Complex>& zeros, const char* what) {
  for (const auto& a : zeros)
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument(std::string(what) + ": zeros must lie in the open unit disc");
}

// Splits arcs into plain [from, to) intervals inside [0, 2pi].
std::vector<std::pair<double, double>> unwrap(const std::vector<Arc>& arcs) {
  std::vector<std::pair<double, double>> out;
  for (const auto& a : arcs) {
    if (a.from < 0 || a.from > kTwoPi || a.to < 0 || a.to > kTwoPi)
      throw std::invalid_argument("piecewise symbol: arc endpoints must lie in [0, 2pi]");
    if (a.from < a.to) {
      out.emplace_back(a.from, a.to);
    } else if (a.from > a.to) {
      out.emplace_back(a.from, kTwoPi);
      out.emplace_back(0.0, a.to);
    } else {
      throw std::invalid_argument("piecewise symbol: empty arc");
    }
  }
  return out;
}

void check_arcs(const std::vector<Arc>& arcs) {
  if (arcs.empty()) throw std::invalid_argument("piecewise symbol: no arcs");
  auto pieces = unwrap(arcs);
  std::erase_if(pieces, [](const auto& p) { return p.second - p.first <= kAngleTol; });
  std::sort(pieces.begin(), pieces.end());
  double cursor = 0.0;
  for (const auto& [lo, hi] : pieces) {
    if (std::abs(lo - cursor) > kAngleTol)
      throw std::invalid_argument(lo > cursor ? "piecewise symbol: arcs leave a gap" : "piecewise symbol: arcs overlap");
    cursor = hi;
  }
  if (std::abs(cursor - kTwoPi) > kAngleTol) throw std::invalid_argument("piecewise symbol: arcs do not cover the circle");
}

bool in_arc(const Arc& a, double theta) {
  return a.from < a.to ? (theta >= a.from && theta < a.to) : (theta >= a.from || theta < a.to);
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<Complex> zeros, Complex constant)
    : zeros_(std::move(zeros)), constant_(constant) {
  check_unimodular(constant_, "BlaschkeProduct");
  check_zeros(zeros_, "BlaschkeProduct");
}

BlaschkeProduct BlaschkeProduct::monomial(int n) {
  if (n < 0) throw std::invalid_argument("BlaschkeProduct::monomial: negative power");
  return BlaschkeProduct(std::vector<Complex>(static_cast<std::size_t>(n), Complex(0)));
}

Complex blaschke_factor(Complex a, Complex z) { return (z - a) / (1.0 - std::conj(a) * z); }

Complex BlaschkeProduct::operator()(Complex z) const {
  Complex v = constant_;
  for (const auto& a : zeros_) v *= blaschke_factor(a, z);
  return v;
}

Complex BlaschkeProduct::at_origin() const {
  Complex v = constant_;
  for (const auto& a : zeros_) v *= -a;
  return v;
}

bool BlaschkeProduct::vanishes_at_origin() const {
  return std::any_of(zeros_.begin(), zeros_.end(), [](Complex a) { return a == Complex(0); });
}

SymbolExpr::SymbolExpr(Node node) : node_(std::move(node)) {
  std::visit(overloaded{
                 [](const LaurentPoly& p) {
                   if (p.coeffs.size() == 0) throw std::invalid_argument("laurent symbol: no coefficients");
                 },
                 [](const BlaschkeQuotient& q) {
                   check_unimodular(q.constant, "blaschke_quotient");
                   check_zeros(q.zeros, "blaschke_quotient");
                 },
                 [](const Conjugate& c) {
                   if (!c.of) throw std::invalid_argument("conjugate symbol: missing operand");
                 },
                 [](const SumWithConstant& s) {
                   if (!s.left) throw std::invalid_argument("sum symbol: missing operand");
                 },
                 [](const PiecewiseArcs& p) { check_arcs(p.arcs); },
             },
             node_);
}

SymbolExpr SymbolExpr::laurent(int offset, Eigen::VectorXcd coeffs) { return SymbolExpr(LaurentPoly{offset, std::move(coeffs)}); }

SymbolExpr SymbolExpr::monomial(int n, Complex c) {
  Eigen::VectorXcd v(1);
  v(0) = c;
  return laurent(n, v);
}

SymbolExpr SymbolExpr::constant(Complex c) { return monomial(0, c); }

SymbolExpr SymbolExpr::blaschke(Complex constant, int z_power, std::vector<Complex> zeros) {
  return SymbolExpr(BlaschkeQuotient{constant, z_power, std::move(zeros)});
}

SymbolExpr SymbolExpr::inner(const BlaschkeProduct& u) { return blaschke(u.constant(), 0, u.zeros()); }

SymbolExpr SymbolExpr::conjugate(SymbolExpr of) { return SymbolExpr(Conjugate{std::make_shared<const SymbolExpr>(std::move(of))}); }

SymbolExpr SymbolExpr::plus(SymbolExpr left, Complex c) {
  return SymbolExpr(SumWithConstant{std::make_shared<const SymbolExpr>(std::move(left)), c});
}

SymbolExpr SymbolExpr::piecewise(std::vector<Arc> arcs) { return SymbolExpr(PiecewiseArcs{std::move(arcs)}); }

Complex eval_symbol(const SymbolExpr& phi, double theta) {
  if (!(theta >= 0.0 && theta < kTwoPi)) throw std::invalid_argument("eval_symbol: angle must lie in [0, 2pi)");
  const Complex z = std::polar(1.0, theta);
  return std::visit(overloaded{
                        [&](const LaurentPoly& p) {
                          Complex acc = 0;
                          for (Eigen::Index i = p.coeffs.size() - 1; i >= 0; --i) acc = acc * z + p.coeffs(i);
                          return acc * std::polar(1.0, p.offset * theta);
                        },
                        [&](const BlaschkeQuotient& q) {
                          Complex v = q.constant * std::polar(1.0, q.z_power * theta);
                          for (const auto& a : q.zeros) v *= blaschke_factor(a, z);
                          return v;
                        },
                        [&](const Conjugate& c) { return std::conj(eval_symbol(*c.of, theta)); },
                        [&](const SumWithConstant& s) { return eval_symbol(*s.left, theta) + s.constant; },
                        [&](const PiecewiseArcs& p) {
                          for (const auto& a : p.arcs) {
                            const double d0 = std::min(std::abs(theta - a.from), kTwoPi - std::abs(theta - a.from));
                            const double d1 = std::min(std::abs(theta - a.to), kTwoPi - std::abs(theta - a.to));
                            if (d0 < kAngleTol || d1 < kAngleTol)
                              throw std::invalid_argument("eval_symbol: angle is an arc endpoint (value undefined)");
                          }
                          for (const auto& a : p.arcs)
                            if (in_arc(a, theta)) return a.value;
                          throw std::logic_error("eval_symbol: arcs do not cover the angle");
                        },
                    },
                    phi.node());
}

std::optional<Complex> as_constant(const SymbolExpr& phi) {
  return std::visit(overloaded{
                        [](const LaurentPoly& p) -> std::optional<Complex> {
                          Complex c = 0;
                          for (Eigen::Index i = 0; i < p.coeffs.size(); ++i) {
                            if (p.offset + i == 0)
                              c = p.coeffs(i);
                            else if (p.coeffs(i) != Complex(0))
                              return std::nullopt;
                          }
                          return c;
                        },
                        [](const BlaschkeQuotient& q) -> std::optional<Complex> {
                          if (q.z_power == 0 && q.zeros.empty()) return q.constant;
                          return std::nullopt;
                        },
                        [](const Conjugate& c) -> std::optional<Complex> {
                          auto v = as_constant(*c.of);
                          if (v) return std::conj(*v);
                          return std::nullopt;
                        },
                        [](const SumWithConstant& s) -> std::optional<Complex> {
                          auto v = as_constant(*s.left);
                          if (v) return *v + s.constant;
                          return std::nullopt;
                        },
                        [](const PiecewiseArcs& p) -> std::optional<Complex> {
                          for (const auto& a : p.arcs)
                            if (a.value != p.arcs.front().value) return std::nullopt;
                          return p.arcs.front().value;
                        },
                    },
                    phi.node());
}

std::optional<std::pair<Complex, int>> as_monomial(const SymbolExpr& phi) {
  return std::visit(overloaded{
                        [](const LaurentPoly& p) -> std::optional<std::pair<Complex, int>> {
                          std::optional<std::pair<Complex, int>> hit;
                          for (Eigen::Index i = 0; i < p.coeffs.size(); ++i) {
                            if (p.coeffs(i) == Complex(0)) continue;
                            if (hit) return std::nullopt;
                            hit = std::pair{p.coeffs(i), static_cast<int>(p.offset + i)};
                          }
                          return hit ? hit : std::pair{Complex(0), 0};
                        },
                        [](const BlaschkeQuotient& q) -> std::optional<std::pair<Complex, int>> {
                          int power = q.z_power;
                          for (const auto& a : q.zeros) {
                            if (a != Complex(0)) return std::nullopt;
                            ++power;
                          }
                          return std::pair{q.constant, power};
                        },
                        [](const Conjugate& c) -> std::optional<std::pair<Complex, int>> {
                          auto m = as_monomial(*c.of);
                          if (m) return std::pair{std::conj(m->first), -m->second};
                          return std::nullopt;
                        },
                        [&](const SumWithConstant& s) -> std::optional<std::pair<Complex, int>> {
                          if (s.constant == Complex(0)) return as_monomial(*s.left);
                          auto c = as_constant(phi);
                          if (c) return std::pair{*c, 0};
                          return std::nullopt;
                        },
                        [&](const PiecewiseArcs&) -> std::optional<std::pair<Complex, int>> {
                          auto c = as_constant(phi);
                          if (c) return std::pair{*c, 0};
                          return std::nullopt;
                        },
                    },
                    phi.node());
}

bool is_unimodular(const SymbolExpr& phi) {
  if (auto c = as_constant(phi)) return std::abs(std::abs(*c) - 1.0) <= kUnimodularTol;
  return std::visit(overloaded{
                        [&](const LaurentPoly&) {
                          auto m = as_monomial(phi);
                          return m && std::abs(std::abs(m->first) - 1.0) <= kUnimodularTol;
                        },
                        [](const BlaschkeQuotient&) { return true; },
                        [](const Conjugate& c) { return is_unimodular(*c.of); },
                        [](const SumWithConstant& s) { return s.constant == Complex(0) && is_unimodular(*s.left); },
                        [](const PiecewiseArcs& p) {
                          return std::all_of(p.arcs.begin(), p.arcs.end(), [](const Arc& a) {
                            return std::abs(std::abs(a.value) - 1.0) <= kUnimodularTol;
                          });
                        },
                    },
                    phi.node());
}

bool is_analytic(const SymbolExpr& phi) {
  if (as_constant(phi)) return true;
  return std::visit(overloaded{
                        [](const LaurentPoly& p) {
                          for (Eigen::Index i = 0; i < p.coeffs.size(); ++i)
                            if (p.offset + i < 0 && p.coeffs(i) != Complex(0)) return false;
                          return true;
                        },
                        [](const BlaschkeQuotient& q) { return q.z_power >= 0; },
                        [&](const Conjugate&) {
                          auto m = as_monomial(phi);
                          return m && m->second >= 0;
                        },
                        [](const SumWithConstant& s) { return is_analytic(*s.left); },
                        [](const PiecewiseArcs&) { return false; },
                    },
                    phi.node());
}

bool is_piecewise(const SymbolExpr& phi) {
  return std::visit(overloaded{
                        [](const PiecewiseArcs&) { return true; },
                        [](const Conjugate& c) { return is_piecewise(*c.of); },
                        [](const SumWithConstant& s) { return is_piecewise(*s.left); },
                        [](const auto&) { return false; },
                    },
                    phi.node());
}

std::optional<BlaschkeProduct> as_inner(const SymbolExpr& phi) {
  if (const auto* q = std::get_if<BlaschkeQuotient>(&phi.node()); q && q->z_power >= 0) {
    auto zeros = q->zeros;
    zeros.insert(zeros.end(), static_cast<std::size_t>(q->z_power), Complex(0));
    return BlaschkeProduct(std::move(zeros), q->constant);
  }
  auto m = as_monomial(phi);
  if (m && m->second >= 1 && std::abs(std::abs(m->first) - 1.0) <= kUnimodularTol)
    return BlaschkeProduct(std::vector<Complex>(static_cast<std::size_t>(m->second), Complex(0)),
                           m->first / std::abs(m->first));
  return std::nullopt;
}

std::optional<Complex> real_plus_constant(const SymbolExpr& phi) {
  constexpr double tol = 1e-14;
  return std::visit(overloaded{
                        [](const LaurentPoly& p) -> std::optional<Complex> {
                          const int lo = p.offset;
                          const int hi = p.offset + static_cast<int>(p.coeffs.size()) - 1;
                          auto at = [&](int n) { return (n < lo || n > hi) ? Complex(0) : p.coeffs(n - lo); };
                          const int reach = std::max(std::abs(lo), std::abs(hi));
                          for (int n = 1; n <= reach; ++n)
                            if (std::abs(at(-n) - std::conj(at(n))) > tol) return std::nullopt;
                          return Complex(0.0, at(0).imag());
                        },
                        [&](const BlaschkeQuotient&) -> std::optional<Complex> {
                          if (auto c = as_constant(phi)) return Complex(0.0, c->imag());
                          return std::nullopt;
                        },
                        [](const Conjugate& c) -> std::optional<Complex> {
                          auto v = real_plus_constant(*c.of);
                          if (v) return std::conj(*v);
                          return std::nullopt;
                        },
                        [](const SumWithConstant& s) -> std::optional<Complex> {
                          auto v = real_plus_constant(*s.left);
                          if (v) return Complex(0.0, v->imag() + s.constant.imag());
                          return std::nullopt;
                        },
                        [](const PiecewiseArcs& p) -> std::optional<Complex> {
                          const double im = p.arcs.front().value.imag();
                          for (const auto& a : p.arcs)
                            if (std::abs(a.value.imag() - im) > tol) return std::nullopt;
                          return Complex(0.0, im);
                        },
                    },
                    phi.node());
}

double sup_bound(const SymbolExpr& phi) {
  return std::visit(overloaded{
                        [](const LaurentPoly& p) { return p.coeffs.cwiseAbs().sum(); },
                        [](const BlaschkeQuotient&) { return 1.0; },
                        [](const Conjugate& c) { return sup_bound(*c.of); },
                        [](const SumWithConstant& s) { return sup_bound(*s.left) + std::abs(s.constant); },
                        [](const PiecewiseArcs& p) {
                          double m = 0;
                          for (const auto& a : p.arcs) m = std::max(m, std::abs(a.value));
                          return m;
                        },
                    },
                    phi.node());
}

SymbolExpr conj(const SymbolExpr& phi) {
  if (const auto* c = std::get_if<Conjugate>(&phi.node())) return *c->of;
  if (const auto* p = std::get_if<LaurentPoly>(&phi.node())) {
    const int hi = p->offset + static_cast<int>(p->coeffs.size()) - 1;
    return SymbolExpr::laurent(-hi, p->coeffs.reverse().conjugate());
  }
  if (const auto* p = std::get_if<PiecewiseArcs>(&phi.node())) {
    // conj(phi)(e^{it}) = conj(phi(e^{it})): same arcs, conjugated values.
    auto arcs = p->arcs;
    for (auto& a : arcs) a.value = std::conj(a.value);
    return SymbolExpr::piecewise(std::move(arcs));
  }
  if (const auto* s = std::get_if<SumWithConstant>(&phi.node())) return SymbolExpr::plus(conj(*s->left), std::conj(s->constant));
  return SymbolExpr::conjugate(phi);
}

bool divides(const BlaschkeProduct& u, const BlaschkeProduct& phi, double tol) {
  std::vector<Complex> pool = phi.zeros();
  for (const auto& a : u.zeros()) {
    auto it = std::find_if(pool.begin(), pool.end(), [&](Complex b) { return std::abs(a - b) <= tol; });
    if (it == pool.end()) return false;
    pool.erase(it);
  }
  return true;
}

}  // namespace hardymin
