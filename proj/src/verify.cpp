#include "hardymin/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "hardymin/linalg.hpp"
#include "hardymin/minmod.hpp"
#include "hardymin/oracle.hpp"

namespace hardymin {

namespace {

constexpr double kTol = 1e-12;
constexpr double kPi = std::numbers::pi;

using Checks = std::vector<VerifyCheck>;

struct CatalogEntry {
  std::string name;
  double tolerance;
  std::function<Checks()> run;
};

BlaschkeProduct bp(std::vector<Complex> zeros) { return BlaschkeProduct(std::move(zeros)); }

std::vector<BlaschkeProduct> sample_inner() {
  return {bp({0.5}), bp({0.3, 0.6}), BlaschkeProduct::monomial(2), bp({0.0, 0.0, 0.0, 0.4}),
          bp({{0.2, 0.5}, -0.7}), bp({{-0.1, 0.8}, {0.6, -0.6}, 0.35})};
}

std::string describe(const BlaschkeProduct& u) { return "deg " + std::to_string(u.degree()) + ", |u(0)| " + std::to_string(std::abs(u.at_origin())); }

SymbolExpr step_symbol() { return SymbolExpr::piecewise({{0.0, kPi, 1.0}, {kPi, 2 * kPi, -1.0}}); }

Eigen::VectorXcd coeffs(std::initializer_list<Complex> c) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (auto x : c) v(i++) = x;
  return v;
}

// sqrt(1 - lambda_max) of the form alpha^2 |c1|^2 + alpha^2 (1 - alpha^2) |c0 + alpha c1|^2.
double blaschke_example_value(double a) {
  const double k = a * a * (1 - a * a);
  const double p = k, q = k * a, r = k * a * a + a * a;
  const double lmax = 0.5 * (p + r) + std::sqrt(0.25 * (p - r) * (p - r) + q * q);
  return std::sqrt(1 - lmax);
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"compressed_shift_min_modulus", 1e-9, [] {
                 Checks out;
                 for (const auto& u : sample_inner())
                   out.push_back({describe(u), sigma_min(compressed_shift(tm_basis(u, kTol))), std::abs(u.at_origin())});
                 return out;
               }});
  c.push_back({"compressed_shift_adjoint_min_modulus", 1e-9, [] {
                 Checks out;
                 for (const auto& u : sample_inner())
                   out.push_back({describe(u), sigma_min(compressed_shift(tm_basis(u, kTol)).adjoint()), std::abs(u.at_origin())});
                 return out;
               }});
  c.push_back({"rank_one_defect_spectrum", 1e-14, [] {
                 const double u0 = 0.5;
                 const auto s = rank_one_spectrum(1.0, -1.0, 1 - u0 * u0);
                 return Checks{{"alpha", s.at(0).real(), 1.0}, {"alpha + beta |x|^2", s.at(1).real(), u0 * u0}};
               }});
  c.push_back({"dual_shift_min_modulus", 1e-9, [] {
                 Checks out;
                 for (const auto& u : {BlaschkeProduct::monomial(2), bp({0.5}), bp({0.3, 0.6})}) {
                   const double expected = u.vanishes_at_origin() ? 0.0 : std::abs(u.at_origin());
                   const auto z = SymbolExpr::monomial(1);
                   out.push_back({"sweep N=64, " + describe(u), galerkin_sweep(u, z, {64}, kTol).front().value, expected});
                   out.push_back({"finite, " + describe(u), min_modulus_unimodular(u, z, kTol).value, expected});
                 }
                 return out;
               }});
  c.push_back({"shift_symbol_on_z_squared", 1e-12, [] {
                 const auto u = BlaschkeProduct::monomial(2);
                 const auto z = SymbolExpr::monomial(1);
                 return Checks{{"via truncated Toeplitz", min_modulus_unimodular(u, z, kTol).value, 0.0},
                               {"via Toeplitz and Hankel images", min_modulus_toeplitz_hankel(u, z, kTol).value, 0.0}};
               }});
  c.push_back({"blaschke_quotient_example", 1e-9, [] {
                 Checks out;
                 const auto u = BlaschkeProduct::monomial(2);
                 for (double a : {0.25, 0.5, 0.75}) {
                   const auto phi = SymbolExpr::blaschke(1.0, -1, {a});
                   const auto label = "alpha " + std::to_string(a);
                   out.push_back({label + " images", min_modulus_toeplitz_hankel(u, phi, kTol).value, blaschke_example_value(a)});
                   out.push_back({label + " truncated Toeplitz", min_modulus_unimodular(u, phi, kTol).value, blaschke_example_value(a)});
                 }
                 return out;
               }});
  c.push_back({"symbol_divisible_by_u", 1e-10, [] {
                 Checks out;
                 for (const auto& u : sample_inner()) {
                   const auto phi = SymbolExpr::inner(u);
                   out.push_back({"finite, " + describe(u), min_modulus_unimodular(u, phi, kTol).value, 0.0});
                   out.push_back({"inner symbol, " + describe(u), min_modulus_inner_symbol(u, phi, kTol).value, 0.0});
                 }
                 return out;
               }});
  c.push_back({"unimodular_constant_symbol", 1e-10, [] {
                 const auto u = bp({0.5, -0.2});
                 const auto phi = SymbolExpr::constant({0.0, 1.0});
                 return Checks{{"finite", min_modulus_unimodular(u, phi, kTol).value, 1.0},
                               {"images", min_modulus_toeplitz_hankel(u, phi, kTol).value, 1.0}};
               }});
  c.push_back({"step_plus_3i_bounds", 1e-12, [] {
                 const auto b = normal_dtto_bounds(SymbolExpr::plus(step_symbol(), {0.0, 3.0}));
                 return Checks{{"lower", b.lower, 3.0}, {"upper", b.upper, std::sqrt(10.0)}};
               }});
  c.push_back({"cosine_plus_2i_exact", 1e-10, [] {
                 const auto b = normal_dtto_bounds(SymbolExpr::laurent(-1, coeffs({1.0, {0.0, 2.0}, 1.0})));
                 return Checks{{"exact", b.exact.value_or(NAN), 2.0}, {"lower", b.lower, 2.0}, {"upper", b.upper, 2.0}};
               }});
  c.push_back({"positive_real_symbol", 1e-10, [] {
                 const auto b = normal_dtto_bounds(SymbolExpr::laurent(-1, coeffs({1.0, 3.0, 1.0})));
                 return Checks{{"lower", b.lower, 1.0}, {"upper", b.upper, 1.0}};
               }});
  c.push_back({"b_operator_shift_symbol", 1e-10, [] {
                 Checks out;
                 const auto z = SymbolExpr::monomial(1);
                 for (const auto& u : {bp({0.3, -0.5}), bp({0.0, 0.4, {0.1, 0.6}}), bp({0.2, 0.2, -0.7, {0.0, 0.5}})})
                   out.push_back({describe(u), min_modulus_b_operator(u, z, kTol).value, 0.0});
                 for (double l : {0.2, 0.7})
                   out.push_back({"b_" + std::to_string(l), min_modulus_b_operator(bp({l}), z, kTol).value, std::sqrt(1 - l * l)});
                 return out;
               }});
  c.push_back({"b_and_a_shift_pythagoras", 1e-10, [] {
                 Checks out;
                 const auto z = SymbolExpr::monomial(1);
                 for (double l : {0.2, 0.7}) {
                   const auto u = bp({l});
                   const double b = min_modulus_b_operator(u, z, kTol).value;
                   const double a = sigma_min(compressed_shift(tm_basis(u, kTol)));
                   out.push_back({"b_" + std::to_string(l), b * b + a * a, 1.0});
                 }
                 return out;
               }});
  c.push_back({"hankel_norm_of_truncated_toeplitz", 1e-9, [] {
                 const auto u = bp({0.4});
                 const auto u2 = bp({0.3, {0.1, -0.5}});
                 return Checks{{"phi = u", nehari_norm(u2, SymbolExpr::inner(u2), 0, kTol).value, 0.0},
                               {"u = b_0.4, phi = z", nehari_norm(u, SymbolExpr::monomial(1), 0, kTol).value, 0.4}};
               }});
  c.push_back({"coanalytic_symbol", 1e-9, [] {
                 const auto u = bp({0.5, -0.3});
                 const auto phi = SymbolExpr::conjugate(SymbolExpr::blaschke(1.0, 0, {0.2}));
                 const auto b = min_modulus_bounds(u, phi, kTol);
                 return Checks{{"value", min_modulus_toeplitz_hankel(u, phi, kTol).value, std::sqrt(1 - b.toeplitz_norm_sq)},
                               {"hankel upper bound", std::sqrt(1 - b.hankel_norm_sq), 1.0}};
               }});
  c.push_back({"reduced_min_modulus_of_dual_shift", 1e-10, [] {
                 const auto q = dtto_columns(BlaschkeProduct::monomial(2), SymbolExpr::monomial(1), 16, kTol);
                 const auto r = reduced_min_modulus(q);
                 return Checks{{"gamma", r.value, 1.0}, {"sigma_min", sigma_min(q), 0.0}};
               }});
  return c;
}

}  // namespace

double VerifyItem::discrepancy() const {
  double d = 0;
  for (const auto& c : checks) d = std::max(d, std::isfinite(c.computed) ? std::abs(c.computed - c.expected) : INFINITY);
  return d;
}

bool VerifyItem::passed() const { return !checks.empty() && discrepancy() <= tolerance; }

std::size_t VerifySummary::failures() const {
  std::size_t n = 0;
  for (const auto& i : items) n += !i.passed();
  return n;
}

bool VerifySummary::passed() const { return !items.empty() && failures() == 0; }

std::vector<std::string> verify_item_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.push_back(e.name);
  return out;
}

VerifySummary run_verify(const VerifyOptions& opts) {
  const auto entries = catalog();
  if (opts.perturb) {
    bool known = false;
    for (const auto& e : entries) known = known || e.name == *opts.perturb;
    if (!known) throw std::invalid_argument("verify: unknown item '" + *opts.perturb + "'");
  }
  VerifySummary s;
  for (const auto& e : entries) {
    VerifyItem item{e.name, e.tolerance, {}};
    try {
      item.checks = e.run();
    } catch (const std::exception& ex) {
      item.checks = {{std::string("error: ") + ex.what(), NAN, 0.0}};
    }
    if (opts.perturb && *opts.perturb == e.name)
      for (auto& c : item.checks) c.expected += opts.perturbation;
    s.items.push_back(std::move(item));
  }
  return s;
}

}  // namespace hardymin
