#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace hardymin {

using Complex = std::complex<double>;

/// Finite Blaschke product  c * prod_i (z - a_i) / (1 - conj(a_i) z),  |c| = 1, |a_i| < 1.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  explicit BlaschkeProduct(std::vector<Complex> zeros, Complex constant = 1.0);

  /// z^n.
  static BlaschkeProduct monomial(int n);

  const std::vector<Complex>& zeros() const { return zeros_; }
  Complex constant() const { return constant_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

  Complex operator()(Complex z) const;
  Complex at_origin() const;
  bool vanishes_at_origin() const;

 private:
  std::vector<Complex> zeros_;
  Complex constant_ = 1.0;
};

/// b_a(z) = (z - a) / (1 - conj(a) z).
Complex blaschke_factor(Complex a, Complex z);

class SymbolExpr;
using SymbolPtr = std::shared_ptr<const SymbolExpr>;

struct LaurentPoly {
  int offset = 0;
  Eigen::VectorXcd coeffs;
};

/// c * z^m * prod_i b_{a_i}(z); unimodular on the circle.
struct BlaschkeQuotient {
  Complex constant = 1.0;
  int z_power = 0;
  std::vector<Complex> zeros;
};

struct Conjugate {
  SymbolPtr of;
};

struct SumWithConstant {
  SymbolPtr left;
  Complex constant;
};

/// Arc [from, to) of angles; from > to wraps through 0.
struct Arc {
  double from = 0;
  double to = 0;
  Complex value;
};

struct PiecewiseArcs {
  std::vector<Arc> arcs;
};

/// A bounded symbol on the unit circle.
class SymbolExpr {
 public:
  using Node = std::variant<LaurentPoly, BlaschkeQuotient, Conjugate, SumWithConstant, PiecewiseArcs>;

  explicit SymbolExpr(Node node);

  static SymbolExpr laurent(int offset, Eigen::VectorXcd coeffs);
  static SymbolExpr monomial(int n, Complex c = 1.0);
  static SymbolExpr constant(Complex c);
  static SymbolExpr blaschke(Complex constant, int z_power, std::vector<Complex> zeros);
  static SymbolExpr inner(const BlaschkeProduct& u);
  static SymbolExpr conjugate(SymbolExpr of);
  static SymbolExpr plus(SymbolExpr left, Complex c);
  static SymbolExpr piecewise(std::vector<Arc> arcs);

  const Node& node() const { return node_; }

 private:
  Node node_;
};

/// phi(e^{i theta}); theta in [0, 2pi).  Throws at arc endpoints of piecewise symbols.
Complex eval_symbol(const SymbolExpr& phi, double theta);

/// Structural classification.  None of these sample the symbol.
bool is_unimodular(const SymbolExpr& phi);
bool is_analytic(const SymbolExpr& phi);
bool is_piecewise(const SymbolExpr& phi);
/// Nonconjugated Blaschke quotient with z_power >= 0, i.e. a finite Blaschke product.
std::optional<BlaschkeProduct> as_inner(const SymbolExpr& phi);
std::optional<Complex> as_constant(const SymbolExpr& phi);
/// (c, n) when phi == c z^n.
std::optional<std::pair<Complex, int>> as_monomial(const SymbolExpr& phi);
/// phi == r + c with r real-valued a.e.; returns c (the part that is not real).
std::optional<Complex> real_plus_constant(const SymbolExpr& phi);
/// Upper bound on ||phi||_inf.
double sup_bound(const SymbolExpr& phi);
/// The symbol conj(phi), simplified one level.
SymbolExpr conj(const SymbolExpr& phi);

/// u divides phi in H^inf: every zero of u (with multiplicity) is a zero of phi.
bool divides(const BlaschkeProduct& u, const BlaschkeProduct& phi, double tol = 1e-12);

}  // namespace hardymin
