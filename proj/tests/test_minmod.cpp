#include <gtest/gtest.h>

#include <cstdlib>

#include "generators.hpp"
#include "hardymin/linalg.hpp"
#include "hardymin/minmod.hpp"

using namespace hardymin;
using hardymin::testing::random_blaschke;
using hardymin::testing::random_matrix;

namespace {

OperatorMatrix wrap(Eigen::MatrixXcd m) { return {std::move(m), {}, {}, 0.0}; }

// Largest root of the characteristic polynomial of a real symmetric 2x2 matrix.
double largest_eigenvalue_2x2(double a, double b, double d) {
  const double tr = a + d, det = a * d - b * b;
  return 0.5 * (tr + std::sqrt(tr * tr - 4 * det));
}

double blaschke_example_oracle(double alpha) {
  const double k = alpha * alpha * (1 - alpha * alpha);
  return std::sqrt(1 - largest_eigenvalue_2x2(k, k * alpha, k * alpha * alpha + alpha * alpha));
}

Eigen::MatrixXcd random_unitary_matrix(int n) {
  return random_unitary<Complex>(n, [] { return hardymin::testing::gaussian_complex(); });
}

}  // namespace

TEST(SigmaMin, TrivialMatrices) {
  EXPECT_NEAR(sigma_min(wrap(Eigen::MatrixXcd::Identity(5, 5))), 1.0, 1e-15);
  Eigen::MatrixXcd m = random_matrix(4, 4);
  m.col(2).setZero();
  EXPECT_NEAR(sigma_min(wrap(m)), 0.0, 1e-14);
  EXPECT_THROW(sigma_min(wrap(Eigen::MatrixXcd(0, 0))), std::invalid_argument);
}

TEST(SigmaMin, UnitaryInvariance) {
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix(6, 6);
    const auto v = random_unitary_matrix(6), w = random_unitary_matrix(6);
    EXPECT_NEAR(sigma_min(wrap(v * m * w)), sigma_min(wrap(m)), 1e-10);
  }
}

TEST(SigmaMin, WideMatrixHasKernel) { EXPECT_EQ(sigma_min(wrap(random_matrix(2, 3))), 0.0); }

TEST(UnimodularRoute, ShiftSymbolOnZSquaredIsZero) {
  const auto u = BlaschkeProduct::monomial(2);
  EXPECT_EQ(min_modulus_unimodular(u, SymbolExpr::monomial(1), 1e-12).value, 0.0);
  EXPECT_EQ(min_modulus_toeplitz_hankel(u, SymbolExpr::monomial(1), 1e-12).value, 0.0);
}

TEST(UnimodularRoute, BlaschkeQuotientExample) {
  const auto u = BlaschkeProduct::monomial(2);
  for (double alpha : {0.25, 0.5, 0.75}) {
    const auto phi = SymbolExpr::blaschke(1.0, -1, {alpha});
    EXPECT_NEAR(min_modulus_toeplitz_hankel(u, phi, 1e-13).value, blaschke_example_oracle(alpha), 1e-9);
    EXPECT_NEAR(min_modulus_unimodular(u, phi, 1e-13).value, blaschke_example_oracle(alpha), 1e-9);
  }
}

TEST(UnimodularRoute, ConstantSymbolGivesOne) {
  const auto r = min_modulus_unimodular(random_blaschke(), SymbolExpr::constant(Complex(0.6, 0.8)), 1e-12);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  ASSERT_TRUE(r.oracle_value);
  EXPECT_NEAR(*r.discrepancy, 0.0, 1e-12);
}

TEST(UnimodularRoute, DualRoutesAgree) {
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_blaschke(1, 5);
    const auto phi = trial % 2 ? SymbolExpr::inner(random_blaschke(1, 4))
                               : SymbolExpr::conjugate(SymbolExpr::inner(random_blaschke(1, 3)));
    const auto a = min_modulus_unimodular(u, phi, 1e-13);
    const auto b = min_modulus_toeplitz_hankel(u, phi, 1e-13);
    EXPECT_NEAR(a.value, b.value, 1e-7 + a.entry_error_bound + b.entry_error_bound);
  }
}

TEST(UnimodularRoute, BoundsBracketExactValue) {
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_blaschke(1, 5);
    const auto phi = SymbolExpr::blaschke(std::polar(1.0, 0.3 * trial), trial % 3 - 1, random_blaschke(1, 3).zeros());
    const auto exact = min_modulus_unimodular(u, phi, 1e-13).value;
    const auto b = min_modulus_bounds(u, phi, 1e-13);
    EXPECT_LE(b.lower, exact + 1e-9);
    EXPECT_GE(b.upper, exact - 1e-9);
  }
}

TEST(UnimodularRoute, BoundsOnShiftExample) {
  const auto b = min_modulus_bounds(BlaschkeProduct::monomial(2), SymbolExpr::monomial(1), 1e-12);
  EXPECT_EQ(b.lower, 0.0);
  EXPECT_EQ(b.upper, 0.0);
}

TEST(UnimodularRoute, CoanalyticSymbolUsesToeplitzTermOnly) {
  const auto u = random_blaschke(2, 4);
  const auto phi = SymbolExpr::conjugate(SymbolExpr::inner(random_blaschke(1, 3)));
  const auto b = min_modulus_bounds(u, phi, 1e-13);
  EXPECT_NEAR(b.hankel_norm_sq, 0.0, 1e-20);
  EXPECT_NEAR(min_modulus_unimodular(u, phi, 1e-13).value, std::sqrt(1 - b.toeplitz_norm_sq), 1e-9);
}

TEST(UnimodularRoute, RejectsNonUnimodular) {
  const auto phi = SymbolExpr::monomial(1, 2.0);
  EXPECT_THROW(min_modulus_unimodular(BlaschkeProduct({0.5}), phi, 1e-9), std::invalid_argument);
  EXPECT_THROW(min_modulus_toeplitz_hankel(BlaschkeProduct({0.5}), phi, 1e-9), std::invalid_argument);
  EXPECT_THROW(min_modulus_unimodular(BlaschkeProduct(std::vector<Complex>{}), SymbolExpr::monomial(1), 1e-9), std::invalid_argument);
}

TEST(BOperator, ShiftSymbol) {
  for (int d : {2, 3, 4}) {
    const auto r = min_modulus_b_operator(random_blaschke(d, d), SymbolExpr::monomial(1), 1e-13);
    EXPECT_NEAR(r.value, 0.0, 1e-10);
    EXPECT_EQ(r.quantity, "m(B_phi)");
  }
  for (double l : {0.2, 0.7}) {
    const auto u = BlaschkeProduct({l});
    const double b = min_modulus_b_operator(u, SymbolExpr::monomial(1), 1e-13).value;
    EXPECT_NEAR(b, std::sqrt(1 - l * l), 1e-10);
    const double a = sigma_min(compressed_shift(tm_basis(u, 1e-13)));
    EXPECT_NEAR(a * a + b * b, 1.0, 1e-10);
  }
}

TEST(BOperator, RoutesAgreeForInnerSymbols) {
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = min_modulus_b_operator(random_blaschke(1, 4), SymbolExpr::inner(random_blaschke(1, 3)), 1e-13);
    ASSERT_EQ(r.checks.size(), 2u);
    for (const auto& [name, v] : r.checks) EXPECT_NEAR(v, r.value, 1e-7) << name;
  }
}

TEST(BOperator, RejectsOtherSymbols) {
  Eigen::VectorXcd c(3);
  c << 1.0, 0.3, 1.0;
  EXPECT_THROW(min_modulus_b_operator(BlaschkeProduct({0.5}), SymbolExpr::laurent(-1, c), 1e-9), UnsupportedSymbol);
}

TEST(InnerSymbol, DivisibleSymbolGivesZeroWithCertificate) {
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = random_blaschke(1, 5);
    const auto r = min_modulus_inner_symbol(u, SymbolExpr::inner(u), 1e-13);
    EXPECT_EQ(r.value, 0.0);
    ASSERT_FALSE(r.notes.empty());
    EXPECT_NEAR(r.checks.at(0).second, 0.0, 1e-10);
  }
}

TEST(InnerSymbol, ShiftOnZSquaredHasKernelWithoutCertificate) {
  const auto r = min_modulus_inner_symbol(BlaschkeProduct::monomial(2), SymbolExpr::monomial(1), 1e-13);
  EXPECT_NEAR(r.value, 0.0, 1e-14);
  EXPECT_TRUE(r.notes.empty());
}

TEST(InnerSymbol, DimensionOneIsModulusAtZero) {
  // T_{conj(phi)} k_l = conj(phi(l)) k_l.
  const Complex l(0.3, 0.4), mu(-0.5, 0.1);
  const auto r = min_modulus_inner_symbol(BlaschkeProduct({l}), SymbolExpr::blaschke(1.0, 0, {mu}), 1e-14);
  EXPECT_NEAR(r.value, std::abs((l - mu) / (1.0 - std::conj(mu) * l)), 1e-12);
}

TEST(ReducedMinModulus, Basics) {
  EXPECT_NEAR(reduced_min_modulus(wrap(Eigen::MatrixXcd::Identity(4, 4))).value, 1.0, 1e-15);
  Eigen::VectorXcd v = hardymin::testing::random_coeffs(4).normalized();
  const auto p = reduced_min_modulus(wrap(v * v.adjoint()));
  EXPECT_NEAR(p.value, 1.0, 1e-12);
  EXPECT_EQ(p.kernel_dim, 3);
  const auto z = reduced_min_modulus(wrap(Eigen::MatrixXcd::Zero(3, 3)));
  EXPECT_TRUE(z.degenerate);
  EXPECT_EQ(z.value, 0.0);
  EXPECT_THROW(reduced_min_modulus(wrap(Eigen::MatrixXcd::Identity(2, 2)), 0.0), std::invalid_argument);
}

TEST(ReducedMinModulus, TruncatedDualShiftIsOne) {
  for (const auto& u : {BlaschkeProduct::monomial(2), BlaschkeProduct({0.0, 0.5})}) {
    const auto q = dtto_columns(u, SymbolExpr::monomial(1), 16, 1e-13);
    const auto r = reduced_min_modulus(q);
    EXPECT_EQ(r.value, 1.0);
    EXPECT_EQ(r.kernel_dim, 1);
  }
}

TEST(GalerkinSweep, ConstantSymbolGivesOnes) {
  for (const auto& r : galerkin_sweep(BlaschkeProduct({0.4}), SymbolExpr::constant(Complex(0, 1)), {2, 4, 8}, 1e-10))
    EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(GalerkinSweep, ShiftSymbolMatchesOracle) {
  for (const auto& u : {BlaschkeProduct::monomial(2), BlaschkeProduct({0.5}), BlaschkeProduct({0.3, 0.6})}) {
    const auto rows = galerkin_sweep(u, SymbolExpr::monomial(1), {8, 16, 32, 64}, 1e-10);
    ASSERT_EQ(rows.size(), 4u);
    for (const auto& r : rows) {
      EXPECT_EQ(r.method, Method::galerkin_sweep);
      ASSERT_TRUE(r.discrepancy);
      EXPECT_LT(*r.discrepancy, 1e-9);
    }
    EXPECT_TRUE(monotonicity_violations(rows, 1e-10).empty());
  }
}

TEST(GalerkinSweep, MonotoneAndAboveFiniteValue) {
  for (int trial = 0; trial < 5; ++trial) {
    const auto u = random_blaschke(1, 4);
    const auto phi = SymbolExpr::blaschke(1.0, -1, random_blaschke(1, 2).zeros());
    const double exact = min_modulus_unimodular(u, phi, 1e-13).value;
    const auto rows = galerkin_sweep(u, phi, {4, 8, 16, 32}, 1e-10);
    EXPECT_TRUE(monotonicity_violations(rows, 1e-10).empty());
    for (const auto& r : rows) EXPECT_GE(r.value, exact - 1e-9);
  }
}

TEST(GalerkinSweep, RejectsBadSchedules) {
  const auto u = BlaschkeProduct({0.5});
  const auto z = SymbolExpr::monomial(1);
  EXPECT_THROW(galerkin_sweep(u, z, {}, 1e-9), std::invalid_argument);
  EXPECT_THROW(galerkin_sweep(u, z, {8, 8}, 1e-9), std::invalid_argument);
  EXPECT_THROW(galerkin_sweep(u, z, {0}, 1e-9), std::invalid_argument);
}

TEST(GalerkinSweep, ThreadCountFromEnvironment) {
  setenv("MINMOD_THREADS", "3", 1);
  EXPECT_EQ(worker_count(), 3u);
  setenv("MINMOD_THREADS", "junk", 1);
  EXPECT_GE(worker_count(), 1u);
  unsetenv("MINMOD_THREADS");
}

TEST(AdjointCheck, RandomSquareMatrices) {
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = check_minmod_adjoint(wrap(random_matrix(8, 8)));
    EXPECT_LT(c.difference(), 1e-12);
    EXPECT_EQ(c.kernel_dim, c.kernel_dim_adjoint);
  }
  EXPECT_THROW(check_minmod_adjoint(wrap(random_matrix(2, 3))), std::invalid_argument);
}

TEST(AdjointCheck, CompressedShiftOfDegreeThree) {
  const auto u = random_blaschke(3, 3);
  const auto c = check_minmod_adjoint(compressed_shift(tm_basis(u, 1e-13)));
  EXPECT_NEAR(c.sigma_min, std::abs(u.at_origin()), 1e-9);
  EXPECT_NEAR(c.sigma_min_adjoint, std::abs(u.at_origin()), 1e-9);
}

TEST(MethodNames, RoundTrip) {
  for (auto m : {Method::finite_exact, Method::galerkin_sweep, Method::oracle, Method::bounds})
    EXPECT_EQ(method_from_string(to_string(m)), m);
  EXPECT_THROW(method_from_string("nope"), std::invalid_argument);
}
