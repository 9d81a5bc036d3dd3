#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "hardymin/linalg.hpp"
#include "hardymin/minmod.hpp"
#include "hardymin/operators.hpp"

using namespace hardymin;
using hardymin::testing::random_blaschke;

namespace {

SymbolExpr random_laurent(int lo, int hi) {
  return SymbolExpr::laurent(lo, hardymin::testing::random_coeffs(hi - lo + 1) * 0.3);
}

std::vector<Complex> sorted_by_real(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); });
  return v;
}

}  // namespace

TEST(ToeplitzMatrix, MonomialIsShift) {
  const auto t = toeplitz_matrix(SymbolExpr::monomial(1), 4, 4, 1e-12);
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(4, 4);
  for (int j = 1; j < 4; ++j) s(j, j - 1) = 1.0;
  EXPECT_EQ(t.entries, s);
  EXPECT_EQ(t.entry_error, 0.0);
  EXPECT_THROW(toeplitz_matrix(SymbolExpr::monomial(1), 0, 4, 1e-12), std::invalid_argument);
}

TEST(HankelMatrix, EntriesFromNegativeCoefficients) {
  Eigen::VectorXcd c(4);
  c << 4.0, 3.0, 2.0, 1.0;  // indices -3..0
  const auto h = hankel_matrix(FourierWindow(-3, c), 3, 3);
  EXPECT_EQ(h.entries(0, 0), Complex(2.0));  // phi^(-1)
  EXPECT_EQ(h.entries(0, 1), Complex(3.0));  // phi^(-2)
  EXPECT_EQ(h.entries(2, 0), Complex(4.0));  // phi^(-3)
  EXPECT_EQ(h.entries(2, 2), Complex(0.0));
}

TEST(DualToeplitzMatrix, ConjugateShift) {
  const auto s = dual_toeplitz_matrix(SymbolExpr::monomial(1), 3, 1e-12);
  // z conj(z)^k = conj(z)^{k-1}: entry (k-1, k) = 1.
  EXPECT_EQ(s.entries(0, 1), Complex(1.0));
  EXPECT_EQ(s.entries(1, 2), Complex(1.0));
  EXPECT_EQ(s.entries.cwiseAbs().sum(), 2.0);
}

TEST(CompressedShift, EigenvaluesAreZerosOfU) {
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_blaschke(1, 5, 0.85);
    const auto s = compressed_shift(tm_basis(u, 1e-13));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(s.entries);
    std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + s.rows());
    const auto a = sorted_by_real(u.zeros());
    ev = sorted_by_real(ev);
    // Eigenvalues of a defective matrix are only sqrt-accurate; zeros are distinct here.
    for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_LT(std::abs(ev[i] - a[i]), 1e-6);
  }
}

TEST(TruncatedToeplitz, AdjointIsConjugateSymbol) {
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = random_blaschke();
    const auto b = tm_basis(u, 1e-13);
    const auto phi = random_laurent(-3, 3);
    const auto a = truncated_toeplitz(b, phi, 1e-13);
    const auto ac = truncated_toeplitz(b, conj(phi), 1e-13);
    EXPECT_LT((a.entries.adjoint() - ac.entries).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(TruncatedToeplitz, DimensionOneIsPointEvaluation) {
  // K_{b_a} is spanned by the kernel at a, so A_phi = phi(a) for analytic phi.
  const Complex a(0.4, 0.3);
  const auto phi = SymbolExpr::blaschke(1.0, 0, {Complex(-0.2, 0.5)});
  const auto m = truncated_toeplitz(tm_basis(BlaschkeProduct({a}), 1e-14), phi, 1e-14);
  EXPECT_LT(std::abs(m.entries(0, 0) - blaschke_factor(Complex(-0.2, 0.5), a)), 1e-12);
}

TEST(BGram, PlusAStarAIsIdentityForInnerSymbols) {
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_blaschke(1, 5);
    const auto phi = SymbolExpr::inner(random_blaschke(1, 4));
    const auto b = tm_basis(u, 1e-13);
    const auto g = b_gram(b, phi, 1e-13);
    const auto a = truncated_toeplitz(b, phi, 1e-13);
    const Eigen::MatrixXcd sum = g.entries + a.entries.adjoint() * a.entries;
    EXPECT_LT((sum - Eigen::MatrixXcd::Identity(b.dim, b.dim)).norm(), 1e-8);
  }
}

TEST(BGram, IsPositiveSemidefinite) {
  const auto b = tm_basis(random_blaschke(3, 3), 1e-13);
  const auto g = b_gram(b, SymbolExpr::conjugate(SymbolExpr::inner(random_blaschke(2, 2))), 1e-13);
  EXPECT_GT(hermitian_min_eigenvalue(g.entries), -1e-12);
}

TEST(DttoBlock, ConstantSymbolIsIdentity) {
  const auto d = dtto_block(random_blaschke(), SymbolExpr::constant(Complex(0, 1)), 6, 1e-12);
  EXPECT_LT((d.entries - Complex(0, 1) * Eigen::MatrixXcd::Identity(12, 12)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(DttoBlock, ShiftDefectIdentityOnInteriorCoordinates) {
  // D_z* D_z = I - (1 - |u(0)|^2) conj(z) (x) conj(z).
  constexpr int n = 64;
  for (int trial = 0; trial < 5; ++trial) {
    const auto u = random_blaschke(1, 5);
    const auto d = dtto_block(u, SymbolExpr::monomial(1), n, 1e-13);
    const Eigen::MatrixXcd dd = d.entries.adjoint() * d.entries;
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(2 * n, 2 * n);
    expected(n, n) -= 1 - std::norm(u.at_origin());
    std::vector<int> keep;
    for (int i = 0; i < 2 * n; ++i)
      if (i != n - 1 && i != 2 * n - 1) keep.push_back(i);
    double residual = 0;
    for (int i : keep)
      for (int k : keep) residual = std::max(residual, std::abs(dd(i, k) - expected(i, k)));
    EXPECT_LE(residual, 1e-8);
  }
}

TEST(DttoBlock, ComplexSymmetricUnderConjugation) {
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = random_blaschke(1, 4);
    const auto phi = random_laurent(-2, 2);
    const int n = 12;
    const auto d = dtto_block(u, phi, n, 1e-13);
    const auto c = conjugation_action(u, n, 1e-13);
    EXPECT_LE(complex_symmetry_residual(d, c), 1e-10 + 4 * d.entry_error);
  }
}

TEST(ConjugationAction, IsInvolution) {
  const auto c = conjugation_action(BlaschkeProduct({0.2}), 5, 1e-12);
  EXPECT_EQ(c.entries * c.entries.conjugate(), Eigen::MatrixXcd::Identity(10, 10));
  EXPECT_THROW(conjugation_action(BlaschkeProduct(std::vector<Complex>{}), 5, 1e-12), std::invalid_argument);
}

TEST(DttoColumns, ShiftColumnNorms) {
  // D_z(u z^k) = u z^{k+1}, D_z(conj(z)^k) = conj(z)^{k-1} for k >= 2, |D_z conj(z)| = |u(0)|.
  const auto u = random_blaschke(2, 4);
  const int n = 10;
  const auto m = dtto_columns(u, SymbolExpr::monomial(1), n, 1e-13);
  for (int k = 0; k < 2 * n; ++k) {
    const double expected = k == n ? std::abs(u.at_origin()) : 1.0;
    EXPECT_NEAR(m.entries.col(k).norm(), expected, 1e-10) << k;
  }
  EXPECT_GE(m.rows(), m.cols());
}
