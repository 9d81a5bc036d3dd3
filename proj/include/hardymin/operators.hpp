#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "hardymin/modelspace.hpp"

namespace hardymin {

/// One contiguous family of basis vectors, e.g. {"z^n", 0, N-1}.
struct IndexBlock {
  std::string family;
  int first = 0;
  int last = 0;

  int size() const { return last - first + 1; }
};

using BasisLabel = std::vector<IndexBlock>;

/// Dense matrix of an operator between labelled bases.  `entry_error` bounds
/// every entry's deviation from the exact operator's matrix.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  BasisLabel in_basis;
  BasisLabel out_basis;
  double entry_error = 0;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
  /// Bound on the spectral-norm perturbation implied by entry_error.
  double perturbation_bound() const {
    return entry_error * std::sqrt(static_cast<double>(rows()) * static_cast<double>(cols()));
  }
  OperatorMatrix adjoint() const { return {entries.adjoint(), out_basis, in_basis, entry_error}; }
};

// Basis families used in labels.
inline const std::string kAnalytic = "z^n";
inline const std::string kCoanalytic = "conj(z)^n";
inline const std::string kShiftedAnalytic = "u*z^n";
inline const std::string kModel = "tm";

/// T_phi on span{z^0..z^{rows-1}} <- span{z^0..z^{cols-1}}: entry (j,k) = phi^(j-k).
OperatorMatrix toeplitz_matrix(const FourierWindow& symbol, int rows, int cols);
OperatorMatrix toeplitz_matrix(const SymbolExpr& phi, int rows, int cols, double tol);

/// H_phi into span{conj(z)^1..conj(z)^{out_rows}}: entry (j,k) = phi^(-j-k), j >= 1.
OperatorMatrix hankel_matrix(const FourierWindow& symbol, int out_rows, int cols);
OperatorMatrix hankel_matrix(const SymbolExpr& phi, int out_rows, int cols, double tol);

/// S_phi = P_- M_phi on span{conj(z)^1..conj(z)^size}: entry (j,k) = phi^(k-j).
OperatorMatrix dual_toeplitz_matrix(const FourierWindow& symbol, int size);
OperatorMatrix dual_toeplitz_matrix(const SymbolExpr& phi, int size, double tol);

/// A_phi = P_{K_u} M_phi on K_u in the TM basis: entry (j,k) = <phi e_k, e_j>.
OperatorMatrix truncated_toeplitz(const ModelBasis& basis, const SymbolExpr& phi, double tol);

/// S_u = A_z.
OperatorMatrix compressed_shift(const ModelBasis& basis);

/// Matrix of f -> P(psi f) on K_u: columns are Taylor coefficients of P(psi e_k).
OperatorMatrix toeplitz_on_model_space(const ModelBasis& basis, const FourierWindow& psi);
/// Matrix of f -> P_-(psi f) on K_u, output basis conj(z)^1, conj(z)^2, ...
OperatorMatrix hankel_on_model_space(const ModelBasis& basis, const FourierWindow& psi);

/// Grams of the two orthogonal pieces of B_phi e_k:
/// <T_{conj(u) phi} e_k, T_{conj(u) phi} e_j> and <H_phi e_k, H_phi e_j>.
struct BGramParts {
  OperatorMatrix toeplitz_image;  // T_{conj(u) phi}|K_u as a tall matrix
  OperatorMatrix hankel_image;    // H_phi|K_u as a tall matrix
  OperatorMatrix toeplitz_gram;
  OperatorMatrix hankel_gram;

  OperatorMatrix total() const;
};

BGramParts b_gram_parts(const ModelBasis& basis, const SymbolExpr& phi, double tol);
/// Gram of {B_phi e_k}, positive semidefinite dim x dim.
OperatorMatrix b_gram(const ModelBasis& basis, const SymbolExpr& phi, double tol);

/// Coefficient windows D_phi needs: phi, u*phi and conj(u)*phi.
struct DttoSymbols {
  FourierWindow phi;
  FourierWindow u_phi;
  FourierWindow conj_u_phi;
};

DttoSymbols dtto_symbols(const BlaschkeProduct& u, const SymbolExpr& phi, int n, double tol);

/// 2N x 2N compression of U* D_phi U, U = diag(M_u, I), on {z^n}_0^{N-1} (+) {conj(z)^n}_1^N.
/// Block layout [[T_phi, H*_{u conj(phi)}], [H_{u phi}, S_phi]].
OperatorMatrix dtto_block(const BlaschkeProduct& u, const SymbolExpr& phi, int n, double tol);

/// Same input space, full output: every row the windows can populate is kept,
/// so the singular values bound m(D_phi) from above.
OperatorMatrix dtto_columns(const BlaschkeProduct& u, const SymbolExpr& phi, int n, double tol);

/// Matrix M with C_u(x) = M conj(x) in the {u z^n}_0^{N-1} (+) {conj(z)^n}_1^N
/// coordinates, C_u f = u conj(z f).
OperatorMatrix conjugation_action(const BlaschkeProduct& u, int n, double tol);

}  // namespace hardymin
