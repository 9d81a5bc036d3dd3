#include "hardymin/minmod.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "hardymin/linalg.hpp"
#include "hardymin/oracle.hpp"

namespace hardymin {

namespace {

void require_unimodular(const SymbolExpr& phi, const char* what) {
  if (!is_unimodular(phi)) throw std::invalid_argument(std::string(what) + ": symbol must be unimodular");
}

void require_nonconstant(const BlaschkeProduct& u, const char* what) {
  if (u.degree() < 1) throw std::invalid_argument(std::string(what) + ": inner function must be nonconstant");
}

bool is_unimodular_monomial(const SymbolExpr& phi, int n) {
  auto m = as_monomial(phi);
  return m && m->second == n && std::abs(std::abs(m->first) - 1.0) <= 1e-12;
}

// Oracle for m(D_phi) when one applies.
std::optional<double> dtto_oracle(const BlaschkeProduct& u, const SymbolExpr& phi) {
  if (auto c = oracle_constant_symbol(phi)) return c;
  if (is_unimodular_monomial(phi, 1)) return oracle_m_dual_shift(u);
  return std::nullopt;
}

int model_reach(const ModelBasis& basis) {
  int h = 0;
  for (const auto& e : basis.basis) h = std::max(h, e.highest());
  return h;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::finite_exact:
      return "finite_exact";
    case Method::galerkin_sweep:
      return "galerkin_sweep";
    case Method::oracle:
      return "oracle";
    case Method::bounds:
      return "bounds";
  }
  return "unknown";
}

Method method_from_string(std::string_view s) {
  for (auto m : {Method::finite_exact, Method::galerkin_sweep, Method::oracle, Method::bounds})
    if (to_string(m) == s) return m;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

void MinModReport::attach_oracle(double v) {
  oracle_value = v;
  discrepancy = std::abs(value - v);
}

double sigma_min(const OperatorMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("sigma_min: empty matrix");
  return smallest_singular_value(m.entries);
}

double sigma_max(const OperatorMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("sigma_max: empty matrix");
  return largest_singular_value(m.entries);
}

MinModReport min_modulus_unimodular(const BlaschkeProduct& u, const SymbolExpr& phi, double tol) {
  require_nonconstant(u, "min_modulus_unimodular");
  require_unimodular(phi, "min_modulus_unimodular");
  const auto basis = tm_basis(u, tol);
  const auto a = truncated_toeplitz(basis, conj(phi), tol);
  MinModReport r;
  r.value = sigma_min(a);
  r.method = Method::finite_exact;
  r.entry_error_bound = a.perturbation_bound();
  if (auto o = dtto_oracle(u, phi)) r.attach_oracle(*o);
  return r;
}

MinModReport min_modulus_toeplitz_hankel(const BlaschkeProduct& u, const SymbolExpr& phi, double tol) {
  require_nonconstant(u, "min_modulus_toeplitz_hankel");
  require_unimodular(phi, "min_modulus_toeplitz_hankel");
  const auto basis = tm_basis(u, tol);
  const auto g = b_gram(basis, conj(phi), tol);
  MinModReport r;
  r.value = std::sqrt(std::max(0.0, 1.0 - hermitian_max_eigenvalue(g.entries)));
  r.method = Method::finite_exact;
  r.entry_error_bound = g.perturbation_bound();
  if (auto o = dtto_oracle(u, phi)) r.attach_oracle(*o);
  return r;
}

MinModBounds min_modulus_bounds(const BlaschkeProduct& u, const SymbolExpr& phi, double tol) {
  require_nonconstant(u, "min_modulus_bounds");
  require_unimodular(phi, "min_modulus_bounds");
  const auto basis = tm_basis(u, tol);
  const auto parts = b_gram_parts(basis, conj(phi), tol);
  MinModBounds b;
  b.toeplitz_norm_sq = std::pow(largest_singular_value(parts.toeplitz_image.entries), 2);
  b.hankel_norm_sq = std::pow(largest_singular_value(parts.hankel_image.entries), 2);
  b.lower = std::sqrt(std::max(0.0, 1.0 - b.toeplitz_norm_sq - b.hankel_norm_sq));
  b.upper = std::sqrt(std::max(0.0, 1.0 - std::max(b.toeplitz_norm_sq, b.hankel_norm_sq)));
  return b;
}

MinModReport min_modulus_b_operator(const BlaschkeProduct& u, const SymbolExpr& phi, double tol) {
  require_nonconstant(u, "min_modulus_b_operator");
  const bool unimodular = is_unimodular(phi);
  const bool analytic = is_analytic(phi);
  if (!unimodular && !analytic)
    throw UnsupportedSymbol("min_modulus_b_operator: symbol must be unimodular or analytic");
  const auto basis = tm_basis(u, tol);
  MinModReport r;
  r.quantity = "m(B_phi)";
  r.method = Method::finite_exact;

  double via_norm = 0;
  if (unimodular) {
    const auto a = truncated_toeplitz(basis, phi, tol);
    via_norm = std::sqrt(std::max(0.0, 1.0 - std::pow(sigma_max(a), 2)));
    r.value = via_norm;
    r.entry_error_bound = a.perturbation_bound();
  }
  if (analytic) {
    // B_phi f = u P(conj(u) phi f) for analytic phi.
    const auto uw = inner_window(u, tol);
    const auto w = symbol_to_window(phi, {0, model_reach(basis) + uw.highest() + 1}, tol);
    const auto image = toeplitz_on_model_space(basis, window_multiply(window_conjugate(uw), w));
    r.value = sigma_min(image);
    r.entry_error_bound = image.perturbation_bound();
    if (unimodular) r.checks.emplace_back("sqrt(1-|A_phi|^2)", via_norm);
  }
  if (as_inner(phi)) {
    const auto h = nehari_norm(u, phi, 0, tol);
    r.checks.emplace_back("sqrt(1-|H_{conj(u)phi}|^2)", std::sqrt(std::max(0.0, 1.0 - h.value * h.value)));
    if (h.exact_zero) r.notes.push_back("u divides phi: |A_phi| = 0");
  }
  if (is_unimodular_monomial(phi, 1)) r.attach_oracle(oracle_m_b_shift(u));
  return r;
}

MinModReport min_modulus_inner_symbol(const BlaschkeProduct& u, const SymbolExpr& phi, double tol) {
  require_nonconstant(u, "min_modulus_inner_symbol");
  const auto inner = as_inner(phi);
  if (!inner) throw std::invalid_argument("min_modulus_inner_symbol: symbol must be a finite Blaschke product");
  const auto basis = tm_basis(u, tol);
  const auto w = symbol_to_window(conj(phi), {-(model_reach(basis) + 1), 0}, tol);
  const auto image = toeplitz_on_model_space(basis, w);
  MinModReport r;
  r.method = Method::finite_exact;
  r.value = sigma_min(image);
  r.entry_error_bound = image.perturbation_bound();
  if (divides(u, *inner)) {
    r.checks.emplace_back("sigma_min", r.value);
    r.value = 0;
    r.entry_error_bound = 0;
    r.notes.push_back("divisibility certificate: every zero of u is a zero of phi");
  }
  if (auto o = dtto_oracle(u, phi)) r.attach_oracle(*o);
  return r;
}

ReducedMinModulus reduced_min_modulus(const OperatorMatrix& m, double rank_tol) {
  if (!(rank_tol > 0)) throw std::invalid_argument("reduced_min_modulus: rank_tol must be positive");
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("reduced_min_modulus: empty matrix");
  const auto s = singular_values(m.entries);
  const double cut = rank_tol * s.maxCoeff();
  ReducedMinModulus r;
  double low = INFINITY;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) {
      low = std::min(low, s(i));
      ++rank;
    }
  r.kernel_dim = m.cols() - rank;
  if (rank == 0) {
    r.degenerate = true;
    return r;
  }
  r.value = low;
  return r;
}

unsigned worker_count() {
  if (const char* env = std::getenv("MINMOD_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<MinModReport> galerkin_sweep(const BlaschkeProduct& u, const SymbolExpr& phi, const std::vector<int>& schedule,
                                         double tol) {
  if (schedule.empty()) throw std::invalid_argument("galerkin_sweep: schedule must be nonempty");
  if (!(tol > 0)) throw std::invalid_argument("galerkin_sweep: tol must be positive");
  require_nonconstant(u, "galerkin_sweep");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < 1) throw std::invalid_argument("galerkin_sweep: truncations must be >= 1");
    if (i && schedule[i] <= schedule[i - 1])
      throw std::invalid_argument("galerkin_sweep: truncations must be strictly increasing");
  }
  const auto oracle = dtto_oracle(u, phi);
  std::vector<MinModReport> out(schedule.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next++) < schedule.size();) {
      try {
        const int n = schedule[i];
        const auto m = dtto_columns(u, phi, n, tol / std::sqrt(2.0 * n));
        auto& r = out[i];
        r.value = sigma_min(m);
        r.method = Method::galerkin_sweep;
        r.truncation = n;
        r.entry_error_bound = m.perturbation_bound();
        if (oracle) r.attach_oracle(*oracle);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::min<unsigned>(worker_count(), static_cast<unsigned>(schedule.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<int> monotonicity_violations(const std::vector<MinModReport>& sweep, double tol) {
  std::vector<int> bad;
  for (std::size_t i = 1; i < sweep.size(); ++i)
    if (sweep[i].value > sweep[i - 1].value + 2.0 * tol) bad.push_back(sweep[i].truncation.value_or(0));
  return bad;
}

AdjointCheck check_minmod_adjoint(const OperatorMatrix& m, double rank_tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("check_minmod_adjoint: matrix must be square");
  AdjointCheck c;
  c.sigma_min = sigma_min(m);
  c.sigma_min_adjoint = sigma_min(m.adjoint());
  c.kernel_dim = numerical_kernel_dimension(m.entries, rank_tol);
  c.kernel_dim_adjoint = numerical_kernel_dimension(m.entries.adjoint(), rank_tol);
  return c;
}

double complex_symmetry_residual(const OperatorMatrix& d, const OperatorMatrix& c) {
  if (d.rows() != d.cols() || c.rows() != d.rows() || c.cols() != d.cols())
    throw std::invalid_argument("complex_symmetry_residual: matrices must be square of equal size");
  const Eigen::MatrixXcd lhs = c.entries * d.entries.conjugate() * c.entries.conjugate();
  return (lhs - d.entries.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace hardymin
