#include "cli.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hardymin/json_io.hpp"
#include "hardymin/oracle.hpp"
#include "hardymin/verify.hpp"

namespace hardymin::cli {

namespace {

constexpr int kDefaultSweepTruncation = 64;

const char* kSupportedClasses =
    "supported symbol classes: constants; unimodular symbols (Blaschke quotients, unimodular piecewise constants); "
    "analytic symbols (m(B_phi)); real-valued symbols plus a complex constant (normal-form bounds)";

std::string load_json_text(const std::string& arg, const char* what) {
  std::size_t i = 0;
  while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
  if (i < arg.size() && (arg[i] == '{' || arg[i] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument(std::string(what) + ": not JSON and no readable file '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BlaschkeProduct load_inner(const JobConfig& c) {
  if (c.inner.empty()) throw std::invalid_argument("--inner is required for this symbol");
  return inner_from_json(parse_json(load_json_text(c.inner, "--inner")));
}

SymbolExpr load_symbol(const JobConfig& c) {
  if (c.symbol.empty()) throw std::invalid_argument("--symbol is required");
  return symbol_from_json(parse_json(load_json_text(c.symbol, "--symbol")));
}

void check_config(const JobConfig& c) {
  if (!(c.tol > 0)) throw std::invalid_argument("--tol must be positive");
  if (c.format != "json" && c.format != "csv") throw std::invalid_argument("--format must be json or csv");
  for (std::size_t i = 1; i < c.truncations.size(); ++i)
    if (c.truncations[i] <= c.truncations[i - 1]) throw std::invalid_argument("--truncations must be strictly increasing");
}

std::string g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

MinModReport from_bounds(const NormalBounds& b) {
  MinModReport r;
  r.lower = b.lower;
  r.upper = b.upper;
  if (b.exact) {
    r.value = *b.exact;
    r.method = Method::oracle;
    r.attach_oracle(*b.exact);
  } else {
    r.value = b.lower;
    r.method = Method::bounds;
  }
  return r;
}

MinModReport unimodular_route(const BlaschkeProduct& u, const SymbolExpr& phi, double tol) {
  auto r = min_modulus_unimodular(u, phi, tol);
  r.checks.emplace_back("toeplitz_hankel_images", min_modulus_toeplitz_hankel(u, phi, tol).value);
  const auto b = min_modulus_bounds(u, phi, tol);
  r.lower = b.lower;
  r.upper = b.upper;
  if (as_inner(phi)) r.checks.emplace_back("inner_symbol", min_modulus_inner_symbol(u, phi, tol).value);
  return r;
}

MinModReport sweep_route(const BlaschkeProduct& u, const SymbolExpr& phi, const JobConfig& c) {
  const int n = c.truncations.empty() ? kDefaultSweepTruncation : c.truncations.back();
  auto r = galerkin_sweep(u, phi, {n}, c.tol).front();
  r.notes.push_back("Galerkin value: an upper bound on m(D_phi)");
  return r;
}

MinModReport forced(Method m, const SymbolExpr& phi, const JobConfig& c) {
  switch (m) {
    case Method::finite_exact:
      if (!is_unimodular(phi)) throw UnsupportedSymbol("finite_exact needs a unimodular symbol");
      return unimodular_route(load_inner(c), phi, c.tol);
    case Method::galerkin_sweep:
      return sweep_route(load_inner(c), phi, c);
    case Method::oracle: {
      if (auto k = as_constant(phi)) {
        MinModReport r;
        r.value = std::abs(*k);
        r.method = Method::oracle;
        r.attach_oracle(r.value);
        return r;
      }
      if (auto mono = as_monomial(phi); mono && mono->second == 1 && std::abs(std::abs(mono->first) - 1) <= 1e-12) {
        MinModReport r;
        r.value = oracle_m_dual_shift(load_inner(c));
        r.method = Method::oracle;
        r.attach_oracle(r.value);
        return r;
      }
      auto r = from_bounds(normal_dtto_bounds(phi));
      if (r.method != Method::oracle) throw UnsupportedSymbol("no closed-form value applies to this symbol");
      return r;
    }
    case Method::bounds: {
      if (real_plus_constant(phi)) {
        auto r = from_bounds(normal_dtto_bounds(phi));
        r.method = Method::bounds;
        return r;
      }
      if (!is_unimodular(phi)) throw UnsupportedSymbol("bounds need a unimodular or real-plus-constant symbol");
      const auto b = min_modulus_bounds(load_inner(c), phi, c.tol);
      MinModReport r;
      r.method = Method::bounds;
      r.value = b.lower;
      r.lower = b.lower;
      r.upper = b.upper;
      return r;
    }
  }
  throw std::logic_error("unhandled method");
}

}  // namespace

MinModReport cmd_minmod(const JobConfig& c) {
  check_config(c);
  const auto phi = load_symbol(c);
  if (c.force_method) return forced(*c.force_method, phi, c);

  if (auto k = as_constant(phi)) {
    MinModReport r;
    r.value = std::abs(*k);
    r.method = Method::oracle;
    r.attach_oracle(oracle_constant_symbol(phi).value_or(r.value));
    return r;
  }
  if (is_unimodular(phi)) return unimodular_route(load_inner(c), phi, c.tol);
  if (is_analytic(phi)) {
    auto r = min_modulus_b_operator(load_inner(c), phi, c.tol);
    r.notes.push_back("analytic, non-unimodular symbol: value is m(B_phi)");
    return r;
  }
  if (real_plus_constant(phi)) return from_bounds(normal_dtto_bounds(phi));
  throw UnsupportedSymbol(kSupportedClasses);
}

std::vector<MinModReport> cmd_sweep(const JobConfig& c) {
  check_config(c);
  if (c.truncations.empty()) throw std::invalid_argument("sweep needs --truncations");
  return galerkin_sweep(load_inner(c), load_symbol(c), c.truncations, c.tol);
}

std::string render_minmod(const MinModReport& r, const std::string& format) {
  if (format == "json") return report_to_json(r).dump(2) + "\n";
  auto opt = [](const std::optional<double>& v) { return v ? g12(*v) : std::string(); };
  std::string s = "value,method,truncation,entry_error,oracle,discrepancy,lower,upper\n";
  s += g12(r.value) + "," + std::string(to_string(r.method)) + "," + (r.truncation ? std::to_string(*r.truncation) : "") +
       "," + g12(r.entry_error_bound) + "," + opt(r.oracle_value) + "," + opt(r.discrepancy) + "," + opt(r.lower) + "," +
       opt(r.upper) + "\n";
  return s;
}

std::string render_sweep(const std::vector<MinModReport>& rows, double tol, const std::string& format) {
  const auto bad = monotonicity_violations(rows, tol);
  if (format == "json") {
    Json j{{"rows", Json::array()}, {"monotonicity_violations", bad}};
    for (const auto& r : rows) j["rows"].push_back(report_to_json(r));
    return j.dump(2) + "\n";
  }
  std::string s = "N,value,entry_error\n";
  for (const auto& r : rows) s += std::to_string(r.truncation.value_or(0)) + "," + g12(r.value) + "," + g12(r.entry_error_bound) + "\n";
  if (!bad.empty()) {
    s += "# monotonicity violation beyond 2*tol at N =";
    for (int n : bad) s += " " + std::to_string(n);
    s += "\n";
  }
  return s;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum moduli of operators on model spaces"};
  app.require_subcommand(1);
  JobConfig cfg;
  std::string force;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--inner", cfg.inner, "inner function JSON, or a file holding it");
    sub->add_option("--symbol", cfg.symbol, "symbol JSON, or a file holding it");
    sub->add_option("--tol", cfg.tol, "coefficient tail tolerance")->capture_default_str();
    sub->add_option("--out", cfg.output, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto* minmod = app.add_subcommand("minmod", "compute one minimum modulus");
  add_common(minmod);
  minmod->add_option("--force-method", force, "finite_exact, galerkin_sweep, oracle or bounds")
      ->check(CLI::IsMember({"finite_exact", "galerkin_sweep", "oracle", "bounds"}));
  minmod->add_option("--truncations", cfg.truncations, "truncation for a forced sweep")->delimiter(',');
  auto* sweep = app.add_subcommand("sweep", "Galerkin values over increasing truncations");
  add_common(sweep);
  sweep->add_option("--truncations", cfg.truncations, "comma separated, strictly increasing")->delimiter(',');
  auto* verify = app.add_subcommand("verify", "run the catalog of known example values");
  verify->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", cfg.output, "output file (default stdout)");
  verify->add_option("--perturb", cfg.perturb, "shift one item's expected values by 1e-3")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  auto emit = [&](const std::string& text) {
    if (cfg.output.empty()) {
      out << text;
      return;
    }
    std::ofstream f(cfg.output);
    if (!f) throw std::invalid_argument("cannot write '" + cfg.output + "'");
    f << text;
  };

  try {
    if (*minmod) {
      cfg.command = "minmod";
      if (!force.empty()) cfg.force_method = method_from_string(force);
      emit(render_minmod(cmd_minmod(cfg), cfg.format));
      return kOk;
    }
    if (*sweep) {
      cfg.command = "sweep";
      if (cfg.format == "json" && sweep->count("--format") == 0) cfg.format = "csv";
      emit(render_sweep(cmd_sweep(cfg), cfg.tol, cfg.format));
      return kOk;
    }
    cfg.command = "verify";
    if (verify->count("--format") == 0) cfg.format = "text";
    const auto summary = run_verify({cfg.perturb, 1e-3});
    if (cfg.format == "json") {
      Json j{{"passed", summary.passed()}, {"items", Json::array()}};
      for (const auto& i : summary.items)
        j["items"].push_back({{"name", i.name}, {"passed", i.passed()}, {"discrepancy", i.discrepancy()}, {"tolerance", i.tolerance}});
      emit(j.dump(2) + "\n");
    } else {
      std::string s;
      for (const auto& i : summary.items) {
        s += std::string(i.passed() ? "PASS " : "FAIL ") + i.name + " discrepancy=" + g12(i.discrepancy()) +
             " tol=" + g12(i.tolerance) + "\n";
        if (!i.passed())
          for (const auto& c : i.checks)
            s += "    " + c.label + ": computed " + g12(c.computed) + ", expected " + g12(c.expected) + "\n";
      }
      if (summary.items.empty()) s += "no items executed; refusing to pass\n";
      s += std::to_string(summary.items.size() - summary.failures()) + "/" + std::to_string(summary.items.size()) + " passed\n";
      emit(s);
    }
    return summary.passed() ? kOk : kVerifyFailed;
  } catch (const UnsupportedSymbol& e) {
    err << "unsupported symbol: " << e.what() << "\n";
    if (std::string(e.what()) != kSupportedClasses) err << kSupportedClasses << "\n";
    return kUnsupported;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

}  // namespace hardymin::cli
