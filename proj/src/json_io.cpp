#include "hardymin/json_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hardymin {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

std::vector<Complex> complex_list(const Json& j) {
  if (!j.is_array()) bad("expected an array of [re,im] pairs");
  std::vector<Complex> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

Json complex_list_to_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(complex_to_json(c));
  return out;
}

SymbolExpr parse_symbol(const Json& j) {
  if (!j.is_object()) bad("symbol must be an object");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "blaschke_quotient" || kind == "blaschke") {
    return SymbolExpr::blaschke(complex_from_json(j.value("constant", Json::array({1.0, 0.0}))),
                                j.value("z_power", 0), complex_list(j.value("zeros", Json::array())));
  }
  if (kind == "laurent") {
    const auto c = complex_list(j.at("coeffs"));
    if (c.empty()) bad("laurent coeffs must be nonempty");
    return SymbolExpr::laurent(j.value("offset", 0), Eigen::Map<const Eigen::VectorXcd>(c.data(), static_cast<Eigen::Index>(c.size())));
  }
  if (kind == "conjugate") return SymbolExpr::conjugate(parse_symbol(j.at("of")));
  if (kind == "sum") return SymbolExpr::plus(parse_symbol(j.at("left")), complex_from_json(j.at("constant")));
  if (kind == "piecewise") {
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) arcs.push_back({a.at("from").get<double>(), a.at("to").get<double>(), complex_from_json(a.at("value"))});
    return SymbolExpr::piecewise(std::move(arcs));
  }
  bad("unknown symbol kind '" + kind + "'");
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json label_to_json(const BasisLabel& label) {
  Json out = Json::array();
  for (const auto& b : label) out.push_back({{"family", b.family}, {"first", b.first}, {"last", b.last}});
  return out;
}

}  // namespace

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) bad("complex value must be [re,im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

SymbolExpr symbol_from_json(const Json& j) {
  return guarded([&] { return parse_symbol(j); });
}

Json symbol_to_json(const SymbolExpr& phi) {
  return std::visit(
      [](const auto& n) -> Json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LaurentPoly>) {
          std::vector<Complex> c(n.coeffs.data(), n.coeffs.data() + n.coeffs.size());
          return {{"kind", "laurent"}, {"offset", n.offset}, {"coeffs", complex_list_to_json(c)}};
        } else if constexpr (std::is_same_v<T, BlaschkeQuotient>) {
          return {{"kind", "blaschke_quotient"},
                  {"constant", complex_to_json(n.constant)},
                  {"z_power", n.z_power},
                  {"zeros", complex_list_to_json(n.zeros)}};
        } else if constexpr (std::is_same_v<T, Conjugate>) {
          return {{"kind", "conjugate"}, {"of", symbol_to_json(*n.of)}};
        } else if constexpr (std::is_same_v<T, SumWithConstant>) {
          return {{"kind", "sum"}, {"left", symbol_to_json(*n.left)}, {"constant", complex_to_json(n.constant)}};
        } else {
          Json arcs = Json::array();
          for (const auto& a : n.arcs) arcs.push_back({{"from", a.from}, {"to", a.to}, {"value", complex_to_json(a.value)}});
          return {{"kind", "piecewise"}, {"arcs", arcs}};
        }
      },
      phi.node());
}

BlaschkeProduct inner_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_object()) bad("inner function must be an object");
    if (j.contains("kind")) {
      const auto kind = j.at("kind").get<std::string>();
      if (kind != "blaschke_quotient" && kind != "blaschke") bad("inner function must be a blaschke_quotient");
    }
    const int m = j.value("z_power", 0);
    if (m < 0) bad("inner function needs z_power >= 0");
    auto zeros = complex_list(j.value("zeros", Json::array()));
    zeros.insert(zeros.end(), static_cast<std::size_t>(m), Complex(0));
    return BlaschkeProduct(std::move(zeros), complex_from_json(j.value("constant", Json::array({1.0, 0.0}))));
  });
}

Json inner_to_json(const BlaschkeProduct& u) {
  return {{"kind", "blaschke_quotient"},
          {"constant", complex_to_json(u.constant())},
          {"z_power", 0},
          {"zeros", complex_list_to_json(u.zeros())}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(e.what());
  }
}

Json report_to_json(const MinModReport& r) {
  Json j{{"value", r.value}, {"method", std::string(to_string(r.method))}, {"entry_error", r.entry_error_bound}};
  j["truncation"] = r.truncation ? Json(*r.truncation) : Json(nullptr);
  j["oracle"] = r.oracle_value ? Json(*r.oracle_value) : Json(nullptr);
  j["discrepancy"] = r.discrepancy ? Json(*r.discrepancy) : Json(nullptr);
  j["quantity"] = r.quantity;
  if (r.lower) j["lower"] = *r.lower;
  if (r.upper) j["upper"] = *r.upper;
  if (!r.checks.empty()) {
    Json c = Json::object();
    for (const auto& [name, v] : r.checks) c[name] = v;
    j["checks"] = c;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string matrix_to_csv(const OperatorMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (k) os << ',';
      os << '"' << format_double(m.entries(i, k).real()) << ',' << format_double(m.entries(i, k).imag()) << '"';
    }
    os << '\n';
  }
  return os.str();
}

Json matrix_to_json(const OperatorMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m.entries(i, k)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"in_basis", label_to_json(m.in_basis)},
          {"out_basis", label_to_json(m.out_basis)},
          {"entry_error", m.entry_error},
          {"entries", rows}};
}

Json window_to_json(const FourierWindow& w) {
  std::vector<Complex> c(w.coeffs.data(), w.coeffs.data() + w.coeffs.size());
  return {{"offset", w.offset}, {"coeffs", complex_list_to_json(c)}, {"tail_bound", w.tail_bound}};
}

Json basis_to_json(const ModelBasis& b) {
  Json windows = Json::array();
  for (const auto& e : b.basis) windows.push_back(window_to_json(e));
  return {{"inner", inner_to_json(b.inner)}, {"dim", b.dim}, {"tol", b.tol}, {"basis", windows}};
}

}  // namespace hardymin
