#pragma once

#include <string>

#include <json.hpp>

#include "hardymin/minmod.hpp"

namespace hardymin {

using Json = nlohmann::json;

/// [re, im]; a bare number is read as a real value.
Complex complex_from_json(const Json& j);
Json complex_to_json(Complex c);

/// Schema:
///   {"kind":"blaschke_quotient","constant":[re,im],"z_power":m,"zeros":[[re,im],...]}
///   {"kind":"laurent","offset":n0,"coeffs":[[re,im],...]}
///   {"kind":"conjugate","of":...}
///   {"kind":"sum","left":...,"constant":[re,im]}
///   {"kind":"piecewise","arcs":[{"from":t0,"to":t1,"value":[re,im]},...]}
/// Malformed input raises std::invalid_argument.
SymbolExpr symbol_from_json(const Json& j);
Json symbol_to_json(const SymbolExpr& phi);

/// Same object as a blaschke_quotient ("kind" optional, z_power >= 0);
/// z_power becomes zeros at the origin.
BlaschkeProduct inner_from_json(const Json& j);
Json inner_to_json(const BlaschkeProduct& u);

/// Parses text, raising std::invalid_argument with the parser's diagnostic.
Json parse_json(const std::string& text);

Json report_to_json(const MinModReport& r);

/// Row-major, one quoted "re,im" cell per entry.
std::string matrix_to_csv(const OperatorMatrix& m);
Json matrix_to_json(const OperatorMatrix& m);

Json window_to_json(const FourierWindow& w);
Json basis_to_json(const ModelBasis& b);

}  // namespace hardymin
