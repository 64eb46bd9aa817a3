#pragma once

#include <json.hpp>

#include "edalg/bracket_expr.hpp"
#include "edalg/certificate.hpp"
#include "edalg/commpoly.hpp"
#include "edalg/ncpoly.hpp"
#include "edalg/relation.hpp"

namespace edalg {

using Json = nlohmann::json;

// All readers throw std::invalid_argument on malformed input.

Json to_json(const NCPoly& f);
NCPoly ncpoly_from_json(const Json& j);

Json to_json(const CommPoly& f);
CommPoly commpoly_from_json(const Json& j);

Json to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j);

Json to_json(const BracketExpr& e);
BracketExpr bracket_expr_from_json(const Json& j);

Json to_json(const RelationCertificate& c);
RelationCertificate certificate_from_json(const Json& j);

Json to_json(const PeriodVector& pv);
/// Accepts {"label":..,"d":..,"weight":..,"coefficients":{"p":"r",..}}; a bare
/// {"p":"r",..} object is read as the coefficients alone.
PeriodVector period_vector_from_json(const Json& j);

Alphabet alphabet_from_string(std::string_view s);

}  // namespace edalg
