#include "edalg/json_io.hpp"

#include <stdexcept>

namespace edalg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

Rational coeff_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("coefficient must be a \"p/q\" string or an integer");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

// Accepts "ab" as well as the display form "{a,b}".
Alphabet alphabet_from_string(std::string_view s) {
  std::uint8_t mask = 0;
  for (char ch : s) {
    if (ch == '{' || ch == '}' || ch == ',' || ch == ' ') continue;
    mask |= static_cast<std::uint8_t>(1U << static_cast<int>(letter_from_char(ch)));
  }
  if (mask == 0) bad("empty alphabet");
  return Alphabet(mask);
}

namespace {

std::string letters(Alphabet al) {
  std::string s;
  for (Letter l : {Letter::a, Letter::b, Letter::c})
    if (al.contains(l)) s += to_char(l);
  return s;
}

}  // namespace

Json to_json(const NCPoly& f) {
  Json out = Json::array();
  for (const auto& [w, c] : f) out.push_back({{"word", w.to_string()}, {"coeff", to_string(c)}});
  return out;
}

NCPoly ncpoly_from_json(const Json& j) {
  if (!j.is_array()) bad("polynomial must be a JSON array of {word, coeff}");
  std::vector<NCPoly::Term> terms;
  for (const auto& t : j) {
    const Json& w = field(t, "word");
    if (!w.is_string()) bad("\"word\" must be a string");
    terms.emplace_back(Word::parse(w.get<std::string>()), coeff_from(field(t, "coeff")));
  }
  return NCPoly::from_terms(std::move(terms));
}

Json to_json(const CommPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coeff", to_string(c)}});
  return {{"arity", f.arity()}, {"terms", terms}};
}

CommPoly commpoly_from_json(const Json& j) {
  const Json& ar = field(j, "arity");
  if (!ar.is_number_unsigned() && !(ar.is_number_integer() && ar.get<long>() >= 0)) bad("\"arity\" must be >= 0");
  CommPoly out(ar.get<std::size_t>());
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("\"terms\" must be an array");
  for (const auto& t : terms) {
    const Json& e = field(t, "exp");
    if (!e.is_array()) bad("\"exp\" must be an array");
    Exponent exp;
    for (const auto& x : e) {
      if (!x.is_number_integer() || x.get<long>() < 0) bad("exponents must be nonnegative integers");
      exp.push_back(x.get<unsigned>());
    }
    if (exp.size() != out.arity()) bad("exponent length does not match arity");
    out.add_term(exp, coeff_from(field(t, "coeff")));
  }
  return out;
}

Json to_json(const Derivation& d) {
  Json images = Json::object();
  for (Letter l : {Letter::a, Letter::b, Letter::c})
    if (d.alphabet().contains(l)) images[std::string(1, to_char(l))] = to_json(d.image(l));
  return {{"alphabet", letters(d.alphabet())}, {"images", images}};
}

Derivation derivation_from_json(const Json& j) {
  const Json& al = field(j, "alphabet");
  if (!al.is_string()) bad("\"alphabet\" must be a string");
  const Alphabet alphabet = alphabet_from_string(al.get<std::string>());
  std::array<NCPoly, 3> images;
  const Json& im = field(j, "images");
  if (!im.is_object()) bad("\"images\" must be an object");
  for (const auto& [key, value] : im.items()) {
    if (key.size() != 1) bad("image keys must be single letters");
    const Letter l = letter_from_char(key[0]);
    if (!alphabet.contains(l)) bad("image given for letter " + key + " outside the alphabet");
    images[static_cast<std::size_t>(l)] = ncpoly_from_json(value);
  }
  return Derivation(alphabet, std::move(images));
}

Json to_json(const BracketExpr& e) {
  switch (e.kind()) {
    case BracketExpr::Kind::generator:
      return {{"gen", {{"index", e.index()}, {"ad0", e.ad0()}}}};
    case BracketExpr::Kind::bracket:
      return {{"bracket", {to_json(e.lhs()), to_json(e.rhs())}}};
    case BracketExpr::Kind::concrete: {
      Json d = to_json(e.derivation());
      d["label"] = e.label();
      return {{"concrete", d}};
    }
    case BracketExpr::Kind::sum:
      break;
  }
  Json terms = Json::array();
  for (const auto& [c, sub] : e.terms()) terms.push_back({{"coeff", to_string(c)}, {"expr", to_json(sub)}});
  return {{"sum", terms}};
}

BracketExpr bracket_expr_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) bad("expression node must be an object with one key");
  const auto& [key, v] = *j.items().begin();
  if (key == "gen") {
    const Json& i = field(v, "index");
    const Json& a = v.contains("ad0") ? v.at("ad0") : Json(0);
    if (!i.is_number_integer() || !a.is_number_integer()) bad("generator indices must be integers");
    return BracketExpr::generator(i.get<int>(), a.get<int>());
  }
  if (key == "bracket") {
    if (!v.is_array() || v.size() != 2) bad("\"bracket\" needs exactly two operands");
    return BracketExpr::bracket(bracket_expr_from_json(v[0]), bracket_expr_from_json(v[1]));
  }
  if (key == "sum") {
    if (!v.is_array()) bad("\"sum\" must be an array");
    std::vector<BracketExpr::Term> terms;
    for (const auto& t : v) terms.emplace_back(coeff_from(field(t, "coeff")), bracket_expr_from_json(field(t, "expr")));
    return BracketExpr::sum(std::move(terms));
  }
  if (key == "concrete") {
    const Json& label = field(v, "label");
    if (!label.is_string()) bad("\"label\" must be a string");
    return BracketExpr::concrete(derivation_from_json(v), label.get<std::string>());
  }
  bad("unknown expression node \"" + key + "\"");
}

Json to_json(const RelationCertificate& c) {
  Json basis = Json::array();
  for (std::size_t n = 0; n < c.indices.size(); ++n) {
    Json entry = {{"index", c.indices[n]}, {"label", n < c.labels.size() ? c.labels[n] : std::string()}};
    if (n < c.coefficients.size()) entry["coeff"] = to_string(c.coefficients[n]);
    basis.push_back(entry);
  }
  Json transcript = Json::array();
  for (const auto& [name, poly] : c.transcript) transcript.push_back({{"name", name}, {"poly", to_json(poly)}});
  return {{"kind", kind_name(c.kind)},
          {"basis", basis},
          {"target", to_json(c.target)},
          {"residual", to_json(c.residual)},
          {"nullspace_dim", c.nullspace_dim},
          {"transcript", transcript}};
}

RelationCertificate certificate_from_json(const Json& j) {
  RelationCertificate c;
  const Json& kind = field(j, "kind");
  if (kind == "theta3-membership") c.kind = RelationCertificate::Kind::theta3_membership;
  else if (kind == "depth3-lift") c.kind = RelationCertificate::Kind::depth3_lift;
  else bad("unknown certificate kind");
  const Json& basis = field(j, "basis");
  if (!basis.is_array()) bad("\"basis\" must be an array");
  for (const auto& b : basis) {
    const Json& idx = field(b, "index");
    if (!idx.is_array() || idx.size() != 3) bad("basis index must be [i,j,k]");
    c.indices.push_back({idx[0].get<int>(), idx[1].get<int>(), idx[2].get<int>()});
    c.labels.push_back(b.value("label", std::string()));
    c.coefficients.push_back(coeff_from(field(b, "coeff")));
  }
  c.target = ncpoly_from_json(field(j, "target"));
  c.residual = ncpoly_from_json(field(j, "residual"));
  c.nullspace_dim = j.value("nullspace_dim", std::size_t{0});
  if (j.contains("transcript"))
    for (const auto& t : j.at("transcript"))
      c.transcript.emplace_back(field(t, "name").get<std::string>(), ncpoly_from_json(field(t, "poly")));
  return c;
}

Json to_json(const PeriodVector& pv) {
  Json coeffs = Json::object();
  for (const auto& [p, r] : pv.coefficients) coeffs[std::to_string(p)] = to_string(r);
  return {{"label", pv.label}, {"d", pv.d}, {"weight", pv.weight}, {"coefficients", coeffs}};
}

PeriodVector period_vector_from_json(const Json& j) {
  if (!j.is_object()) bad("period vector must be a JSON object");
  PeriodVector pv;
  const Json* coeffs = &j;
  if (j.contains("coefficients")) {
    coeffs = &j.at("coefficients");
    pv.label = j.value("label", std::string());
    pv.d = j.value("d", 2);
    pv.weight = j.value("weight", 0);
  }
  if (!coeffs->is_object()) bad("\"coefficients\" must map p to a rational");
  for (const auto& [key, value] : coeffs->items()) {
    int p = 0;
    try {
      std::size_t used = 0;
      p = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      bad("period index \"" + key + "\" is not an integer");
    }
    pv.coefficients[p] = coeff_from(value);
  }
  return pv;
}

}  // namespace edalg
