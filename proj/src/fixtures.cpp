#include "edalg/fixtures.hpp"

namespace edalg {

namespace {

PeriodVector periods(std::string label, int d, int weight, std::map<int, Rational> coeffs) {
  PeriodVector pv;
  pv.label = std::move(label);
  pv.d = d;
  pv.weight = weight;
  pv.coefficients = std::move(coeffs);
  return pv;
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;
  out.push_back({"delta-d2", "R_{Delta,2} = h_{2,8}^2 - 3 h_{4,6}^2 == 0 [Theta^3 E]",
                 periods("Delta", 2, 14, {{2, 1}, {4, -3}}), std::nullopt});
  out.push_back({"delta-d3", "R_{Delta,3} = 4 h_{2,10}^3 - 25 h_{4,8}^3 + 21 h_{6,6}^3 == 0 [Theta^3 E]",
                 periods("Delta", 3, 16, {{2, 4}, {4, -25}, {6, 21}}), std::nullopt});
  // Odd periods of E12 up to a common factor: r_m ~ B_{m+1} B_{11-m} / ((m+1)! (11-m)!),
  // r_m = r_{10-m}; the symmetric terms h_{p,q} = h_{q,p} are folded onto p <= q.
  out.push_back({"eisenstein-e12-d3", "h^3 combination weighted by the odd periods of E12 (expected not to lift)",
                 periods("E12", 3, 16,
                         {{2, Rational(1, 287400960)}, {4, Rational(1, 435456000)}, {6, Rational(1, 914457600)}}),
                 std::nullopt});
  out.push_back({"stated-lift", "-345/8 [e6,[e6,e4]] + 231/20 [e4,[e8,e2]]", std::nullopt,
                 "-345/8*[e6,[e6,e4]] + 231/20*[e4,[e8,e2]]"});
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build();
  return all;
}

const Fixture& fixture(std::string_view name) {
  std::string known;
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
    known += (known.empty() ? "" : ", ") + f.name;
  }
  throw std::invalid_argument("unknown fixture \"" + std::string(name) + "\" (known: " + known + ")");
}

BracketExpr fixture_expression(const Fixture& f) {
  if (f.periods) return pollack_combination(*f.periods);
  return parse_bracket_expr(*f.expression);
}

}  // namespace edalg
