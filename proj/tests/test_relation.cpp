#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edalg/bracket_expr.hpp"
#include "edalg/certificate.hpp"
#include "edalg/derivation.hpp"
#include "edalg/fixtures.hpp"
#include "edalg/generators.hpp"
#include "edalg/lie.hpp"
#include "edalg/relation.hpp"
#include "reference.hpp"

using namespace edalg;

namespace {

NCPoly P(const char* s) { return NCPoly::parse(s); }
const NCPoly a = NCPoly::letter(Letter::a);
const NCPoly b = NCPoly::letter(Letter::b);

BracketExpr E(const char* s) { return parse_bracket_expr(s); }

// [e_i,[e_j,e_k]](a) in the reference algebra.
ref::Poly ref_triple(int i, int j, int k) {
  const ref::Der ei = ref::eps(i), ej = ref::eps(j), ek = ref::eps(k);
  auto inner = [&](const ref::Poly& f) {
    return ref::add(ref::apply(ej, ref::apply(ek, f)), ref::apply(ek, ref::apply(ej, f)), -1);
  };
  const ref::Poly x = ref::letter('a');
  return ref::add(ref::apply(ei, inner(x)), inner(ref::apply(ei, x)), -1);
}

const Derivation& delta3() {
  static const Derivation d = eval_bracket_expr(fixture_expression(fixture("delta-d3")), Family::epsilon);
  return d;
}

}  // namespace

TEST_CASE("bracket expression text") {
  for (const char* s : {"e4", "E0^1.e12", "[e4,[e6,e8]]", "-345/8*[e6,[e6,e4]] + 231/20*[e4,[e8,e2]]", "0",
                        "2*e4 - e6"})
    CHECK(E(s).to_string() == s);
  CHECK(E(" [ e4 , e6 ] ") == BracketExpr::bracket(BracketExpr::generator(4), BracketExpr::generator(6)));
  CHECK(E("(e4 + e6) - e6") == E("e4"));
  CHECK(E("e4 + e4 - 2*e4").is_zero());
  CHECK(E("-e4").to_string() == "-e4");
  CHECK(E("E0^0.e4") == E("e4"));
  Gen g(89);
  for (int n = 0; n < 50; ++n) {
    const BracketExpr x = g.expr(3);
    CHECK(E(x.to_string().c_str()) == x);
  }
}

TEST_CASE("bracket expression errors") {
  for (const char* s : {"[e4,e6", "e", "e4 +", "x", "[e4 e6]", "3*", "E0^.e4", "h(3,4,2)", "h(4,4,9)", "e4 e6"}) {
    CHECK_THROWS_AS(E(s), std::invalid_argument);
  }
  try {
    E("[e4,e6");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
    CHECK(std::string(e.what()).find("at offset 6") != std::string::npos);
  }
  CHECK_THROWS_AS(eval_bracket_expr(E("e3"), Family::epsilon), std::invalid_argument);
}

TEST_CASE("h elements") {
  CHECK(h_element(2, 8, 2) == E("[e4,e10]"));
  // d = 3: [g(p+2,0), g(q+2,1)] / q - [g(p+2,1), g(q+2,0)] / p
  CHECK(h_element(4, 6, 3) == E("1/6*[e6,E0^1.e8] - 1/4*[E0^1.e6,e8]"));
  CHECK(h_element(2, 2, 4) == E("2*[e4,E0^2.e4] - 1/2*[E0^1.e4,E0^1.e4] + 2*[E0^2.e4,e4]"));
  CHECK_THROWS_AS(h_element(3, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(h_element(2, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(h_element(2, 4, 1), std::invalid_argument);
  PeriodVector pv;
  pv.d = 3;
  pv.weight = 16;
  pv.coefficients = {{2, 4}, {4, -25}, {6, 21}};
  CHECK(pollack_combination(pv) == E("4*h(2,10,3) - 25*h(4,8,3) + 21*h(6,6,3)"));
  pv.coefficients = {{3, 1}};
  CHECK_THROWS_AS(pollack_combination(pv), std::invalid_argument);
}

TEST_CASE("evaluation") {
  CHECK(eval_bracket_expr(E("e4"), Family::epsilon) == epsilon(4));
  CHECK(eval_bracket_expr(E("E0^2.e6"), Family::epsilon) == der_ad_pow(epsilon(0), 2, epsilon(6)));
  CHECK(eval_bracket_expr(E("[e4,e6]"), Family::epsilon_tilde) == der_bracket(epsilon_tilde(4), epsilon_tilde(6)));
  CHECK(eval_bracket_expr(E("0"), Family::epsilon).is_zero());
  CHECK(eval_bracket_expr(E("[e8,e2]"), Family::epsilon).is_zero());
  CHECK(!eval_bracket_expr(E("[e4,e6]"), Family::epsilon).is_zero());
  const Derivation d = eval_bracket_expr(E("2*e4 - [e2,e4]"), Family::epsilon);
  CHECK(d == 2 * epsilon(4) - der_bracket(epsilon(2), epsilon(4)));
}

TEST_CASE("monomial tests") {
  CHECK(bb_monomial_test(P("ab - ba")));
  CHECK(bb_monomial_test(P("aab + abb")));
  CHECK(!bb_monomial_test(P("ab + bab")));
  CHECK(!bb_monomial_test(P("b")));
  CHECK(cacb_monomial_test(P("acab")));
  CHECK(!cacb_monomial_test(P("cacb")));
  CHECK(!cacb_monomial_test(P("aacaacb")));
  CHECK(cacb_monomial_test(P("acacab")));
}

TEST_CASE("triple brackets") {
  CHECK(theta3_basis_element(1, 1, 1).is_zero());
  CHECK(theta3_basis_element(1, 2, 3) ==
        lie_bracket(ad_pow(a, 1, b), lie_bracket(ad_pow(a, 2, b), ad_pow(a, 3, b))));
  CHECK(triple_bracket_on_a(4, 6, 8) == ref::to(ref_triple(4, 6, 8)));
  CHECK(triple_bracket_on_a(4, 4, 4).is_zero());
  CHECK(triple_bracket_on_a(4, 6, 8) == der_bracket(epsilon(4), der_bracket(epsilon(6), epsilon(8))).image(Letter::a));
  const NCPoly t = poisson_triple(4, 6, 8);
  CHECK(t == poisson(alpha_tilde(4), poisson(alpha_tilde(6), alpha_tilde(8))));
  CHECK(grading(t).depth_c == std::optional<std::size_t>(3));
}

TEST_CASE("delta relation in depth 3") {
  // The weight-16 relation, expanded independently on a.
  const ref::Poly rhs = ref::add(ref::add(ref::Poly{}, ref_triple(6, 6, 4), Rational(-345, 8)), ref_triple(4, 8, 4),
                                 Rational(231, 20));
  CHECK(delta3().image(Letter::a) == ref::to(rhs));
  const auto cert = theta3_membership_depth3(delta3());
  REQUIRE(cert);
  CHECK(cert->kind == RelationCertificate::Kind::theta3_membership);
  CHECK(verify(*cert));
  CHECK(bb_monomial_test(delta3().image(Letter::a)));
  CHECK(is_push_invariant(delta3().image(Letter::a)));
}

TEST_CASE("lift of the delta relation") {
  const RelationCertificate cert = lift_to_depth3(fixture_expression(fixture("delta-d3")));
  CHECK(cert.kind == RelationCertificate::Kind::depth3_lift);
  CHECK(verify(cert));
  CHECK(cert.residual.is_zero());
  CHECK(cert.indices.size() == cert.coefficients.size());
  CHECK(cert.labels.size() == cert.coefficients.size());
  // The combination found must reproduce the target independently.
  ref::Poly sum;
  for (std::size_t n = 0; n < cert.indices.size(); ++n) {
    const auto [i, j, k] = cert.indices[n];
    sum = ref::add(sum, ref_triple(i, j, k), cert.coefficients[n]);
  }
  CHECK(ref::to(sum) == delta3().image(Letter::a));
  CHECK(cert.transcript.size() >= 3);

  RelationCertificate bad = cert;
  bad.coefficients.front() += 1;
  CHECK(!verify(bad));
  bad = cert;
  bad.residual = a;
  CHECK(!verify(bad));
}

TEST_CASE("eisenstein combination does not lift") {
  const BracketExpr e = fixture_expression(fixture("eisenstein-e12-d3"));
  CHECK(!theta3_membership_depth3(eval_bracket_expr(e, Family::epsilon)));
  try {
    lift_to_depth3(e);
    FAIL("expected the pipeline to stop");
  } catch (const PipelineError& err) {
    CHECK(err.stage() == "theta3");
  }
}

TEST_CASE("lift of a plain triple bracket") {
  const RelationCertificate cert = lift_to_depth3(E("[e4,[e6,e8]]"));
  CHECK(verify(cert));
  ref::Poly sum;
  for (std::size_t n = 0; n < cert.indices.size(); ++n) {
    const auto [i, j, k] = cert.indices[n];
    sum = ref::add(sum, ref_triple(i, j, k), cert.coefficients[n]);
  }
  CHECK(ref::to(sum) == ref::to(ref_triple(4, 6, 8)));
  const RelationCertificate zero = lift_to_depth3(E("[e8,e2]"));
  CHECK(zero.coefficients.empty());
  CHECK(verify(zero));
}

TEST_CASE("division by a") {
  Gen g(97);
  for (int n = 0; n < 20; ++n) {
    const std::size_t depth = static_cast<std::size_t>(g.uniform(1, 3));
    const NCPoly x = g.lie(Alphabet::ac(), static_cast<std::size_t>(g.uniform(static_cast<int>(2 * depth), 10)), depth);
    CHECK(divide_by_a(lie_bracket(a, x)) == x);
  }
  CHECK_THROWS(divide_by_a(P("c")));
}

TEST_CASE("poisson triple coordinates") {
  const NCPoly q = Rational(2) * poisson_triple(4, 4, 8) - Rational(1, 3) * poisson_triple(6, 4, 6);
  const PoissonCoordinates pc = express_in_poisson_triples(q);
  REQUIRE(pc.indices.size() == pc.coefficients.size());
  NCPoly back;
  for (std::size_t n = 0; n < pc.indices.size(); ++n) {
    const auto [i, j, k] = pc.indices[n];
    back += pc.coefficients[n] * poisson_triple(i, j, k);
  }
  CHECK(back == q);
  for (std::size_t n = 1; n < pc.indices.size(); ++n) CHECK(pc.indices[n - 1] < pc.indices[n]);
}

TEST_CASE("bialternal dimensions") {
  for (int n : {9, 11, 13, 15}) CHECK(bialternal_dimension(n) == formula_dimension(n));
  CHECK(formula_dimension(3) == 0);
  CHECK(formula_dimension(11) == 1);
  CHECK(formula_dimension(17) == 4);
  CHECK(formula_dimension(19) == 5);
}

TEST_CASE("fixtures") {
  CHECK(fixtures().size() == 4);
  CHECK(fixture("delta-d2").periods->coefficients.at(4) == -3);
  CHECK(fixture_expression(fixture("stated-lift")).to_string() == "-345/8*[e6,[e6,e4]] + 231/20*[e4,[e8,e2]]");
  try {
    fixture("nope");
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("delta-d3") != std::string::npos);
  }
  // The stated lift collapses because [e8,e2] vanishes.
  const Derivation lit = eval_bracket_expr(fixture_expression(fixture("stated-lift")), Family::epsilon);
  CHECK(lit == eval_bracket_expr(E("-345/8*[e6,[e6,e4]]"), Family::epsilon));
  CHECK(lit != delta3());
}
