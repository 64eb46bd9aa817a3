#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edalg/acceptance.hpp"
#include "edalg/certificate.hpp"
#include "edalg/derivation.hpp"
#include "edalg/fixtures.hpp"
#include "edalg/generators.hpp"
#include "edalg/json_io.hpp"
#include "edalg/relation.hpp"

using namespace edalg;

namespace {

NCPoly P(const char* s) { return NCPoly::parse(s); }

}  // namespace

TEST_CASE("ncpoly round trip") {
  Gen g(101);
  for (int n = 0; n < 40; ++n) {
    const NCPoly f = g.poly(Alphabet::abc(), static_cast<std::size_t>(g.uniform(0, 6)), 5);
    const std::string text = to_json(f).dump();
    CHECK(ncpoly_from_json(Json::parse(text)) == f);
    CHECK(to_json(ncpoly_from_json(Json::parse(text))).dump() == text);
  }
  CHECK(to_json(NCPoly()).dump() == "[]");
  // Input order and unreduced coefficients are accepted.
  CHECK(ncpoly_from_json(Json::parse(R"([{"word":"ba","coeff":"2/4"},{"word":"ab","coeff":"-1"},{"word":"ba","coeff":"1/2"}])")) ==
        P("-ab + ba"));
}

TEST_CASE("commpoly round trip") {
  CommPoly f = CommPoly::variable(3, 0) * CommPoly::variable(3, 2) - CommPoly::constant(3, Rational(5, 7));
  const Json j = to_json(f);
  CHECK(j.dump() == R"({"arity":3,"terms":[{"coeff":"-5/7","exp":[0,0,0]},{"coeff":"1/1","exp":[1,0,1]}]})");
  CHECK(commpoly_from_json(j) == f);
  CHECK(commpoly_from_json(Json::parse(R"({"arity":0,"terms":[]})")) == CommPoly(0));
  CHECK_THROWS_AS(commpoly_from_json(Json::parse(R"({"arity":2,"terms":[{"exp":[1],"coeff":"1"}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(commpoly_from_json(Json::parse(R"({"arity":-1,"terms":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(commpoly_from_json(Json::parse(R"({"terms":[]})")), std::invalid_argument);
}

TEST_CASE("derivation round trip") {
  for (const Derivation& d : {epsilon(4), epsilon_tilde(6), Derivation::zero(Alphabet::ab())}) {
    CHECK(derivation_from_json(to_json(d)) == d);
  }
  CHECK_THROWS_AS(derivation_from_json(Json::parse(R"({"alphabet":"ab","images":{"c":[]}})")), std::invalid_argument);
  CHECK_THROWS_AS(derivation_from_json(Json::parse(R"({"alphabet":"xy","images":{}})")), std::invalid_argument);
  CHECK(alphabet_from_string("abc") == Alphabet::abc());
  CHECK(alphabet_from_string("ac") == Alphabet::ac());
}

TEST_CASE("bracket expression round trip") {
  Gen g(103);
  for (int n = 0; n < 40; ++n) {
    const BracketExpr e = g.expr(3);
    CHECK(bracket_expr_from_json(to_json(e)) == e);
  }
  const BracketExpr e = parse_bracket_expr("1/2*[e4,E0^1.e6]");
  CHECK(to_json(e).dump() ==
        R"({"sum":[{"coeff":"1/2","expr":{"bracket":[{"gen":{"ad0":0,"index":4}},{"gen":{"ad0":1,"index":6}}]}}]})");
  const BracketExpr c = BracketExpr::concrete(epsilon(4), "D");
  const BracketExpr back = bracket_expr_from_json(to_json(c));
  CHECK(back.kind() == BracketExpr::Kind::concrete);
  CHECK(back.derivation() == epsilon(4));
  CHECK(back.label() == "D");
  CHECK_THROWS_AS(bracket_expr_from_json(Json::parse(R"({"bracket":[{"gen":{"index":4,"ad0":0}}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(bracket_expr_from_json(Json::parse(R"({"what":1})")), std::invalid_argument);
}

TEST_CASE("certificate round trip") {
  const RelationCertificate cert = lift_to_depth3(parse_bracket_expr("[e4,[e6,e8]]"));
  const Json j = to_json(cert);
  CHECK(j.at("kind") == "depth3-lift");
  const RelationCertificate back = certificate_from_json(j);
  CHECK(verify(back));
  CHECK(to_json(back) == j);
  Json tampered = j;
  tampered["basis"][0]["coeff"] = "12345/1";
  CHECK(!verify(certificate_from_json(tampered)));
  tampered = j;
  tampered["kind"] = "other";
  CHECK_THROWS_AS(certificate_from_json(tampered), std::invalid_argument);
}

TEST_CASE("period vectors") {
  const PeriodVector pv = *fixture("delta-d3").periods;
  const PeriodVector back = period_vector_from_json(to_json(pv));
  CHECK(back.coefficients == pv.coefficients);
  CHECK(back.d == 3);
  CHECK(back.weight == 16);
  const PeriodVector bare = period_vector_from_json(Json::parse(R"({"2":"1","4":"-3"})"));
  CHECK(bare.coefficients.size() == 2);
  CHECK(bare.coefficients.at(4) == -3);
  CHECK_THROWS_AS(period_vector_from_json(Json::parse(R"({"x":"1"})")), std::invalid_argument);
  CHECK_THROWS_AS(period_vector_from_json(Json::parse(R"([1,2])")), std::invalid_argument);
}

TEST_CASE("acceptance selection") {
  AcceptanceOptions opt;
  opt.only = {"dims"};
  const AcceptanceReport r = run_acceptance_suite(opt);
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].id == "A7");
  CHECK(r.results[0].passed);
  opt.only = {"A9", "A1"};
  const AcceptanceReport two = run_acceptance_suite(opt);
  REQUIRE(two.results.size() == 2);
  CHECK(two.results[0].id == "A1");
  CHECK(two.results[1].id == "A9");
  CHECK(two.all_passed());
  opt.only = {"A10"};
  CHECK_THROWS_AS(run_acceptance_suite(opt), std::invalid_argument);
  CHECK(acceptance_criteria().size() == 9);
}

TEST_CASE("acceptance catches a corrupted e4") {
  AcceptanceOptions opt;
  opt.only = {"A1"};
  opt.epsilon_provider = [](int k) {
    Derivation d = epsilon(k);
    if (k != 4) return d;
    return Derivation(Alphabet::ab(), {d.image(Letter::a), d.image(Letter::b) + P("aabab - ababa"), NCPoly()});
  };
  const AcceptanceReport r = run_acceptance_suite(opt);
  REQUIRE(r.results.size() == 1);
  CHECK(!r.results[0].passed);
  CHECK(!r.results[0].data.at("failures").empty());
}

TEST_CASE("acceptance reports are deterministic") {
  AcceptanceOptions opt;
  opt.only = {"A3", "A8"};
  opt.seed = 7;
  const std::string x = to_json(run_acceptance_suite(opt)).dump();
  const std::string y = to_json(run_acceptance_suite(opt)).dump();
  CHECK(x == y);
  CHECK(x.find("seconds") == std::string::npos);
}
