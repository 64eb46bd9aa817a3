#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "edalg/generators.hpp"
#include "edalg/json_io.hpp"
#include "edalg/lie.hpp"
#include "edalg/linalg.hpp"
#include "edalg/derivation.hpp"
#include "reference.hpp"

using namespace edalg;

namespace {

NCPoly P(const char* s) { return NCPoly::parse(s); }
const NCPoly a = NCPoly::letter(Letter::a);
const NCPoly b = NCPoly::letter(Letter::b);
const NCPoly c = NCPoly::letter(Letter::c);

Integer binom(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Lyndon words by brute force: strictly smaller than every proper rotation.
std::size_t brute_lyndon_count(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::string w;
    for (std::size_t i = 0; i < n; ++i) w += (mask >> (n - 1 - i)) & 1 ? 'b' : 'a';
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) ok = w < w.substr(i) + w.substr(0, i);
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(to_string(Rational(4)) == "4/1");
  CHECK(to_string(Rational(-3, 7)) == "-3/7");
  CHECK(to_display(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("word order and packing") {
  CHECK(Word::parse("b") < Word::parse("aa"));
  CHECK(Word::parse("ab") < Word::parse("ba"));
  CHECK(Word::parse("ac") > Word::parse("ab"));
  CHECK(Word::parse("") < Word::parse("a"));
  const Word w = Word::parse("abcab");
  CHECK(w.to_string() == "abcab");
  CHECK(w.size() == 5);
  CHECK(w.weight() == 6);
  CHECK(w.count(Letter::b) == 2);
  CHECK(w.sub(1, 3).to_string() == "bca");
  CHECK((Word::parse("ab") + Word::parse("c")).to_string() == "abc");
  CHECK_THROWS_AS(Word::parse("abd"), std::invalid_argument);
  CHECK_THROWS_AS(Word::power(Letter::a, 30), std::length_error);
  CHECK_THROWS_AS(Word::power(Letter::a, 20) + Word::power(Letter::b, 10), std::length_error);
}

TEST_CASE("deg-lex order matches string comparison") {
  Gen g(11);
  for (int n = 0; n < 200; ++n) {
    std::string x, y;
    for (int i = g.uniform(0, 6); i > 0; --i) x += "abc"[g.uniform(0, 2)];
    for (int i = g.uniform(0, 6); i > 0; --i) y += "abc"[g.uniform(0, 2)];
    const bool want = x.size() != y.size() ? x.size() < y.size() : x < y;
    CHECK((Word::parse(x) < Word::parse(y)) == want);
  }
}

TEST_CASE("lie bracket") {
  CHECK(lie_bracket(a, a).is_zero());
  CHECK(lie_bracket(a, b) == P("ab - ba"));
  CHECK(lie_bracket(a, lie_bracket(a, b)) == P("aab - 2aba + baa"));
}

TEST_CASE("ad powers") {
  CHECK(ad_pow(a, 0, b) == b);
  CHECK(ad_pow(a, 2, b) == P("aab - 2aba + baa"));
  for (unsigned n = 0; n <= 8; ++n) {
    NCPoly want;
    for (unsigned k = 0; k <= n; ++k) {
      const std::string w = std::string(n - k, 'a') + "b" + std::string(k, 'a');
      want += NCPoly::monomial(Word::parse(w), Rational(k % 2 ? -binom(n, k) : binom(n, k)));
    }
    CHECK(ad_pow(a, n, b) == want);
  }
}

TEST_CASE("enveloping action") {
  const NCPoly f = P("ab - 2ba");
  CHECK(uea_act(NCPoly::one(), f) == f);
  CHECK(uea_act(P("aa"), b) == ad_pow(a, 2, b));
  CHECK(uea_act(P("ac"), b) == lie_bracket(a, lie_bracket(c, b)));
  Gen g(5);
  for (int n = 0; n < 20; ++n) {
    const NCPoly u = g.poly(Alphabet::abc(), 2, 2), v = g.poly(Alphabet::abc(), 2, 2);
    const NCPoly h = g.poly(Alphabet::abc(), 2, 3);
    CHECK(uea_act(u * v, h) == uea_act(u, uea_act(v, h)));
  }
}

TEST_CASE("phi") {
  CHECK(phi(c) == P("ab - ba"));
  CHECK(phi(P("ac")) == P("aab - aba"));
  CHECK(phi(ad_pow(a, 2, c)) == ad_pow(a, 3, b));
  Gen g(7);
  for (int n = 0; n < 30; ++n) {
    const NCPoly f = g.poly(Alphabet::abc(), static_cast<std::size_t>(g.uniform(1, 4)), 3);
    const NCPoly h = g.poly(Alphabet::abc(), static_cast<std::size_t>(g.uniform(1, 4)), 3);
    CHECK(phi(lie_bracket(f, h)) == lie_bracket(phi(f), phi(h)));
    CHECK(ref::to(ref::phi(ref::from(f))) == phi(f));
  }
}

TEST_CASE("projection onto b-terminated monomials") {
  CHECK(pi_b(P("ab - ba")) == P("ab"));
  CHECK(pi_b(P("aab - 2aba + baa")) == P("aab"));
  CHECK(pi_b(P("aaa")).is_zero());
  CHECK(pi_c(P("ac - ca")) == P("ac"));
  const NCPoly f = P("ab - 3ba + abb");
  CHECK(pi_b(pi_b(f)) == pi_b(f));
}

TEST_CASE("section") {
  CHECK(sec(b) == b);
  CHECK(sec(P("ab")) == P("ab - ba"));
  // ad_a L_b L_b (1) = [a, bb]
  CHECK(sec(P("abb")) == P("abb - bba"));
  CHECK(sec(P("ac"), Letter::c) == P("ac - ca"));
  CHECK_THROWS_AS(sec(P("ba")), std::invalid_argument);
  CHECK_THROWS_AS(sec(P("acb")), std::invalid_argument);
}

TEST_CASE("section inverts the projection on Lie elements") {
  Gen g(13);
  for (std::size_t depth = 1; depth <= 3; ++depth)
    for (std::size_t weight = depth + 1; weight <= 10; ++weight)
      for (int n = 0; n < 2; ++n) {
        const NCPoly f = g.lie(Alphabet::ab(), weight, depth);
        if (f.is_zero()) continue;
        CHECK(sec(pi_b(f)) == f);
      }
}

TEST_CASE("grading") {
  Grading g = grading(P("ab - ba"));
  CHECK(g.weight == std::optional<std::size_t>(2));
  CHECK(g.depth_b == std::optional<std::size_t>(1));
  CHECK(!g.zero);
  CHECK(!grading(P("a + ab")).weight);
  // Each bracket in e4(b) has three a's and two b's.
  g = grading(epsilon(4).image(Letter::b));
  CHECK(g.weight == std::optional<std::size_t>(5));
  CHECK(g.depth_b == std::optional<std::size_t>(2));
  CHECK(grading(P("acc")).weight == std::optional<std::size_t>(5));
  CHECK(grading(NCPoly()).zero);
}

TEST_CASE("lyndon bases") {
  auto basis = lyndon_basis(Alphabet::ab(), 2, 1);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == P("ab - ba"));
  basis = lyndon_basis(Alphabet::ab(), 3, 1);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == lie_bracket(a, lie_bracket(a, b)));
  CHECK(lyndon_basis(Alphabet::ab(), 4, 4).empty());
  for (std::size_t n = 1; n <= 10; ++n) {
    std::size_t total = 0;
    for (std::size_t d = 0; d <= n; ++d) total += lyndon_words(Alphabet::ab(), n, d).size();
    CHECK(total == brute_lyndon_count(n));
    CHECK(witt_dimension(n) == brute_lyndon_count(n));
  }
  const auto ac = lyndon_words(Alphabet::ac(), 7, 2);
  for (Word w : ac) {
    CHECK(w.weight() == 7);
    CHECK(w.count(Letter::c) == 2);
  }
  CHECK(ac.size() == 2);
  CHECK_THROWS_AS(lyndon_words(Alphabet::abc(), 3, 1), std::invalid_argument);
}

TEST_CASE("lyndon basis elements are independent") {
  for (std::size_t n = 2; n <= 9; ++n)
    for (std::size_t d = 1; d < n; ++d) {
      const auto basis = lyndon_basis(Alphabet::ab(), n, d);
      std::map<Word, std::size_t> index;
      SparseMat m;
      for (const auto& f : basis) {
        std::vector<SparseVec::Entry> e;
        for (const auto& [w, coeff] : f) e.emplace_back(index.try_emplace(w, index.size()).first->second, coeff);
        m.rows.push_back(SparseVec::from_entries(std::move(e)));
      }
      m.cols = index.size();
      CHECK(rref(m).rank() == basis.size());
    }
}

TEST_CASE("lie element test") {
  CHECK(is_lie_element(P("ab - ba")));
  CHECK(!is_lie_element(P("ab")));
  CHECK(is_lie_element(epsilon(4).image(Letter::b)));
  CHECK(is_lie_element(NCPoly()));
  CHECK_THROWS_AS(is_lie_element(P("a + ab")), std::invalid_argument);
  // Agrees with membership in the span of the Lyndon basis.
  Gen g(17);
  for (int n = 0; n < 25; ++n) {
    const std::size_t weight = static_cast<std::size_t>(g.uniform(2, 6));
    const std::size_t depth = static_cast<std::size_t>(g.uniform(1, static_cast<int>(weight) - 1));
    NCPoly f = g.lie(Alphabet::ab(), weight, depth);
    if (n % 2) f += g.poly(Alphabet::ab(), weight, 1).filter([&](Word w) { return w.count(Letter::b) == depth; });
    const auto basis = lyndon_basis(Alphabet::ab(), weight, depth);
    std::map<Word, std::size_t> index;
    auto vec = [&](const NCPoly& p) {
      std::vector<SparseVec::Entry> e;
      for (const auto& [w, coeff] : p) e.emplace_back(index.try_emplace(w, index.size()).first->second, coeff);
      return SparseVec::from_entries(std::move(e));
    };
    std::vector<SparseVec> cols;
    for (const auto& x : basis) cols.push_back(vec(x));
    const SparseVec t = vec(f);
    CHECK(is_lie_element(f) == membership(t, cols, index.size()).has_value());
  }
}

TEST_CASE("antisymmetry and jacobi") {
  Gen g(19);
  for (int n = 0; n < 30; ++n) {
    const NCPoly f = g.poly(Alphabet::ab(), static_cast<std::size_t>(g.uniform(1, 3)), 4);
    const NCPoly h = g.poly(Alphabet::ab(), static_cast<std::size_t>(g.uniform(1, 3)), 4);
    const NCPoly k = g.poly(Alphabet::ab(), static_cast<std::size_t>(g.uniform(1, 2)), 3);
    CHECK((lie_bracket(f, h) + lie_bracket(h, f)).is_zero());
    CHECK((lie_bracket(f, lie_bracket(h, k)) + lie_bracket(h, lie_bracket(k, f)) + lie_bracket(k, lie_bracket(f, h)))
              .is_zero());
  }
}

TEST_CASE("polynomial text and json") {
  const NCPoly f = P("aab - 2aba + 1/3*c - 4");
  CHECK(f.coeff(Word::parse("aba")) == -2);
  CHECK(f.coeff(Word()) == -4);
  CHECK(NCPoly::parse(f.to_string()) == f);
  const Json j = to_json(f);
  CHECK(j.dump() ==
        R"([{"coeff":"-4/1","word":""},{"coeff":"1/3","word":"c"},{"coeff":"1/1","word":"aab"},{"coeff":"-2/1","word":"aba"}])");
  CHECK(ncpoly_from_json(j) == f);
  CHECK(NCPoly::parse("0").is_zero());
  CHECK((P("ab") - P("ab")).is_zero());
  CHECK_THROWS_AS(NCPoly::parse("ab +"), std::invalid_argument);
  CHECK_THROWS_AS(ncpoly_from_json(Json::parse(R"([{"word":"ad","coeff":"1"}])")), std::invalid_argument);
  CHECK_THROWS_AS(ncpoly_from_json(Json::parse(R"([{"word":"ab"}])")), std::invalid_argument);
}
