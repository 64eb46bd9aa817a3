#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edalg/derivation.hpp"
#include "edalg/generators.hpp"
#include "edalg/lie.hpp"
#include "reference.hpp"

using namespace edalg;

namespace {

NCPoly P(const char* s) { return NCPoly::parse(s); }
const NCPoly a = NCPoly::letter(Letter::a);
const NCPoly b = NCPoly::letter(Letter::b);
const NCPoly c = NCPoly::letter(Letter::c);

ref::Der ref_der(const Derivation& d) {
  ref::Der out;
  for (Letter l : {Letter::a, Letter::b, Letter::c})
    if (!d.image(l).is_zero()) out[to_char(l)] = ref::from(d.image(l));
  return out;
}

}  // namespace

TEST_CASE("epsilon images") {
  CHECK(epsilon(0).image(Letter::a) == b);
  CHECK(epsilon(0).image(Letter::b).is_zero());
  CHECK(epsilon(2).image(Letter::a) == ad_pow(a, 2, b));
  CHECK(epsilon(2).image(Letter::b) == lie_bracket(b, lie_bracket(a, b)));
  CHECK(epsilon(4).image(Letter::b) ==
        lie_bracket(b, ad_pow(a, 3, b)) - lie_bracket(lie_bracket(a, b), ad_pow(a, 2, b)));
  for (int k = 0; k <= 12; k += 2) {
    const ref::Der want = ref::eps(k);
    CHECK(epsilon(k).image(Letter::a) == ref::to(want.at('a')));
    CHECK(epsilon(k).image(Letter::b) == (want.count('b') ? ref::to(want.at('b')) : NCPoly()));
  }
  CHECK_THROWS_AS(epsilon(3), std::invalid_argument);
  CHECK_THROWS_AS(epsilon(-2), std::invalid_argument);
}

TEST_CASE("epsilon tilde images") {
  CHECK(epsilon_tilde(0).image(Letter::a) == b);
  CHECK(epsilon_tilde(0).image(Letter::b).is_zero());
  CHECK(epsilon_tilde(2).image(Letter::a) == lie_bracket(a, c));
  CHECK(epsilon_tilde(2).image(Letter::b) == lie_bracket(b, c));
  for (int k = 2; k <= 12; k += 2) {
    const ref::Der want = ref::eps_tilde(k);
    CHECK(epsilon_tilde(k).image(Letter::a) == ref::to(want.at('a')));
    CHECK(epsilon_tilde(k).image(Letter::b) == ref::to(want.at('b')));
    CHECK(epsilon_tilde(k).image(Letter::c).is_zero());
  }
  CHECK_THROWS_AS(epsilon_tilde(5), std::invalid_argument);
}

TEST_CASE("epsilon 2 is minus ad of [a,b]") {
  Gen g(23);
  const NCPoly ab = lie_bracket(a, b);
  for (int n = 0; n < 20; ++n) {
    const NCPoly f = g.poly(Alphabet::ab(), static_cast<std::size_t>(g.uniform(1, 5)), 4);
    CHECK(epsilon(2)(f) == -lie_bracket(ab, f));
  }
}

TEST_CASE("epsilons kill [a,b]") {
  const NCPoly ab = lie_bracket(a, b);
  for (int k = 0; k <= 14; k += 2) CHECK(epsilon(k)(ab).is_zero());
}

TEST_CASE("phi intertwines the two families") {
  Gen g(29);
  for (int k = 0; k <= 10; k += 2)
    for (int n = 0; n < 6; ++n) {
      const NCPoly f = g.poly(Alphabet::abc(), static_cast<std::size_t>(g.uniform(1, 4)), 3);
      CHECK(phi(epsilon_tilde(k)(f)) == epsilon(k)(phi(f)));
    }
}

TEST_CASE("apply agrees with the reference") {
  Gen g(31);
  for (int n = 0; n < 40; ++n) {
    const Derivation d(Alphabet::abc(), {g.poly(Alphabet::abc(), 3, 3), g.poly(Alphabet::ab(), 2, 2),
                                         g.poly(Alphabet::abc(), 4, 3)});
    const NCPoly f = g.poly(Alphabet::abc(), static_cast<std::size_t>(g.uniform(1, 5)), 4);
    CHECK(d(f) == ref::to(ref::apply(ref_der(d), ref::from(f))));
  }
}

TEST_CASE("leibniz rule") {
  Gen g(37);
  for (int n = 0; n < 30; ++n) {
    const int k = 2 * g.uniform(0, 4);
    const Derivation d = n % 2 ? epsilon(k) : epsilon_tilde(k);
    const Alphabet al = n % 2 ? Alphabet::ab() : Alphabet::abc();
    const NCPoly f = g.poly(al, static_cast<std::size_t>(g.uniform(1, 3)), 3);
    const NCPoly h = g.poly(al, static_cast<std::size_t>(g.uniform(1, 3)), 3);
    CHECK(d(f * h) == d(f) * h + f * d(h));
    CHECK(d(lie_bracket(f, h)) == lie_bracket(d(f), h) + lie_bracket(f, d(h)));
  }
}

TEST_CASE("derivation bracket") {
  Gen g(41);
  for (int n = 0; n < 15; ++n) {
    const Derivation x = epsilon(2 * g.uniform(0, 3));
    const Derivation y = epsilon(2 * g.uniform(1, 3));
    const NCPoly f = g.poly(Alphabet::ab(), static_cast<std::size_t>(g.uniform(1, 3)), 3);
    CHECK(der_bracket(x, y)(f) == x(y(f)) - y(x(f)));
    CHECK((der_bracket(x, y) + der_bracket(y, x)).is_zero());
  }
  const Derivation e0 = epsilon(0), e4 = epsilon(4);
  CHECK(der_ad_pow(e0, 0, e4) == e4);
  CHECK(der_ad_pow(e0, 2, e4) == der_bracket(e0, der_bracket(e0, e4)));
  // e0 raises the b-degree by one and is nilpotent on each e_2i.
  CHECK(der_ad_pow(e0, 3, epsilon(2)).is_zero());
  CHECK(!der_ad_pow(e0, 2, epsilon(4)).is_zero());
}

TEST_CASE("derivation construction") {
  CHECK_THROWS_AS(Derivation(Alphabet::ab(), {P("c"), NCPoly(), NCPoly()}), std::invalid_argument);
  CHECK_THROWS_AS(epsilon(2)(c), std::invalid_argument);
  CHECK(Derivation::zero(Alphabet::ab()).is_zero());
  const Derivation d = epsilon(2) + Rational(-1) * epsilon(2);
  CHECK(d.is_zero());
  CHECK(2 * epsilon(4) - epsilon(4) == epsilon(4));
}

TEST_CASE("alphas") {
  CHECK(alpha(1) == b);
  CHECK(alpha(3) == ad_pow(a, 2, b));
  CHECK(alpha_tilde(2) == c);
  CHECK(alpha_tilde(4) == ad_pow(a, 2, c));
  CHECK(phi(alpha_tilde(5)) == alpha(5));
  CHECK_THROWS_AS(alpha(0), std::invalid_argument);
  CHECK_THROWS_AS(alpha_tilde(1), std::invalid_argument);
}

TEST_CASE("inner derivations") {
  const NCPoly f = alpha(3);
  const Derivation d = inner(f);
  CHECK(d.image(Letter::a) == lie_bracket(a, f));
  CHECK(d.image(Letter::b).is_zero());
  CHECK_THROWS_AS(inner(P("ab")), std::invalid_argument);
  CHECK_THROWS_AS(inner(c), std::invalid_argument);
  CHECK(inner_tilde(alpha_tilde(4)).image(Letter::a) == lie_bracket(a, alpha_tilde(4)));
}

TEST_CASE("poisson bracket") {
  const NCPoly f = alpha(2), h = alpha(4);
  CHECK(poisson(f, h) == lie_bracket(f, h) + inner(f)(h) - inner(h)(f));
  CHECK((poisson(f, h) + poisson(h, f)).is_zero());
  CHECK_THROWS_AS(poisson(alpha(2), alpha_tilde(2)), std::invalid_argument);
  Gen g(43);
  for (int n = 0; n < 10; ++n) {
    const NCPoly x = g.lie(Alphabet::ab(), static_cast<std::size_t>(g.uniform(2, 4)), 1);
    const NCPoly y = g.lie(Alphabet::ab(), static_cast<std::size_t>(g.uniform(2, 4)), 1);
    const NCPoly z = g.lie(Alphabet::ab(), static_cast<std::size_t>(g.uniform(2, 3)), 1);
    const NCPoly jac = poisson(x, poisson(y, z)) + poisson(y, poisson(z, x)) + poisson(z, poisson(x, y));
    CHECK(jac.is_zero());
    CHECK(is_lie_element(poisson(x, y)));
  }
  // The same bracket over {a,c}.
  const NCPoly t = poisson(alpha_tilde(4), alpha_tilde(6));
  CHECK(is_lie_element(t));
  CHECK(grading(t).weight == std::optional<std::size_t>(10));
}

TEST_CASE("push") {
  CHECK(push(P("ab")) == P("ba"));
  CHECK(push(P("ba")) == P("ab"));
  // exponents (2,1,0) -> (0,2,1)
  CHECK(push(P("aabab")) == P("baaba"));
  CHECK(push(P("aaba")) == P("abaa"));
  CHECK(push(P("b")) == P("b"));
  CHECK(!is_push_invariant(P("ab - ba")));
  CHECK(is_push_invariant(P("ab + ba")));
  CHECK_THROWS_AS(push(c), std::invalid_argument);
  Gen g(47);
  for (int n = 0; n < 30; ++n) {
    const std::size_t depth = static_cast<std::size_t>(g.uniform(1, 3));
    const NCPoly f = g.poly(Alphabet::ab(), static_cast<std::size_t>(g.uniform(static_cast<int>(depth), 7)), 4)
                         .filter([&](Word w) { return w.count(Letter::b) == depth; });
    NCPoly x = f;
    for (std::size_t k = 0; k <= depth; ++k) x = push(x);
    CHECK(x == f);
    NCPoly orbit;
    x = f;
    for (std::size_t k = 0; k <= depth; ++k, x = push(x)) orbit += x;
    CHECK(is_push_invariant(orbit));
  }
}
