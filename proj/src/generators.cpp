#include "edalg/generators.hpp"

#include "edalg/lie.hpp"

namespace edalg {

int Gen::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Gen::small_coeff(int bound) {
  int c = 0;
  while (c == 0) c = uniform(-bound, bound);
  return c;
}

NCPoly Gen::poly(Alphabet alphabet, std::size_t weight, std::size_t terms) {
  std::vector<char> letters;
  for (Letter l : {Letter::a, Letter::b, Letter::c})
    if (alphabet.contains(l)) letters.push_back(to_char(l));
  std::vector<NCPoly::Term> out;
  for (std::size_t t = 0; t < terms; ++t) {
    std::string w;
    std::size_t wt = 0;
    while (wt < weight) {
      char ch = letters[static_cast<std::size_t>(uniform(0, static_cast<int>(letters.size()) - 1))];
      if (ch == 'c' && wt + 2 > weight) ch = letters.front();
      w += ch;
      wt += ch == 'c' ? 2 : 1;
    }
    out.emplace_back(Word::parse(w), small_coeff());
  }
  return NCPoly::from_terms(std::move(out));
}

NCPoly Gen::lie(Alphabet alphabet, std::size_t weight, std::size_t depth) {
  const auto basis = lyndon_basis(alphabet, weight, depth);
  if (basis.empty()) return {};
  NCPoly out;
  while (out.is_zero())
    for (const auto& b : basis)
      if (uniform(0, 2) != 0) out += small_coeff() * b;
  return out;
}

BracketExpr Gen::expr(int depth) {
  const int kind = depth <= 0 ? 0 : uniform(0, 2);
  if (kind == 0) return BracketExpr::generator(2 * uniform(0, 6), uniform(0, 2));
  if (kind == 1) return BracketExpr::bracket(expr(depth - 1), expr(depth - 1));
  Rational c(uniform(-9, 9), uniform(1, 5));
  c.canonicalize();
  return BracketExpr::sum({{c, expr(depth - 1)}, {small_coeff(), expr(depth - 1)}});
}

}  // namespace edalg
