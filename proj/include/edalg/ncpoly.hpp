#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "edalg/rational.hpp"
#include "edalg/word.hpp"

namespace edalg {

/// Sparse noncommutative polynomial with exact rational coefficients.
///
/// Terms are kept sorted by the global degree-lexicographic word order and
/// never store a zero coefficient, so equality is plain term-list equality.
class NCPoly {
 public:
  using Term = std::pair<Word, Rational>;

  NCPoly() = default;
  static NCPoly monomial(Word w, Rational c = 1);
  static NCPoly letter(Letter l) { return monomial(Word(l)); }
  static NCPoly one() { return monomial(Word()); }
  /// Sums duplicate words and drops zeros.
  static NCPoly from_terms(std::vector<Term> terms);
  /// Parses "ab - 2ba + 1/3 c" style text; used by tests and the CLI.
  static NCPoly parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(Word w) const;
  Alphabet alphabet() const;

  NCPoly& operator+=(const NCPoly& other);
  NCPoly& operator-=(const NCPoly& other);
  NCPoly& operator*=(const Rational& c);

  friend NCPoly operator+(NCPoly f, const NCPoly& g) { return f += g; }
  friend NCPoly operator-(NCPoly f, const NCPoly& g) { return f -= g; }
  friend NCPoly operator-(NCPoly f) { return f *= Rational(-1); }
  friend NCPoly operator*(const Rational& c, NCPoly f) { return f *= c; }
  friend NCPoly operator*(const NCPoly& f, const NCPoly& g);
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  /// Keeps the terms whose word satisfies `pred`.
  template <class Pred>
  NCPoly filter(Pred pred) const {
    NCPoly out;
    for (const auto& t : terms_)
      if (pred(t.first)) out.terms_.push_back(t);
    return out;
  }

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Hash accumulator used to assemble large polynomials before sorting.
class NCPolyBuilder {
 public:
  void add(Word w, const Rational& c);
  void add(const NCPoly& f, const Rational& scale = 1);
  NCPoly finish();

 private:
  std::unordered_map<Word, Rational> acc_;
};

/// Weight and depth gradings. Each optional is set only when every monomial
/// agrees on it; the zero polynomial is homogeneous of every grading.
struct Grading {
  bool zero = false;
  std::optional<std::size_t> weight;
  std::optional<std::size_t> depth_b;
  std::optional<std::size_t> depth_c;
};

Grading grading(const NCPoly& f);

/// [f, g] = fg - gf.
NCPoly lie_bracket(const NCPoly& f, const NCPoly& g);
/// ad_x^n(f).
NCPoly ad_pow(const NCPoly& x, std::size_t n, const NCPoly& f);
/// Enveloping-algebra action: each letter of each monomial of `w` acts by ad,
/// rightmost letter first.
NCPoly uea_act(const NCPoly& w, const NCPoly& f);
NCPoly uea_act(Word w, const NCPoly& f);

/// The morphism fixing a, b and sending c to [a,b].
NCPoly phi(const NCPoly& f);

/// Projection onto the monomials ending in `last`.
NCPoly project_last(const NCPoly& f, Letter last);
inline NCPoly pi_b(const NCPoly& f) { return project_last(f, Letter::b); }
inline NCPoly pi_c(const NCPoly& f) { return project_last(f, Letter::c); }

/// Section of the projection: a^{i1} t ... a^{ir} t  ->  ad_a^{i1} L_t ... ad_a^{ir} L_t (1),
/// where t is `terminal` (b, or c over {a,c}). Throws std::invalid_argument if
/// some monomial does not end in `terminal` or uses a letter other than a and `terminal`.
NCPoly sec(const NCPoly& p, Letter terminal = Letter::b);

}  // namespace edalg
