#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "edalg/rational.hpp"

namespace edalg {

using Exponent = std::vector<unsigned>;

/// Graded order on exponent vectors: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Exponent& x, const Exponent& y) const;
};

/// Sparse commutative polynomial in v1..vr. The arity r is part of the
/// value: polynomials of different arity never compare equal.
class CommPoly {
 public:
  using Terms = std::map<Exponent, Rational, GradedLex>;

  explicit CommPoly(std::size_t arity = 0) : arity_(arity) {}
  static CommPoly constant(std::size_t arity, const Rational& c);
  /// v_{i+1} (i is zero-based).
  static CommPoly variable(std::size_t arity, std::size_t i);
  static CommPoly monomial(Exponent exp, const Rational& c = 1);
  /// sum_i coeffs[i] v_{i+1}.
  static CommPoly linear(const std::vector<Rational>& coeffs);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  CommPoly& operator+=(const CommPoly& other);
  CommPoly& operator-=(const CommPoly& other);
  CommPoly& operator*=(const Rational& c);
  friend CommPoly operator+(CommPoly x, const CommPoly& y) { return x += y; }
  friend CommPoly operator-(CommPoly x, const CommPoly& y) { return x -= y; }
  friend CommPoly operator-(CommPoly x) { return x *= Rational(-1); }
  friend CommPoly operator*(const Rational& c, CommPoly x) { return x *= c; }
  friend CommPoly operator*(const CommPoly& x, const CommPoly& y);
  friend bool operator==(const CommPoly&, const CommPoly&) = default;

  CommPoly pow(unsigned n) const;

  /// F(images[0], ..., images[r-1]); all images share one arity.
  CommPoly substitute(const std::vector<CommPoly>& images) const;
  /// F(v_{seq[0]+1}, ..., v_{seq[r-1]+1}): slot p receives variable seq[p].
  CommPoly permute(const std::vector<std::size_t>& seq) const;
  /// Exact quotient by d. Throws std::domain_error when the remainder is nonzero.
  CommPoly divide_exact(const CommPoly& d) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  std::string to_string() const;

 private:
  void check_arity(const CommPoly& other) const;
  std::size_t arity_;
  Terms terms_;
};

/// Transient quotient of two polynomials of the same arity.
struct CommRat {
  CommPoly numerator;
  CommPoly denominator;
};

}  // namespace edalg
