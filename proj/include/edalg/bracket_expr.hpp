#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edalg/derivation.hpp"

namespace edalg {

enum class Family { epsilon, epsilon_tilde };

/// Formal nested-bracket expression over the generators g(i, j) = ad_{e0}^j(e_i),
/// concrete derivations and rational linear combinations.
///
/// Sums are kept normalised: nested sums are flattened, equal summands are
/// merged, zero coefficients dropped, and a lone summand with coefficient 1
/// collapses to the summand itself. The empty sum is the zero expression.
class BracketExpr {
 public:
  enum class Kind { generator, bracket, sum, concrete };
  using Term = std::pair<Rational, BracketExpr>;

  BracketExpr();  // zero
  static BracketExpr generator(int index, int ad0 = 0);
  static BracketExpr bracket(BracketExpr x, BracketExpr y);
  static BracketExpr sum(std::vector<Term> terms);
  static BracketExpr concrete(Derivation d, std::string label);

  Kind kind() const;
  bool is_zero() const { return kind() == Kind::sum && terms().empty(); }
  int index() const;
  int ad0() const;
  const BracketExpr& lhs() const;
  const BracketExpr& rhs() const;
  const std::vector<Term>& terms() const;
  const Derivation& derivation() const;
  const std::string& label() const;

  friend BracketExpr operator+(const BracketExpr& x, const BracketExpr& y);
  friend BracketExpr operator-(const BracketExpr& x, const BracketExpr& y);
  friend BracketExpr operator*(const Rational& c, const BracketExpr& x);
  friend bool operator==(const BracketExpr& x, const BracketExpr& y);

  /// Text form accepted by parse_bracket_expr.
  std::string to_string() const;

 struct Node;

 private:
  explicit BracketExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr  := [+|-] term { (+|-) term }
///   term  := [rational '*'] atom
///   atom  := e<i> | E0^<j>.e<i> | [expr, expr] | h(p,q,d) | (expr) | 0
/// h(p,q,d) is expanded through h_element.
BracketExpr parse_bracket_expr(std::string_view text);

/// sum_{i+j=d-2} (-1)^i (d-2)!/(C(p,i)C(q,j)) [g(p+2,i), g(q+2,j)].
/// Requires p, q even >= 2 and 2 <= d <= min(p,q)+2.
BracketExpr h_element(int p, int q, int d);

/// Substitutes ad_{e0}^j(e_i) (resp. the lifted family) for every generator.
/// Throws std::invalid_argument on odd indices or a concrete leaf over the
/// wrong alphabet.
Derivation eval_bracket_expr(const BracketExpr& e, Family family);

}  // namespace edalg
