#include "edalg/bracket_expr.hpp"

#include <cctype>
#include <map>

namespace edalg {

struct BracketExpr::Node {
  Kind kind = Kind::sum;
  int index = 0;
  int ad0 = 0;
  std::vector<BracketExpr> children;
  std::vector<Term> terms;
  Derivation derivation;
  std::string label;
};

namespace {

const std::shared_ptr<const BracketExpr::Node>& zero_node() {
  static const auto node = std::make_shared<const BracketExpr::Node>();
  return node;
}

}  // namespace

BracketExpr::BracketExpr() : node_(zero_node()) {}

BracketExpr BracketExpr::generator(int index, int ad0) {
  if (index < 0 || ad0 < 0) throw std::invalid_argument("generator indices must be nonnegative");
  auto n = std::make_shared<Node>();
  n->kind = Kind::generator;
  n->index = index;
  n->ad0 = ad0;
  return BracketExpr(std::move(n));
}

BracketExpr BracketExpr::bracket(BracketExpr x, BracketExpr y) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::bracket;
  n->children = {std::move(x), std::move(y)};
  return BracketExpr(std::move(n));
}

BracketExpr BracketExpr::sum(std::vector<Term> terms) {
  std::vector<Term> flat;
  auto push = [&](const Rational& c, const BracketExpr& e) {
    for (auto& t : flat)
      if (t.second == e) {
        t.first += c;
        return;
      }
    flat.emplace_back(c, e);
  };
  for (auto& [c, e] : terms) {
    if (c == 0) continue;
    if (e.kind() == Kind::sum) {
      for (const auto& [c2, e2] : e.terms()) push(c * c2, e2);
    } else {
      push(c, e);
    }
  }
  std::erase_if(flat, [](const Term& t) { return t.first == 0; });
  if (flat.size() == 1 && flat.front().first == 1) return flat.front().second;
  if (flat.empty()) return BracketExpr();
  auto n = std::make_shared<Node>();
  n->kind = Kind::sum;
  n->terms = std::move(flat);
  return BracketExpr(std::move(n));
}

BracketExpr BracketExpr::concrete(Derivation d, std::string label) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::concrete;
  n->derivation = std::move(d);
  n->label = std::move(label);
  return BracketExpr(std::move(n));
}

BracketExpr::Kind BracketExpr::kind() const { return node_->kind; }
int BracketExpr::index() const { return node_->index; }
int BracketExpr::ad0() const { return node_->ad0; }
const BracketExpr& BracketExpr::lhs() const { return node_->children.at(0); }
const BracketExpr& BracketExpr::rhs() const { return node_->children.at(1); }
const std::vector<BracketExpr::Term>& BracketExpr::terms() const { return node_->terms; }
const Derivation& BracketExpr::derivation() const { return node_->derivation; }
const std::string& BracketExpr::label() const { return node_->label; }

BracketExpr operator+(const BracketExpr& x, const BracketExpr& y) { return BracketExpr::sum({{1, x}, {1, y}}); }
BracketExpr operator-(const BracketExpr& x, const BracketExpr& y) { return BracketExpr::sum({{1, x}, {-1, y}}); }
BracketExpr operator*(const Rational& c, const BracketExpr& x) { return BracketExpr::sum({{c, x}}); }

bool operator==(const BracketExpr& x, const BracketExpr& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case BracketExpr::Kind::generator:
      return x.index() == y.index() && x.ad0() == y.ad0();
    case BracketExpr::Kind::bracket:
      return x.lhs() == y.lhs() && x.rhs() == y.rhs();
    case BracketExpr::Kind::sum:
      return x.terms() == y.terms();
    case BracketExpr::Kind::concrete:
      return x.label() == y.label() && x.derivation() == y.derivation();
  }
  return false;
}

std::string BracketExpr::to_string() const {
  switch (kind()) {
    case Kind::generator:
      if (ad0() == 0) return "e" + std::to_string(index());
      return "E0^" + std::to_string(ad0()) + ".e" + std::to_string(index());
    case Kind::bracket:
      return "[" + lhs().to_string() + "," + rhs().to_string() + "]";
    case Kind::concrete:
      return "{" + label() + "}";
    case Kind::sum:
      break;
  }
  if (terms().empty()) return "0";
  std::string s;
  for (const auto& [c, e] : terms()) {
    const Rational mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += to_display(mag) + "*";
    s += e.to_string();
  }
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BracketExpr parse() {
    BracketExpr e = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char ch) {
    skip();
    return pos_ < text_.size() && text_[pos_] == ch;
  }
  void expect(char ch) {
    if (!peek(ch)) {
      if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + ch + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + ch + "'", pos_);
    }
    ++pos_;
  }
  bool digit_ahead() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", start);
    if (pos_ - start > 6) throw ParseError("integer too large", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  BracketExpr expr() {
    std::vector<BracketExpr::Term> terms;
    Rational sign = 1;
    if (peek('+')) ++pos_;
    else if (peek('-')) {
      ++pos_;
      sign = -1;
    }
    terms.push_back(term(sign));
    while (true) {
      if (peek('+')) sign = 1;
      else if (peek('-')) sign = -1;
      else break;
      ++pos_;
      terms.push_back(term(sign));
    }
    return BracketExpr::sum(std::move(terms));
  }

  BracketExpr::Term term(const Rational& sign) {
    if (digit_ahead()) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
        ++pos_;
      Rational c;
      try {
        c = parse_rational(text_.substr(start, pos_ - start));
      } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational", start);
      }
      if (peek('*')) {
        ++pos_;
        return {sign * c, atom()};
      }
      if (c == 0) return {0, BracketExpr()};
      throw ParseError("expected '*' after coefficient", pos_);
    }
    return {sign, atom()};
  }

  BracketExpr atom() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("expected an expression but input ended", pos_);
    const std::size_t start = pos_;
    const char ch = text_[pos_];
    if (ch == '[') {
      ++pos_;
      BracketExpr x = expr();
      expect(',');
      BracketExpr y = expr();
      expect(']');
      return BracketExpr::bracket(std::move(x), std::move(y));
    }
    if (ch == '(') {
      ++pos_;
      BracketExpr x = expr();
      expect(')');
      return x;
    }
    if (ch == 'e') {
      ++pos_;
      return BracketExpr::generator(integer(), 0);
    }
    if (ch == 'E') {
      ++pos_;
      if (integer() != 0) throw ParseError("only E0 powers are supported", start);
      expect('^');
      const int j = integer();
      expect('.');
      if (!peek('e')) throw ParseError("expected 'e'", pos_);
      ++pos_;
      return BracketExpr::generator(integer(), j);
    }
    if (ch == 'h') {
      ++pos_;
      expect('(');
      const int p = integer();
      expect(',');
      const int q = integer();
      expect(',');
      const int d = integer();
      expect(')');
      try {
        return h_element(p, q, d);
      } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), start);
      }
    }
    throw ParseError("unexpected '" + std::string(1, ch) + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

BracketExpr parse_bracket_expr(std::string_view text) { return Parser(text).parse(); }

BracketExpr h_element(int p, int q, int d) {
  if (p < 2 || q < 2 || p % 2 || q % 2)
    throw std::invalid_argument("h(p,q,d): p and q must be even and >= 2");
  if (d < 2 || d - 2 > std::min(p, q)) throw std::invalid_argument("h(p,q,d): need 2 <= d <= min(p,q)+2");
  std::vector<BracketExpr::Term> terms;
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d - 2));
  for (int i = 0; i <= d - 2; ++i) {
    const int j = d - 2 - i;
    Rational c(fact, binomial(p, i) * binomial(q, j));
    c.canonicalize();
    if (i % 2) c = -c;
    terms.emplace_back(c, BracketExpr::bracket(BracketExpr::generator(p + 2, i), BracketExpr::generator(q + 2, j)));
  }
  return BracketExpr::sum(std::move(terms));
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(Family family) : family_(family) {}

  Derivation eval(const BracketExpr& e) {
    switch (e.kind()) {
      case BracketExpr::Kind::generator:
        return generator(e.index(), e.ad0());
      case BracketExpr::Kind::bracket:
        return der_bracket(eval(e.lhs()), eval(e.rhs()));
      case BracketExpr::Kind::concrete:
        if (e.derivation().alphabet() != alphabet())
          throw std::invalid_argument("concrete derivation {" + e.label() + "} is over " +
                                      e.derivation().alphabet().to_string() + ", expected " +
                                      alphabet().to_string());
        return e.derivation();
      case BracketExpr::Kind::sum:
        break;
    }
    Derivation out = Derivation::zero(alphabet());
    for (const auto& [c, sub] : e.terms()) out += c * eval(sub);
    return out;
  }

 private:
  Alphabet alphabet() const { return family_ == Family::epsilon ? Alphabet::ab() : Alphabet::abc(); }

  const Derivation& base(int index) {
    auto it = base_.find(index);
    if (it == base_.end())
      it = base_.emplace(index, family_ == Family::epsilon ? epsilon(index) : epsilon_tilde(index)).first;
    return it->second;
  }

  Derivation generator(int index, int ad0) {
    if (index % 2) throw std::invalid_argument("odd generator index e" + std::to_string(index));
    const auto key = std::make_pair(index, ad0);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Derivation d = ad0 == 0 ? base(index) : der_bracket(base(0), generator(index, ad0 - 1));
    cache_.emplace(key, d);
    return d;
  }

  Family family_;
  std::map<int, Derivation> base_;
  std::map<std::pair<int, int>, Derivation> cache_;
};

}  // namespace

Derivation eval_bracket_expr(const BracketExpr& e, Family family) { return Evaluator(family).eval(e); }

}  // namespace edalg
