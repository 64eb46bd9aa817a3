#include "edalg/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace edalg {

NCPoly NCPoly::monomial(Word w, Rational c) {
  NCPoly out;
  if (c != 0) out.terms_.emplace_back(w, std::move(c));
  return out;
}

NCPoly NCPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  NCPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else if (t.second != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

NCPoly NCPoly::parse(std::string_view text) {
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "0") return {};
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    Rational sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' at offset " + std::to_string(i));
    }
    first = false;
    Rational coeff = 1;
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    if (i > start) coeff = parse_rational(text.substr(start, i - start));
    skip();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    start = i;
    while (i < text.size() && (text[i] == 'a' || text[i] == 'b' || text[i] == 'c')) ++i;
    if (i == start && coeff == 1 && (start == 0 || !std::isdigit(static_cast<unsigned char>(text[start - 1]))))
      throw std::invalid_argument("expected a term at offset " + std::to_string(start));
    terms.emplace_back(Word::parse(text.substr(start, i - start)), sign * coeff);
  }
  return from_terms(std::move(terms));
}

Rational NCPoly::coeff(Word w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, Word key) { return t.first < key; });
  if (it != terms_.end() && it->first == w) return it->second;
  return 0;
}

Alphabet NCPoly::alphabet() const {
  std::uint8_t mask = 0;
  for (const auto& [w, c] : terms_) mask |= w.alphabet().mask();
  return Alphabet(mask);
}

namespace {

template <class Op>
std::vector<NCPoly::Term> merge(const std::vector<NCPoly::Term>& x, const std::vector<NCPoly::Term>& y, Op op) {
  std::vector<NCPoly::Term> out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, op(Rational(0), j->second));
      ++j;
    } else {
      Rational c = op(i->second, j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

NCPoly& NCPoly::operator+=(const NCPoly& other) {
  terms_ = merge(terms_, other.terms_, [](const Rational& p, const Rational& q) -> Rational { return p + q; });
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
  terms_ = merge(terms_, other.terms_, [](const Rational& p, const Rational& q) -> Rational { return p - q; });
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

NCPoly operator*(const NCPoly& f, const NCPoly& g) {
  NCPolyBuilder acc;
  Rational prod;
  for (const auto& [u, p] : f.terms_)
    for (const auto& [v, q] : g.terms_) {
      prod = p * q;
      acc.add(u + v, prod);
    }
  return acc.finish();
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    const std::string word = w.empty() ? "1" : w.to_string();
    if (mag != 1 || w.empty()) {
      s += to_display(mag);
      if (!w.empty()) s += "*" + word;
    } else {
      s += word;
    }
  }
  return s;
}

void NCPolyBuilder::add(Word w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(w, c);
  if (!inserted) it->second += c;
}

void NCPolyBuilder::add(const NCPoly& f, const Rational& scale) {
  if (scale == 0) return;
  if (scale == 1) {
    for (const auto& [w, c] : f) add(w, c);
    return;
  }
  Rational tmp;
  for (const auto& [w, c] : f) {
    tmp = c * scale;
    add(w, tmp);
  }
}

NCPoly NCPolyBuilder::finish() {
  std::vector<NCPoly::Term> terms;
  terms.reserve(acc_.size());
  for (auto& [w, c] : acc_)
    if (c != 0) terms.emplace_back(w, std::move(c));
  acc_.clear();
  return NCPoly::from_terms(std::move(terms));
}

Grading grading(const NCPoly& f) {
  Grading g;
  if (f.is_zero()) {
    g.zero = true;
    return g;
  }
  const Word w0 = f.terms().front().first;
  g.weight = w0.weight();
  g.depth_b = w0.count(Letter::b);
  g.depth_c = w0.count(Letter::c);
  for (const auto& [w, c] : f) {
    if (g.weight && *g.weight != w.weight()) g.weight.reset();
    if (g.depth_b && *g.depth_b != w.count(Letter::b)) g.depth_b.reset();
    if (g.depth_c && *g.depth_c != w.count(Letter::c)) g.depth_c.reset();
  }
  return g;
}

NCPoly lie_bracket(const NCPoly& f, const NCPoly& g) {
  NCPolyBuilder acc;
  Rational prod;
  for (const auto& [u, p] : f)
    for (const auto& [v, q] : g) {
      prod = p * q;
      acc.add(u + v, prod);
      prod = -prod;
      acc.add(v + u, prod);
    }
  return acc.finish();
}

NCPoly ad_pow(const NCPoly& x, std::size_t n, const NCPoly& f) {
  NCPoly out = f;
  for (std::size_t k = 0; k < n; ++k) out = lie_bracket(x, out);
  return out;
}

NCPoly uea_act(Word w, const NCPoly& f) {
  NCPoly out = f;
  for (std::size_t k = w.size(); k-- > 0;) out = lie_bracket(NCPoly::letter(w[k]), out);
  return out;
}

NCPoly uea_act(const NCPoly& w, const NCPoly& f) {
  NCPolyBuilder acc;
  for (const auto& [u, c] : w) acc.add(uea_act(u, f), c);
  return acc.finish();
}

NCPoly phi(const NCPoly& f) {
  // Expand each c into ab - ba: a word with m letters c yields 2^m signed words.
  NCPolyBuilder acc;
  std::vector<std::pair<Word, int>> cur, next;
  const Word ab = Word::parse("ab");
  const Word ba = Word::parse("ba");
  Rational tmp;
  for (const auto& [w, coeff] : f) {
    cur.assign(1, {Word(), 1});
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter l = w[i];
      next.clear();
      for (const auto& [u, s] : cur) {
        if (l == Letter::c) {
          next.emplace_back(u + ab, s);
          next.emplace_back(u + ba, -s);
        } else {
          next.emplace_back(u + Word(l), s);
        }
      }
      cur.swap(next);
    }
    for (const auto& [u, s] : cur) {
      tmp = coeff * s;
      acc.add(u, tmp);
    }
  }
  return acc.finish();
}

NCPoly project_last(const NCPoly& f, Letter last) {
  return f.filter([last](Word w) { return !w.empty() && w.back() == last; });
}

namespace {

// Words are over {a, t}; `terms` may include the empty word (value 1).
NCPoly sec_rec(const std::vector<NCPoly::Term>& terms, Letter t) {
  std::map<std::size_t, std::vector<NCPoly::Term>> by_block;
  NCPoly out;
  for (const auto& [w, c] : terms) {
    if (w.empty()) {
      out += NCPoly::monomial(Word(), c);
      continue;
    }
    std::size_t i = 0;
    while (w[i] == Letter::a) ++i;
    by_block[i].emplace_back(w.suffix(i + 1), c);
  }
  const NCPoly a = NCPoly::letter(Letter::a);
  const NCPoly lt = NCPoly::letter(t);
  for (const auto& [i, rest] : by_block) out += ad_pow(a, i, lt * sec_rec(rest, t));
  return out;
}

}  // namespace

NCPoly sec(const NCPoly& p, Letter terminal) {
  if (terminal == Letter::a) throw std::invalid_argument("sec: terminal letter must be b or c");
  for (const auto& [w, c] : p) {
    if (w.empty() || w.back() != terminal)
      throw std::invalid_argument("sec: monomial '" + w.to_string() + "' does not end in " +
                                  std::string(1, to_char(terminal)));
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != Letter::a && w[i] != terminal)
        throw std::invalid_argument("sec: monomial '" + w.to_string() + "' mixes depth letters");
  }
  return sec_rec(p.terms(), terminal);
}

}  // namespace edalg
