#include "edalg/commpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace edalg {

bool GradedLex::operator()(const Exponent& x, const Exponent& y) const {
  const unsigned dx = std::accumulate(x.begin(), x.end(), 0U);
  const unsigned dy = std::accumulate(y.begin(), y.end(), 0U);
  if (dx != dy) return dx < dy;
  return x < y;
}

CommPoly CommPoly::constant(std::size_t arity, const Rational& c) {
  CommPoly out(arity);
  out.add_term(Exponent(arity, 0), c);
  return out;
}

CommPoly CommPoly::variable(std::size_t arity, std::size_t i) {
  if (i >= arity) throw std::out_of_range("variable index out of range");
  Exponent e(arity, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

CommPoly CommPoly::monomial(Exponent exp, const Rational& c) {
  CommPoly out(exp.size());
  out.add_term(exp, c);
  return out;
}

CommPoly CommPoly::linear(const std::vector<Rational>& coeffs) {
  CommPoly out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    out.add_term(e, coeffs[i]);
  }
  return out;
}

Rational CommPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CommPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != arity_) throw std::invalid_argument("exponent length does not match arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void CommPoly::check_arity(const CommPoly& other) const {
  if (arity_ != other.arity_)
    throw std::invalid_argument("arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(other.arity_));
}

CommPoly& CommPoly::operator+=(const CommPoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

CommPoly& CommPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

CommPoly operator*(const CommPoly& x, const CommPoly& y) {
  x.check_arity(y);
  CommPoly out(x.arity_);
  Exponent e(x.arity_);
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
      out.add_term(e, cx * cy);
    }
  return out;
}

CommPoly CommPoly::pow(unsigned n) const {
  CommPoly out = constant(arity_, 1);
  CommPoly base = *this;
  while (n) {
    if (n & 1U) out = out * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return out;
}

CommPoly CommPoly::substitute(const std::vector<CommPoly>& images) const {
  if (images.size() != arity_) throw std::invalid_argument("substitute: need one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().arity();
  for (const auto& img : images)
    if (img.arity() != target) throw std::invalid_argument("substitute: images of different arity");
  // Powers of each image are reused across monomials.
  std::vector<std::vector<CommPoly>> powers(arity_);
  auto power = [&](std::size_t i, unsigned n) -> const CommPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= n) cache.push_back(cache.back() * images[i]);
    return cache[n];
  };
  CommPoly out(target);
  for (const auto& [e, c] : terms_) {
    CommPoly term = constant(target, c);
    for (std::size_t i = 0; i < arity_; ++i)
      if (e[i]) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

CommPoly CommPoly::permute(const std::vector<std::size_t>& seq) const {
  if (seq.size() != arity_) throw std::invalid_argument("permute: sequence length must equal arity");
  CommPoly out(arity_);
  Exponent ne(arity_);
  for (const auto& [e, c] : terms_) {
    std::fill(ne.begin(), ne.end(), 0U);
    for (std::size_t slot = 0; slot < arity_; ++slot) ne.at(seq[slot]) += e[slot];
    out.add_term(ne, c);
  }
  return out;
}

namespace {

// Leading term for the pure lexicographic order.
CommPoly::Terms::const_iterator lex_leading(const CommPoly::Terms& t) {
  auto best = t.begin();
  for (auto it = t.begin(); it != t.end(); ++it)
    if (best->first < it->first) best = it;
  return best;
}

}  // namespace

CommPoly CommPoly::divide_exact(const CommPoly& d) const {
  check_arity(d);
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto lt_d = lex_leading(d.terms_);
  CommPoly rem = *this;
  CommPoly quot(arity_);
  Exponent qe(arity_);
  while (!rem.is_zero()) {
    const auto lt = lex_leading(rem.terms_);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (lt->first[i] < lt_d->first[i]) throw std::domain_error("inexact division: nonzero remainder");
      qe[i] = lt->first[i] - lt_d->first[i];
    }
    const CommPoly step = monomial(qe, lt->second / lt_d->second);
    quot += step;
    rem -= step * d;
  }
  return quot;
}

Rational CommPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != arity_) throw std::invalid_argument("evaluate: point dimension must equal arity");
  Rational out = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < arity_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) m *= point[i];
    out += m;
  }
  return out;
}

std::string CommPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Rational mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "v" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) s += to_display(mag);
    else if (mag == 1) s += mono;
    else s += to_display(mag) + "*" + mono;
  }
  return s;
}

}  // namespace edalg
