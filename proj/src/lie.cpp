#include "edalg/lie.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace edalg {

namespace {

Letter depth_letter(Alphabet alphabet) {
  if (alphabet == Alphabet::ab()) return Letter::b;
  if (alphabet == Alphabet::ac()) return Letter::c;
  throw std::invalid_argument("Lyndon bases are provided over {a,b} or {a,c}, not " + alphabet.to_string());
}

bool lex_less(Word u, Word v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i)
    if (u[i] != v[i]) return u[i] < v[i];
  return u.size() < v.size();
}

NCPoly bracketing(Word w, std::unordered_map<Word, NCPoly>& memo) {
  if (w.size() == 1) return NCPoly::monomial(w);
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  std::size_t split = 1;
  for (; split < w.size(); ++split)
    if (is_lyndon(w.suffix(split))) break;
  NCPoly out = lie_bracket(bracketing(w.prefix(split), memo), bracketing(w.suffix(split), memo));
  memo.emplace(w, out);
  return out;
}

NCPoly dynkin_rec(const std::vector<NCPoly::Term>& terms) {
  std::map<Letter, std::vector<NCPoly::Term>> by_last;
  NCPoly out;
  for (const auto& [w, c] : terms) {
    if (w.size() == 1)
      out += NCPoly::monomial(w, c);
    else
      by_last[w.back()].emplace_back(w.prefix(w.size() - 1), c);
  }
  for (const auto& [x, rest] : by_last) out += lie_bracket(dynkin_rec(rest), NCPoly::letter(x));
  return out;
}

}  // namespace

bool is_lyndon(Word w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!lex_less(w, w.suffix(i))) return false;
  return true;
}

std::vector<Word> lyndon_words(Alphabet alphabet, std::size_t weight, std::size_t depth) {
  const Letter t = depth_letter(alphabet);
  const std::size_t t_weight = letter_weight(t);
  if (weight < depth * t_weight) return {};
  const std::size_t a_count = weight - depth * t_weight;
  const std::size_t length = a_count + depth;
  if (length == 0) return {};
  if (length > Word::kMaxLength) throw std::length_error("lyndon_words: weight too large");

  std::vector<Word> out;
  // Enumerate positions of the depth letter via a bitmask permutation.
  std::vector<bool> mask(length, false);
  std::fill(mask.end() - static_cast<std::ptrdiff_t>(depth), mask.end(), true);
  do {
    std::string s(length, 'a');
    for (std::size_t i = 0; i < length; ++i)
      if (mask[i]) s[i] = to_char(t);
    Word w = Word::parse(s);
    if (is_lyndon(w)) out.push_back(w);
  } while (std::next_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

NCPoly standard_bracketing(Word lyndon_word) {
  if (!is_lyndon(lyndon_word)) throw std::invalid_argument("not a Lyndon word: " + lyndon_word.to_string());
  std::unordered_map<Word, NCPoly> memo;
  return bracketing(lyndon_word, memo);
}

std::vector<NCPoly> lyndon_basis(Alphabet alphabet, std::size_t weight, std::size_t depth) {
  std::unordered_map<Word, NCPoly> memo;
  std::vector<NCPoly> out;
  for (Word w : lyndon_words(alphabet, weight, depth)) out.push_back(bracketing(w, memo));
  return out;
}

std::size_t witt_dimension(std::size_t n) {
  if (n == 0) return 0;
  auto mobius = [](std::size_t m) {
    int mu = 1;
    for (std::size_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) return 0;
      mu = -mu;
    }
    if (m > 1) mu = -mu;
    return mu;
  };
  long long total = 0;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) total += mobius(d) * (1LL << (n / d));
  return static_cast<std::size_t>(total / static_cast<long long>(n));
}

NCPoly dynkin(const NCPoly& f) {
  for (const auto& [w, c] : f)
    if (w.empty()) throw std::invalid_argument("dynkin: constant term");
  return dynkin_rec(f.terms());
}

bool is_lie_element(const NCPoly& f) {
  if (f.is_zero()) return true;
  if (!grading(f).weight) throw std::invalid_argument("is_lie_element: input is not homogeneous in weight");
  std::vector<NCPoly::Term> terms;
  for (const auto& [w, c] : f) {
    if (w.empty()) return false;
    terms.emplace_back(w, c * static_cast<unsigned long>(w.size()));
  }
  return dynkin(f) == NCPoly::from_terms(std::move(terms));
}

}  // namespace edalg
