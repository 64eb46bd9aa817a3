#include "edalg/derivation.hpp"

#include <stdexcept>

#include "edalg/lie.hpp"

namespace edalg {

Derivation::Derivation(Alphabet alphabet, std::array<NCPoly, 3> images)
    : alphabet_(alphabet), images_(std::move(images)) {
  for (Letter l : {Letter::a, Letter::b, Letter::c}) {
    const NCPoly& img = image(l);
    if (!alphabet_.contains(l) && !img.is_zero())
      throw std::invalid_argument("derivation image given for a letter outside " + alphabet_.to_string());
    if (!alphabet_.includes(img.alphabet()))
      throw std::invalid_argument("derivation image leaves the alphabet " + alphabet_.to_string());
  }
}

bool Derivation::is_zero() const {
  for (const auto& img : images_)
    if (!img.is_zero()) return false;
  return true;
}

NCPoly Derivation::apply(const NCPoly& f) const {
  if (!alphabet_.includes(f.alphabet()))
    throw std::invalid_argument("apply: polynomial over " + f.alphabet().to_string() +
                                " outside derivation alphabet " + alphabet_.to_string());
  NCPolyBuilder acc;
  Rational prod;
  for (const auto& [w, c] : f) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      const NCPoly& img = image(w[k]);
      if (img.is_zero()) continue;
      const Word pre = w.prefix(k);
      const Word post = w.suffix(k + 1);
      for (const auto& [u, d] : img) {
        prod = c * d;
        acc.add(pre + u + post, prod);
      }
    }
  }
  return acc.finish();
}

Derivation& Derivation::operator+=(const Derivation& other) {
  if (alphabet_ != other.alphabet_)
    throw std::invalid_argument("derivation sum: alphabet mismatch " + alphabet_.to_string() + " vs " +
                                other.alphabet_.to_string());
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += other.images_[i];
  return *this;
}

Derivation& Derivation::operator*=(const Rational& c) {
  for (auto& img : images_) img *= c;
  return *this;
}

std::string Derivation::to_string() const {
  std::string s;
  for (Letter l : {Letter::a, Letter::b, Letter::c}) {
    if (!alphabet_.contains(l)) continue;
    if (!s.empty()) s += ", ";
    s += std::string(1, to_char(l)) + " -> " + image(l).to_string();
  }
  return s;
}

Derivation der_bracket(const Derivation& d1, const Derivation& d2) {
  if (d1.alphabet() != d2.alphabet())
    throw std::invalid_argument("der_bracket: alphabet mismatch " + d1.alphabet().to_string() + " vs " +
                                d2.alphabet().to_string());
  std::array<NCPoly, 3> images;
  for (Letter l : {Letter::a, Letter::b, Letter::c}) {
    if (!d1.alphabet().contains(l)) continue;
    images[static_cast<std::size_t>(l)] = d1.apply(d2.image(l)) - d2.apply(d1.image(l));
  }
  return Derivation(d1.alphabet(), std::move(images));
}

Derivation der_ad_pow(const Derivation& x, std::size_t n, const Derivation& d) {
  Derivation out = d;
  for (std::size_t k = 0; k < n; ++k) out = der_bracket(x, out);
  return out;
}

namespace {

const NCPoly& letter_a() {
  static const NCPoly a = NCPoly::letter(Letter::a);
  return a;
}

void require_even(int index, int minimum, const char* what) {
  if (index < minimum || index % 2 != 0)
    throw std::invalid_argument(std::string(what) + ": index must be even and >= " + std::to_string(minimum) +
                                ", got " + std::to_string(index));
}

}  // namespace

NCPoly alpha(int i) {
  if (i < 1) throw std::invalid_argument("alpha: index must be >= 1");
  return ad_pow(letter_a(), static_cast<std::size_t>(i - 1), NCPoly::letter(Letter::b));
}

NCPoly alpha_tilde(int i) {
  if (i < 2) throw std::invalid_argument("alpha_tilde: index must be >= 2");
  return ad_pow(letter_a(), static_cast<std::size_t>(i - 2), NCPoly::letter(Letter::c));
}

Derivation epsilon(int index) {
  require_even(index, 0, "epsilon");
  const int i = index / 2;
  NCPoly image_b;
  for (int j = 0; j < i; ++j) {
    NCPoly term = lie_bracket(alpha(j + 1), alpha(index - j));
    if (j % 2) image_b -= term;
    else image_b += term;
  }
  return Derivation(Alphabet::ab(), {alpha(index + 1), std::move(image_b), NCPoly()});
}

Derivation epsilon_tilde(int index) {
  require_even(index, 0, "epsilon_tilde");
  if (index == 0) return Derivation(Alphabet::abc(), {NCPoly::letter(Letter::b), NCPoly(), NCPoly()});
  const int i = index / 2;
  NCPoly image_b;
  for (int j = 0; j < i; ++j) {
    NCPoly term = lie_bracket(alpha(j + 1), alpha_tilde(index - j));
    if (j % 2) image_b -= term;
    else image_b += term;
  }
  return Derivation(Alphabet::abc(), {alpha_tilde(index + 1), std::move(image_b), NCPoly()});
}

Derivation inner(const NCPoly& f) {
  if (!Alphabet::ab().includes(f.alphabet())) throw std::invalid_argument("inner: polynomial must be over {a,b}");
  if (!is_lie_element(f)) throw std::invalid_argument("inner: not a Lie element: " + f.to_string());
  return Derivation(Alphabet::ab(), {lie_bracket(letter_a(), f), NCPoly(), NCPoly()});
}

Derivation inner_tilde(const NCPoly& f) {
  if (!Alphabet::ac().includes(f.alphabet())) throw std::invalid_argument("inner_tilde: polynomial must be over {a,c}");
  if (!is_lie_element(f)) throw std::invalid_argument("inner_tilde: not a Lie element: " + f.to_string());
  return Derivation(Alphabet::ac(), {lie_bracket(letter_a(), f), NCPoly(), NCPoly()});
}

NCPoly poisson(const NCPoly& f, const NCPoly& g) {
  const std::uint8_t mask = f.alphabet().mask() | g.alphabet().mask();
  const Alphabet joint(mask);
  Alphabet alphabet;
  if (Alphabet::ab().includes(joint)) alphabet = Alphabet::ab();
  else if (Alphabet::ac().includes(joint)) alphabet = Alphabet::ac();
  else throw std::invalid_argument("poisson: alphabet mismatch, arguments span " + joint.to_string());
  // D_f only needs its value on a; the other generator is sent to zero.
  const Derivation df(alphabet, {lie_bracket(letter_a(), f), NCPoly(), NCPoly()});
  const Derivation dg(alphabet, {lie_bracket(letter_a(), g), NCPoly(), NCPoly()});
  return lie_bracket(f, g) + df.apply(g) - dg.apply(f);
}

NCPoly push(const NCPoly& f) {
  if (!Alphabet::ab().includes(f.alphabet())) throw std::invalid_argument("push: polynomial must be over {a,b}");
  std::vector<NCPoly::Term> out;
  out.reserve(f.size());
  std::vector<std::size_t> exps;
  for (const auto& [w, c] : f) {
    exps.assign(1, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == Letter::a) ++exps.back();
      else exps.push_back(0);
    }
    // (i0, ..., ir) -> (ir, i0, ..., i_{r-1})
    std::string s(exps.back(), 'a');
    for (std::size_t k = 0; k + 1 < exps.size(); ++k) {
      s += 'b';
      s += std::string(exps[k], 'a');
    }
    out.emplace_back(Word::parse(s), c);
  }
  return NCPoly::from_terms(std::move(out));
}

bool is_push_invariant(const NCPoly& f) { return push(f) == f; }

}  // namespace edalg
