#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "edalg/ncpoly.hpp"

namespace edalg {

/// A derivation of a free Lie algebra, stored through its values on the
/// generators of its alphabet. Values on letters outside the alphabet are zero.
class Derivation {
 public:
  Derivation() = default;
  Derivation(Alphabet alphabet, std::array<NCPoly, 3> images);
  static Derivation zero(Alphabet alphabet) { return Derivation(alphabet, {}); }

  Alphabet alphabet() const { return alphabet_; }
  const NCPoly& image(Letter l) const { return images_[static_cast<std::size_t>(l)]; }
  bool is_zero() const;

  /// Leibniz extension to the associative algebra. Throws std::invalid_argument
  /// when f uses a letter outside the alphabet.
  NCPoly apply(const NCPoly& f) const;
  NCPoly operator()(const NCPoly& f) const { return apply(f); }

  Derivation& operator+=(const Derivation& other);
  Derivation& operator*=(const Rational& c);
  friend Derivation operator+(Derivation x, const Derivation& y) { return x += y; }
  friend Derivation operator-(Derivation x, const Derivation& y) { return x += Rational(-1) * y; }
  friend Derivation operator*(const Rational& c, Derivation x) { return x *= c; }
  friend bool operator==(const Derivation&, const Derivation&) = default;

  std::string to_string() const;

 private:
  Alphabet alphabet_;
  std::array<NCPoly, 3> images_;
};

/// [D1, D2] = D1 o D2 - D2 o D1, evaluated on generators.
Derivation der_bracket(const Derivation& d1, const Derivation& d2);

/// ad_x^n(D) in the derivation algebra.
Derivation der_ad_pow(const Derivation& x, std::size_t n, const Derivation& d);

/// eps_{2i} on Lie[a,b]: a -> ad_a^{2i}(b), b -> sum_{j<i} (-1)^j [ad_a^j b, ad_a^{2i-1-j} b].
/// Throws std::invalid_argument for odd or negative indices.
Derivation epsilon(int index);

/// The lifted family on Lie[a,b,c]: a -> ad_a^{2i-1}(c),
/// b -> sum_{j<i} (-1)^j [ad_a^j b, ad_a^{2i-2-j} c], c -> 0.
/// Index 0 gives a -> b, b -> 0, c -> 0.
Derivation epsilon_tilde(int index);

/// alpha_i = ad_a^{i-1}(b), i >= 1.
NCPoly alpha(int i);
/// alpha~_i = ad_a^{i-2}(c), i >= 2.
NCPoly alpha_tilde(int i);

/// D_f on Lie[a,b]: a -> [a,f], b -> 0. Throws if f is not a Lie element over {a,b}.
Derivation inner(const NCPoly& f);
/// D~_f on Lie[a,c]: a -> [a,f], c -> 0. Throws if f is not a Lie element over {a,c}.
Derivation inner_tilde(const NCPoly& f);

/// {f,g} = [f,g] + D_f(g) - D_g(f) over {a,b} or {a,c}.
NCPoly poisson(const NCPoly& f, const NCPoly& g);

/// Cyclic shift of the a-exponent vector: a^{i0} b ... a^{i_{r-1}} b a^{ir}
/// -> a^{ir} b a^{i0} b ... a^{i_{r-1}}. Input must be over {a,b}.
NCPoly push(const NCPoly& f);
bool is_push_invariant(const NCPoly& f);

}  // namespace edalg
