#pragma once

#include <cstddef>
#include <random>

#include "edalg/bracket_expr.hpp"
#include "edalg/ncpoly.hpp"

namespace edalg {

/// Deterministic generators for the randomized property checks.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);  // inclusive
  /// Nonzero integer in [-bound, bound].
  Rational small_coeff(int bound = 3);
  /// Random polynomial over `alphabet` with up to `terms` monomials of the given weight.
  NCPoly poly(Alphabet alphabet, std::size_t weight, std::size_t terms);
  /// Random nonzero combination of the Lyndon basis of the given multidegree
  /// (zero when that component is empty).
  NCPoly lie(Alphabet alphabet, std::size_t weight, std::size_t depth);
  /// Random expression tree over even generators with small coefficients.
  BracketExpr expr(int depth);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace edalg
