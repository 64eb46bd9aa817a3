#pragma once

#include <cstddef>
#include <vector>

#include "edalg/ncpoly.hpp"

namespace edalg {

/// Lyndon words over a two-letter alphabet {a,b} or {a,c} with the given
/// weight (c weighs 2) and depth (number of b's, resp. c's), in lexicographic order.
/// Throws std::invalid_argument for any other alphabet.
std::vector<Word> lyndon_words(Alphabet alphabet, std::size_t weight, std::size_t depth);

bool is_lyndon(Word w);

/// Standard bracketing of a Lyndon word: P(w) = [P(u), P(v)] with v the
/// longest proper Lyndon suffix.
NCPoly standard_bracketing(Word lyndon_word);

/// Standard bracketings of lyndon_words(alphabet, weight, depth); a basis of
/// the corresponding multigraded piece of the free Lie algebra.
std::vector<NCPoly> lyndon_basis(Alphabet alphabet, std::size_t weight, std::size_t depth);

/// Number of Lyndon words of length n on two letters.
std::size_t witt_dimension(std::size_t n);

/// Dynkin left-bracketing map x1...xn -> [...[x1,x2],...,xn].
NCPoly dynkin(const NCPoly& f);

/// True iff dynkin(f) = n f on each length-n component. Throws
/// std::invalid_argument when f is not homogeneous in weight.
bool is_lie_element(const NCPoly& f);

}  // namespace edalg
