#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "edalg/commpoly.hpp"
#include "edalg/ncpoly.hpp"

namespace edalg {

/// The depth letter of f: c if f uses c, b otherwise. Throws if f uses both.
Letter depth_letter(const NCPoly& f);

/// mi_r: a^{i1} t ... a^{ir} t  ->  v1^{i1} ... vr^{ir} for t the depth letter;
/// monomials of other depth or not ending in t are dropped.
CommPoly mi(const NCPoly& f, std::size_t r);
CommPoly mi(const NCPoly& f, std::size_t r, Letter terminal);
/// The unique nonzero component of a depth-homogeneous f. Throws
/// std::invalid_argument when f is zero or mixes depths.
CommPoly mi(const NCPoly& f);

/// Inverse of mi on one component: v1^{i1}...vr^{ir} -> a^{i1} t ... a^{ir} t.
NCPoly mi_preimage(const CommPoly& F, Letter terminal = Letter::b);

/// Slot sequences of the (s, r-s) shuffles: entry p names the variable placed
/// in slot p. The first block's variables 0..s-1 appear in order, as do s..r-1.
std::vector<std::vector<std::size_t>> shuffle_sequences(std::size_t r, std::size_t s);

/// One shuffle sum per split s = 1..r-1.
std::vector<CommPoly> shuffle_sums(const CommPoly& F);

bool is_alternal(const CommPoly& F);
/// Alternality of N/D, decided by clearing the distinct permuted denominators.
bool is_alternal(const CommRat& F);

/// Shuffle sums of F / (v1 (v1-v2) ... (v_{r-1}-v_r) v_r) multiplied by the
/// least common multiple of the permuted denominators, one per split.
std::vector<CommPoly> prealternality_residuals(const CommPoly& F);
bool is_prealternal(const CommPoly& F);

/// Lie element with alternal mi on every nonzero depth component.
bool is_bialternal(const NCPoly& f);

/// v1 (v1-v2) ... (v_{r-1}-v_r) v_r in arity r (v1^2 for r = 1).
CommPoly prealternal_denominator(std::size_t r);

/// mi(e_i(sec(F))) on the next depth. An arity-0 F = c stands for c*a.
CommPoly hat_epsilon(int i, const CommPoly& F);

/// Closed forms for mi of iterated e-images of a.
CommPoly appendix_P(int k);
CommPoly appendix_Q(int j, int k);
CommPoly appendix_R(int i, int j, int k);
CommPoly appendix_S(int i, int j, int k);
/// v2(v1-v3)S(v1,v2,v3) - v1(v2-v3)S(v2,v1,v3) - v3(v1-v2)S(v2,v3,v1).
CommPoly appendix_identity_residual(const CommPoly& S);

/// mi_r([a, phi(g)]) == v1 (v1-v2) ... (v_{r-1}-v_r) v_r mi_r(g) for g over {a,c}.
bool check_remmig(const NCPoly& g, std::size_t r);

}  // namespace edalg
