#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edalg/bracket_expr.hpp"
#include "edalg/certificate.hpp"
#include "edalg/linalg.hpp"

namespace edalg {

/// Raised when an internal consistency check fails.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Failure of one stage of the lifting pipeline, with the exact residual.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& what, NCPoly residual = {})
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)), residual_(std::move(residual)) {}
  const std::string& stage() const { return stage_; }
  const NCPoly& residual() const { return residual_; }

 private:
  std::string stage_;
  NCPoly residual_;
};

/// Period data r_{p-d+2}(f) keyed by p, for the terms h^d_{p,q} with p+q = n-4.
struct PeriodVector {
  std::string label;
  int d = 2;
  int weight = 0;
  std::map<int, Rational> coefficients;
};

/// sum_p coefficients[p] * h^d_{p, n-4-p}. Throws std::invalid_argument on bad indices.
BracketExpr pollack_combination(const PeriodVector& pv);

/// No monomial both starts and ends with b.
bool bb_monomial_test(const NCPoly& p);
/// No monomial of the shape a^i c a^j c b.
bool cacb_monomial_test(const NCPoly& p);

/// [a^i.b,[a^j.b,a^k.b]]
NCPoly theta3_basis_element(int i, int j, int k);
/// [e_i,[e_j,e_k]](a)
NCPoly triple_bracket_on_a(int i, int j, int k);
/// {alpha~_i,{alpha~_j,alpha~_k}}
NCPoly poisson_triple(int i, int j, int k);

/// Coordinates of D(a) in span{[a^i.b,[a^j.b,a^k.b]] : i,j,k >= 1}; nullopt
/// when D(a) is not of depth 3 or not in the span. Throws std::invalid_argument
/// on inhomogeneous input, InvariantBreach if the answer disagrees with the
/// bb-monomial criterion on a push-invariant D(a).
std::optional<RelationCertificate> theta3_membership_depth3(const Derivation& d);

/// t~ = sum lambda_{w'a} w'.c where d~ = sum lambda_w w.b.
NCPoly lazard_decompose(const NCPoly& dtilde);

/// q~ with [a, q~] = t~.
NCPoly divide_by_a(const NCPoly& ttilde);

struct PoissonCoordinates {
  std::vector<std::array<int, 3>> indices;  // lexicographic
  std::vector<Rational> coefficients;
  std::size_t nullspace_dim = 0;
};

/// Coordinates of q~ over {alpha~_i,{alpha~_j,alpha~_k}}, i,j,k even >= 4.
PoissonCoordinates express_in_poisson_triples(const NCPoly& qtilde);

/// Runs the depth-3 lifting pipeline on an expression evaluated in both families.
RelationCertificate lift_to_depth3(const BracketExpr& expr);
/// Same, from the two evaluations D (over {a,b}) and D~ (over {a,b,c}).
RelationCertificate lift_to_depth3(const Derivation& d, const Derivation& dtilde);

/// dim {f in Lie[a,b] : weight n, depth 3, mi_3(f) alternal}; n odd >= 3.
std::size_t bialternal_dimension(int n);
/// max(0, floor(((n-3)^2 - 1)/48)).
std::size_t formula_dimension(int n);

}  // namespace edalg
