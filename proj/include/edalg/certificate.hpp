#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "edalg/ncpoly.hpp"

namespace edalg {

/// Witness that a target polynomial lies in an explicit span.
///
/// theta3: target = sum c * [a^i.b,[a^j.b,a^k.b]] with (i,j,k) in `indices`.
/// depth3_lift: target = sum c * [e_i,[e_j,e_k]](a).
struct RelationCertificate {
  enum class Kind { theta3_membership, depth3_lift };

  Kind kind = Kind::theta3_membership;
  std::vector<std::array<int, 3>> indices;
  std::vector<std::string> labels;
  std::vector<Rational> coefficients;
  NCPoly target;
  NCPoly residual;
  std::size_t nullspace_dim = 0;
  /// Named intermediate objects, in pipeline order.
  std::vector<std::pair<std::string, NCPoly>> transcript;
};

std::string kind_name(RelationCertificate::Kind kind);

/// Rebuilds sum c * basis from the indices and checks it equals the target,
/// and that the stored residual is zero.
bool verify(const RelationCertificate& cert);

}  // namespace edalg
