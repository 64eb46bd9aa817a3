#include "edalg/certificate.hpp"

#include "edalg/relation.hpp"

namespace edalg {

std::string kind_name(RelationCertificate::Kind kind) {
  return kind == RelationCertificate::Kind::theta3_membership ? "theta3-membership" : "depth3-lift";
}

bool verify(const RelationCertificate& cert) {
  if (!cert.residual.is_zero()) return false;
  if (cert.coefficients.size() != cert.indices.size()) return cert.coefficients.empty() && cert.target.is_zero();
  NCPolyBuilder acc;
  for (std::size_t n = 0; n < cert.indices.size(); ++n) {
    if (cert.coefficients[n] == 0) continue;
    const auto [i, j, k] = cert.indices[n];
    acc.add(cert.kind == RelationCertificate::Kind::theta3_membership ? theta3_basis_element(i, j, k)
                                                                      : triple_bracket_on_a(i, j, k),
            cert.coefficients[n]);
  }
  return acc.finish() == cert.target;
}

}  // namespace edalg
