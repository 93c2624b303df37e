#include <stdexcept>

#include "dihedrant/functionals.hpp"

namespace dih::serial {

Scalar group_functional(const ExactMatrix& a, const std::vector<SignedTerm>& terms) {
  Scalar total = 0;
  for (const auto& t : terms) {
    if (t.perm.size() != a.order()) throw std::domain_error("term permutation size mismatch");
    Scalar p = 1;
    for (int i = 1; i <= a.order(); ++i) p *= a(i, t.perm(i));
    total += t.sign * p;
  }
  return total;
}

Scalar leibniz_det(const ExactMatrix& a, int cap) {
  Scalar det = 0;
  for (const Permutation& sigma : SymmetricGroup(a.order(), cap)) {
    Scalar p = 1;
    for (int i = 1; i <= a.order(); ++i) p *= a(i, sigma(i));
    det += sgn(sigma) * p;
  }
  return det;
}

}  // namespace dih::serial
