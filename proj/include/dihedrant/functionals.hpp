#pragma once

#include <vector>

#include "dihedrant/exact_matrix.hpp"
#include "dihedrant/permutation.hpp"

namespace dih {

/// One product term sign * prod_i a(i, perm(i)).
struct SignedTerm {
  Permutation perm;
  int sign;  // +1 or -1
};

/// prod_i a(i, sigma(i)).
Scalar diagonal_product(const ExactMatrix& a, const Permutation& sigma);

/// Sum of sign * prod_i a(i, perm(i)) over `terms`. Terms are split across
/// OpenMP workers; exact addition makes the result independent of the split.
Scalar group_functional(const ExactMatrix& a, const std::vector<SignedTerm>& terms);

/// The signed sum over D_n with sig as the sign (2n terms).
Scalar dihedrant(const ExactMatrix& a);

/// Full n!-term Leibniz expansion. Kept naive on purpose: it is the oracle
/// every other determinant value is checked against. S_n is enumerated in
/// lexicographic chunks, one chunk per worker.
Scalar leibniz_det(const ExactMatrix& a, int cap = kDefaultOracleCap);

/// Determinant by fraction-free (Bareiss) elimination.
Scalar elimination_det(const ExactMatrix& a);

/// Terms of the dihedrant: (rho_k, +1) then (mu_k, -1).
std::vector<SignedTerm> dihedral_terms(int n);

/// Single-threaded reference kernels. Same contracts as above; the parallel
/// versions are tested against these.
namespace serial {
Scalar group_functional(const ExactMatrix& a, const std::vector<SignedTerm>& terms);
Scalar leibniz_det(const ExactMatrix& a, int cap = kDefaultOracleCap);
}  // namespace serial

}  // namespace dih
