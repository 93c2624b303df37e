#pragma once

#include <array>
#include <string>
#include <vector>

#include "dihedrant/exact_matrix.hpp"
#include "dihedrant/functionals.hpp"
#include "dihedrant/permutation.hpp"

namespace dih {

using SignedMonomial = SignedTerm;

/// A Sarrus-style diagram written out as its signed monomials.
struct Scheme {
  int n;
  std::vector<SignedMonomial> monomials;
  std::string label;
};

/// The band scheme obtained by appending the first n-1 columns: 2n
/// monomials (rho_k, +1) and (mu_k, -1). Evaluates to the dihedrant.
Scheme false_sarrus_scheme(int n);

/// Column orders whose band schemes together cover S_4. The first is the
/// natural order; each entry is a one-line permutation tau, and the band
/// on columns tau(1..4) contributes the permutations tau o d, d in D_4.
const std::array<Permutation, 3>& corrected_scheme_columns();

/// Three 8-term schemes, one per column order above. Every monomial
/// carries sgn of its own permutation, so the union is exactly the
/// Leibniz expansion of a 4x4 determinant.
std::vector<Scheme> corrected_scheme_4x4();

struct DihedralSign {
  DihedralElement element;
  int sgn;
};

/// True parity of each element of D_4 in group order.
std::vector<DihedralSign> scheme_signs_within_D4();

Scalar evaluate(const Scheme& s, const ExactMatrix& a);

/// One line per monomial: sign, then a_{1,s(1)} ... a_{n,s(n)} in row
/// order, e.g. "+ a11 a22 a33". Indices are comma-separated once n >= 10.
std::string render_scheme_text(const Scheme& s);

/// The ordered permutation listing of rho_k and mu_k for one n, used as a
/// text stand-in for drawing the n-gon symmetries.
std::string render_dihedral_listing(int n);

}  // namespace dih
