#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dihedrant/exact_matrix.hpp"
#include "dihedrant/permutation.hpp"
#include "dihedrant/random.hpp"

namespace dih {

/// Outcome of checking one claim on a batch of inputs. `witness` holds the
/// first failing input (lowest trial index) in the JSON matrix format.
struct TheoremReport {
  std::string claim_id;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<std::string> witness;

  bool passed() const noexcept { return failures == 0; }
};

/// Shared knobs for the seeded property checkers. Trial i draws from
/// Rng(seed, stream, i), so results do not depend on `workers`.
struct CheckConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  long lo = -5;
  long hi = 5;
  int workers = 0;  // 0: OpenMP default
};

enum class SearchMode { Random, Exhaustive };

struct SearchConfig {
  int n = 4;
  long lo = 0;
  long hi = 1;
  std::size_t sample_count = 1000;
  std::uint64_t seed = 1;
  SearchMode mode = SearchMode::Random;
  bool require_nonzero = false;
  /// Exhaustive mode refuses (hi - lo + 1)^(n^2) above this.
  std::uint64_t exhaustive_budget = std::uint64_t{1} << 24;
  int workers = 0;
};

// ---- sign formulas -------------------------------------------------------

/// (k-1)(n-k+1); sgn(rho_k) = (-1)^result.
long transposition_count_rotation(int n, int k);

/// (n-k-1)(n-k)/2 + k(k-1)/2; sgn(mu_k) = (-1)^result.
long transposition_count_reflection(int n, int k);

/// Parity from the transposition counts above.
int lemma_sgn(const DihedralElement& e);

/// Closed form for the parity of D_n elements:
///   rho_k:  -1 iff n is even and k is even.
///   mu_k:   n odd           -> -1 iff n = 3 (mod 4)
///           n even, k odd   -> -1 iff n = 0 (mod 4)
///           n even, k even  -> -1 iff n = 2 (mod 4)
int closed_form_sgn(const DihedralElement& e);

struct SignRow {
  DihedralElement element;
  int sig;
  int sgn;
  bool agree;
};

/// sig against sgn for all 2n elements. sgn comes from the transposition
/// counts and is cross-checked against cycle decomposition; a mismatch
/// throws std::logic_error.
std::vector<SignRow> classify_signs(int n);

std::string render_sign_table(const std::vector<SignRow>& rows);

/// Both count formulas against cycle-decomposition parity for all k <= n,
/// 1 <= n <= max_n.
TheoremReport check_lemma_signs(int max_n = 12);

// ---- matrix-identity property suites ----------------------------------------

/// dih(A^T) = dih(A); n cycles through [n_lo, n_hi].
TheoremReport check_transpose(const CheckConfig& cfg, int n_lo = 1, int n_hi = 8);

/// dih(permute_columns(A, s)) = sig(s) dih(A) and the row analogue, with
/// s drawn at random from D_n.
TheoremReport check_dihedral_permutation(const CheckConfig& cfg, int n_lo = 1, int n_hi = 7);

/// As above but for every s in D_n, `cfg.trials` matrices per n.
TheoremReport check_dihedral_permutation_all(const CheckConfig& cfg, int n_lo = 4, int n_hi = 7);

/// Linearity in a random row and a random column.
TheoremReport check_multilinearity(const CheckConfig& cfg, int n_lo = 1, int n_hi = 8);

/// Rank-1 outer products have dih = 0.
TheoremReport check_rank1(const CheckConfig& cfg, int n_lo = 1, int n_hi = 8);

/// n-1 identical rows give dih = 0.
TheoremReport check_n_minus_1_equal_rows(const CheckConfig& cfg, int n_lo = 2, int n_hi = 8);

/// n-2 identical rows plus two identical rows give dih = 0.
TheoremReport check_n_minus_2_equal_rows(const CheckConfig& cfg, int n_lo = 2, int n_hi = 8);

/// rank <= 2 at n in {4, 5} gives dih = 0. Rows are alpha_i a + beta_i b.
TheoremReport check_rank2_small(const CheckConfig& cfg);

/// All rank-deficiency suites at a single order n. The rank <= 2 suite is
/// included only for n in {4, 5}.
std::vector<TheoremReport> check_rank_theorems(int n, const CheckConfig& cfg);

// ---- anti-triangular and corner patterns ------------------------------------

/// Random matrix that is zero below the anti-diagonal with a nonzero
/// anti-diagonal. Anti-diagonal entries in [-5,-1] u [1,5], free entries in
/// [-5, 5].
ExactMatrix random_antitriangular(Rng& rng, int n);

/// For anti-triangular samples: dih = -prod a(i, n-i+1), det follows the
/// n mod 4 split, and dih = det iff n mod 4 in {2, 3}. Requires n >= 3
/// (std::domain_error otherwise).
TheoremReport check_antitriangular(int n, const CheckConfig& cfg);

/// Nonzero mask of the corner pattern: (i,i), (i,i+1) and (n,1).
std::vector<std::vector<bool>> corner_pattern_mask(int n);

/// Samples corner-pattern matrices (nonzero entries on the mask) and counts
/// how many have dih != det; `failures` here means "identity did not
/// hold", with no expectation attached.
TheoremReport check_corner_pattern(int n, const CheckConfig& cfg);

/// Orders in [n_lo, n_hi] on which dih = det held for every sample.
std::vector<int> corner_pattern_orders(int n_lo, int n_hi, const CheckConfig& cfg);

// ---- rank-2 expansion -------------------------------------------------------

struct ExpansionTerm {
  Scalar coefficient;
  ExactMatrix matrix;   // every row is a or b
  unsigned long mask;   // bit i-1 set: row i is b
};

/// Expands rows alpha_i a + beta_i b by linearity into 2^n matrices of
/// pure a / b rows, recording the coefficient of each. No merging.
std::vector<ExpansionTerm> expand_rank2(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                        const std::vector<Scalar>& alphas,
                                        const std::vector<Scalar>& betas);

/// The expansion has 2^n terms and sum coefficient * dih(term) = dih(A).
TheoremReport check_rank2_expansion(int n, const CheckConfig& cfg);

// ---- known matrices and oracles -----------------------------------------------

struct NamedMatrix {
  std::string name;
  ExactMatrix matrix;
};

/// The worked examples: minus15, twos-ones, six-by-six-rank2,
/// rank3-counterexample, identity4, swapped-identity4.
std::vector<NamedMatrix> known_matrices();

const ExactMatrix& known_matrix(const std::string& name);

/// One report per known matrix, checking its stated dih / det / rank
/// values against the Leibniz oracle.
std::vector<TheoremReport> check_counterexample_ledger();

/// dih = leibniz_det on random 3x3 integer matrices.
TheoremReport check_n3_equivalence(const CheckConfig& cfg);

/// dih = 0 on `cfg.trials` random 1x1 and as many 2x2 matrices.
TheoremReport check_degenerate(const CheckConfig& cfg);

/// Coset partition of S_4, sum of the three corrected schemes against the
/// Leibniz oracle, and exactly 4 sig/sgn disagreements in D_4.
TheoremReport check_corrected_scheme(const CheckConfig& cfg);

/// elimination_det = leibniz_det, `cfg.trials` matrices per n in [n_lo, n_hi].
TheoremReport check_oracle_agreement(const CheckConfig& cfg, int n_lo = 1, int n_hi = 6);

// ---- search -----------------------------------------------------------------

/// Matrices with entries in [lo, hi] and dih = det (and != 0 when
/// require_nonzero). Random mode: sample i is drawn from Rng(seed, 0, i).
/// Exhaustive mode: all (hi-lo+1)^(n^2) matrices in lexicographic order of
/// their row-major entries. Output is in sample order either way.
std::vector<ExactMatrix> search_dih_equals_det(const SearchConfig& cfg);

namespace serial {
std::vector<ExactMatrix> search_dih_equals_det(const SearchConfig& cfg);
}

}  // namespace dih
