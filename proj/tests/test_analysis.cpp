#include <algorithm>

#include "doctest.h"
#include "dihedrant/analysis.hpp"
#include "dihedrant/errors.hpp"
#include "dihedrant/functionals.hpp"
#include "oracles.hpp"

using dih::ExactMatrix;

TEST_CASE("transposition counts") {
  for (int n = 1; n <= 6; ++n) CHECK(dih::transposition_count_rotation(n, 1) == 0);
  CHECK(dih::transposition_count_rotation(4, 2) == 3);
  CHECK(dih::sgn(dih::rotation_perm(4, 2)) == -1);
  CHECK(dih::transposition_count_rotation(5, 3) == 6);
  CHECK(dih::sgn(dih::rotation_perm(5, 3)) == 1);

  CHECK(dih::transposition_count_reflection(4, 4) == 6);
  CHECK(dih::sgn(dih::reflection_perm(4, 4)) == 1);
  for (int n = 1; n <= 12; ++n) CHECK(dih::transposition_count_reflection(n, n) == n * (n - 1) / 2);
  CHECK(dih::transposition_count_reflection(3, 1) == 1);
  CHECK(dih::sgn(dih::Permutation({1, 3, 2})) == -1);

  CHECK_THROWS_AS(dih::transposition_count_rotation(4, 0), std::domain_error);
  CHECK_THROWS_AS(dih::transposition_count_reflection(4, 5), std::domain_error);
}

TEST_CASE("lemma and closed form against inversion parity, n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& e : dih::dihedral_group(n)) {
      const int parity = oracle::inversion_sign(e.perm.images());
      CHECK(dih::lemma_sgn(e) == parity);
      CHECK(dih::closed_form_sgn(e) == parity);
    }
  }
  const auto r = dih::check_lemma_signs(12);
  CHECK(r.trials == 156);
  CHECK(r.failures == 0);
  CHECK_FALSE(r.witness);
}

TEST_CASE("classify_signs") {
  const auto t3 = dih::classify_signs(3);
  CHECK(t3.size() == 6);
  CHECK(std::all_of(t3.begin(), t3.end(), [](const auto& r) { return r.agree; }));

  const auto t4 = dih::classify_signs(4);
  CHECK(std::count_if(t4.begin(), t4.end(), [](const auto& r) { return r.agree; }) == 4);

  const auto t5 = dih::classify_signs(5);
  for (int k = 1; k <= 5; ++k) {
    const bool even = ((k - 1) * (5 - k + 1)) % 2 == 0;
    CHECK(t5[static_cast<std::size_t>(k - 1)].agree == even);
  }
  CHECK(dih::classify_signs(1).size() == 2);

  const auto text = dih::render_sign_table(t4);
  CHECK(text.find("agree 4 of 8") != std::string::npos);
}

TEST_CASE("rank-deficiency suites") {
  dih::CheckConfig cfg;
  cfg.seed = 3;
  cfg.trials = 100;
  for (const auto& r : dih::check_rank_theorems(6, cfg)) {
    CHECK_MESSAGE(r.failures == 0, r.claim_id);
  }
  const auto r5 = dih::check_rank_theorems(5, cfg);
  REQUIRE(r5.size() == 4);
  CHECK(r5[2].claim_id == "thm:n-2-row-equal/n=5");
  CHECK(r5[2].failures == 0);
  CHECK(r5[3].claim_id == "cor:rank2/n=5");
  CHECK(r5[3].failures == 0);
  CHECK(dih::check_rank_theorems(6, cfg).size() == 3);
  CHECK(dih::check_rank2_small(cfg).failures == 0);
}

TEST_CASE("(3,3) row split breaks the cancellation") {
  const auto& a = dih::known_matrix("six-by-six-rank2");
  CHECK(dih::rank(a) == 2);
  CHECK(dih::dihedrant(a) == 1);
  // Rows 1, 2, 5 equal one vector, rows 3, 4, 6 the other.
  CHECK(a.row(1) == a.row(2));
  CHECK(a.row(1) == a.row(5));
  CHECK(a.row(3) == a.row(4));
  CHECK(a.row(3) == a.row(6));
}

TEST_CASE("rank 3 is enough for a nonzero dihedrant at n = 4") {
  const auto& a = dih::known_matrix("rank3-counterexample");
  CHECK(dih::rank(a) == 3);
  CHECK(dih::dihedrant(a) == -6);
  CHECK(dih::leibniz_det(a) == 0);
}

TEST_CASE("anti-triangular fixed examples") {
  auto anti_ones = [](int n) {
    std::vector<std::vector<long>> rows(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1 - i)] = 1;
    return ExactMatrix::from_ints(rows);
  };
  CHECK(dih::dihedrant(anti_ones(3)) == -1);
  CHECK(dih::leibniz_det(anti_ones(3)) == -1);
  CHECK(dih::dihedrant(anti_ones(4)) == -1);
  CHECK(dih::leibniz_det(anti_ones(4)) == 1);
  // n = 2: the band's rho_2 copy cancels the anti-diagonal term.
  CHECK(dih::dihedrant(anti_ones(2)) == 0);
}

TEST_CASE("anti-triangular generator and checker") {
  dih::Rng rng(1, 0, 0);
  const auto a = dih::random_antitriangular(rng, 6);
  for (int i = 1; i <= 6; ++i) {
    CHECK(a(i, 7 - i) != 0);
    for (int j = 1; j <= 6; ++j) {
      if (i + j > 7) CHECK(a(i, j) == 0);
    }
  }
  dih::CheckConfig cfg;
  cfg.trials = 40;
  for (int n = 3; n <= 9; ++n) CHECK(dih::check_antitriangular(n, cfg).failures == 0);
  CHECK_THROWS_AS(dih::check_antitriangular(2, cfg), std::domain_error);
}

TEST_CASE("corner pattern") {
  const auto m = dih::corner_pattern_mask(4);
  std::size_t count = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool expected = i == j || j == i + 1 || (i == 3 && j == 0);
      CHECK(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == expected);
      count += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  CHECK(count == 8);
  dih::CheckConfig cfg;
  cfg.trials = 50;
  CHECK(dih::check_corner_pattern(3, cfg).failures == 0);
  const auto orders = dih::corner_pattern_orders(3, 3, cfg);
  CHECK(orders == std::vector<int>{3});
  CHECK_THROWS_AS(dih::corner_pattern_mask(1), std::domain_error);
}

TEST_CASE("rank-2 expansion") {
  const std::vector<dih::Scalar> a{1, 2, 0, -1}, b{3, -1, 2, 2}, al{1, 2, -1, 3}, be{2, 0, 1, -2};
  const auto terms = dih::expand_rank2(a, b, al, be);
  CHECK(terms.size() == 16);
  dih::Scalar sum = 0;
  for (const auto& t : terms) sum += t.coefficient * dih::dihedrant(t.matrix);
  std::vector<std::vector<dih::Scalar>> rows(4, std::vector<dih::Scalar>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) rows[i][j] = al[i] * a[j] + be[i] * b[j];
  }
  CHECK(sum == dih::dihedrant(ExactMatrix(rows)));
  dih::CheckConfig cfg;
  cfg.trials = 20;
  for (int n = 4; n <= 6; ++n) CHECK(dih::check_rank2_expansion(n, cfg).failures == 0);
  CHECK_THROWS_AS(dih::expand_rank2(a, b, al, {1}), std::domain_error);
}

TEST_CASE("ledger of worked examples") {
  const auto reports = dih::check_counterexample_ledger();
  CHECK(reports.size() == 6);
  for (const auto& r : reports) CHECK_MESSAGE(r.failures == 0, r.claim_id);
  CHECK_THROWS_AS(dih::known_matrix("nope"), std::invalid_argument);
}

TEST_CASE("witness is the lowest failing trial") {
  // At n = 4 the corner pattern gives dih != det on most samples.
  dih::CheckConfig cfg;
  cfg.trials = 30;
  cfg.lo = 1;
  cfg.hi = 3;
  const auto r1 = dih::check_corner_pattern(4, cfg);
  cfg.workers = 1;
  const auto r2 = dih::check_corner_pattern(4, cfg);
  CHECK(r1.failures == r2.failures);
  CHECK(r1.witness == r2.witness);
  CHECK(r1.failures > 0);
  CHECK(r1.witness.has_value());
}

TEST_CASE("search") {
  dih::SearchConfig cfg;
  cfg.n = 4;
  cfg.lo = 1;
  cfg.hi = 2;
  cfg.mode = dih::SearchMode::Exhaustive;
  cfg.require_nonzero = true;
  const auto found = dih::search_dih_equals_det(cfg);
  CHECK(std::find(found.begin(), found.end(), dih::known_matrix("twos-ones")) != found.end());
  for (const auto& m : found) {
    CHECK(dih::dihedrant(m) == dih::leibniz_det(m));
    CHECK(dih::dihedrant(m) != 0);
  }

  dih::SearchConfig id = cfg;
  id.lo = 0;
  id.hi = 1;
  id.n = 3;
  const auto f3 = dih::search_dih_equals_det(id);
  CHECK(std::find(f3.begin(), f3.end(), ExactMatrix::identity(3)) != f3.end());

  dih::SearchConfig two = cfg;
  two.n = 2;
  two.lo = -3;
  two.hi = 3;
  CHECK(dih::search_dih_equals_det(two).empty());
  two.mode = dih::SearchMode::Random;
  two.sample_count = 500;
  CHECK(dih::search_dih_equals_det(two).empty());

  dih::SearchConfig big = cfg;
  big.n = 5;
  big.lo = 0;
  big.hi = 9;
  CHECK_THROWS_AS(dih::search_dih_equals_det(big), dih::ResourceLimitError);
}

TEST_CASE("search is reproducible and independent of worker count") {
  dih::SearchConfig cfg;
  cfg.n = 4;
  cfg.lo = -1;
  cfg.hi = 1;
  cfg.sample_count = 3000;
  cfg.seed = 17;
  cfg.workers = 1;
  const auto one = dih::search_dih_equals_det(cfg);
  cfg.workers = 4;
  const auto four = dih::search_dih_equals_det(cfg);
  CHECK(one == four);
  CHECK(one == dih::serial::search_dih_equals_det(cfg));
  CHECK_FALSE(one.empty());
  cfg.seed = 18;
  CHECK(dih::search_dih_equals_det(cfg) != one);
}
