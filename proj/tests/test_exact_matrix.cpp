#include "doctest.h"
#include "dihedrant/analysis.hpp"
#include "dihedrant/exact_matrix.hpp"
#include "dihedrant/random.hpp"
#include "oracles.hpp"

using dih::ExactMatrix;
using dih::Scalar;

TEST_CASE("scalars are canonical") {
  CHECK(dih::scalar_to_string(dih::parse_scalar("6/4")) == "3/2");
  CHECK(dih::scalar_to_string(dih::parse_scalar("-6/-4")) == "3/2");
  CHECK(dih::scalar_to_string(dih::parse_scalar("0/5")) == "0");
  CHECK(dih::parse_scalar("0/5").get_den() == 1);
  CHECK(dih::scalar_to_string(dih::parse_scalar(" +7 ")) == "7");
  CHECK(dih::scalar_to_string(dih::parse_scalar("4/-6")) == "-2/3");
  CHECK(dih::scalar_to_string(dih::parse_scalar("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(dih::parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(dih::parse_scalar("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(dih::parse_scalar(""), std::invalid_argument);
  CHECK_THROWS_AS(dih::parse_scalar("/3"), std::invalid_argument);
}

TEST_CASE("arithmetic stays canonical") {
  dih::Rng rng(5, 0, 0);
  const ExactMatrix a = dih::random_rational_matrix(rng, 5, -9, 9, 7);
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      const Scalar x = a(i, j) * a(j, i) + a(i, i) / 3;
      CHECK(x.get_den() > 0);
      CHECK(gcd(x.get_num(), x.get_den()) == 1);
    }
  }
}

TEST_CASE("construction rejects non-square input") {
  CHECK_THROWS_AS(ExactMatrix::from_ints({{1, 2}, {3}}), std::domain_error);
  CHECK_THROWS_AS(ExactMatrix(std::vector<std::vector<Scalar>>{}), std::domain_error);
  CHECK_THROWS_AS(ExactMatrix(0), std::domain_error);
}

TEST_CASE("transpose") {
  CHECK(dih::transpose(ExactMatrix::identity(4)) == ExactMatrix::identity(4));
  for (std::uint64_t i = 0; i < 20; ++i) {
    dih::Rng rng(11, 0, i);
    const auto a = dih::random_rational_matrix(rng, 5, -5, 5, 3);
    CHECK(dih::transpose(dih::transpose(a)) == a);
  }
  const auto& m15 = dih::known_matrix("minus15");
  CHECK(m15(1, 4) == -1);
  CHECK(dih::transpose(m15)(4, 1) == -1);
  CHECK(dih::transpose(m15)(1, 4) == 0);
}

TEST_CASE("permute_columns") {
  const auto swap12 = dih::Permutation({2, 1, 3, 4});
  const auto it = dih::permute_columns(ExactMatrix::identity(4), swap12);
  CHECK(it(1, 2) == 1);
  CHECK(it(2, 1) == 1);
  CHECK(it(1, 1) == 0);
  CHECK(it == dih::known_matrix("swapped-identity4"));

  dih::Rng rng(3, 0, 0);
  const auto a = dih::random_int_matrix(rng, 4, -5, 5);
  CHECK(dih::permute_columns(a, dih::Permutation::identity(4)) == a);
  for (const auto& s : dih::symmetric_group(4)) {
    CHECK(dih::permute_columns(dih::permute_columns(a, s), dih::inverse(s)) == a);
    // Column j of the result is column s(j).
    const auto b = dih::permute_columns(a, s);
    for (int j = 1; j <= 4; ++j) CHECK(b.column(j) == a.column(s(j)));
  }
  CHECK_THROWS_AS(dih::permute_columns(a, dih::Permutation::identity(3)), std::domain_error);
}

TEST_CASE("permute_rows") {
  for (const auto& s : dih::symmetric_group(4)) {
    CHECK(dih::permute_rows(ExactMatrix::identity(4), s) == dih::permutation_matrix(s));
  }
  for (std::uint64_t i = 0; i < 20; ++i) {
    dih::Rng rng(4, 0, i);
    const auto a = dih::random_int_matrix(rng, 4, -5, 5);
    CHECK(dih::permute_rows(a, dih::Permutation::identity(4)) == a);
    const auto s = dih::unrank_lex(4, static_cast<std::uint64_t>(rng.draw_int(0, 23)));
    CHECK(dih::transpose(dih::permute_rows(a, s)) == dih::permute_columns(dih::transpose(a), s));
  }
  CHECK_THROWS_AS(dih::permute_rows(ExactMatrix::identity(2), dih::Permutation::identity(3)),
                  std::domain_error);
}

TEST_CASE("rank") {
  CHECK(dih::rank(ExactMatrix(4)) == 0);
  CHECK(dih::rank(ExactMatrix::identity(6)) == 6);
  CHECK(dih::rank(dih::known_matrix("six-by-six-rank2")) == 2);
  CHECK(dih::rank(dih::known_matrix("rank3-counterexample")) == 3);
  CHECK(dih::rank(ExactMatrix::from_ints({{0, 0, 1}, {0, 0, 2}, {0, 1, 0}})) == 2);
  CHECK(dih::rank(ExactMatrix(std::vector<std::vector<Scalar>>{{Scalar(1, 2), Scalar(1, 3)},
                                                              {Scalar(3, 2), Scalar(1)}})) == 1);
}

TEST_CASE("rank agrees with rational Gaussian elimination") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    dih::Rng rng(21, 0, i);
    const int n = 1 + static_cast<int>(i % 6);
    // Small ranges and low-rank products make deficient ranks common.
    ExactMatrix a = i % 3 == 0 ? dih::random_rational_matrix(rng, n, -2, 2, 3) : dih::random_int_matrix(rng, n, -1, 1);
    if (i % 5 == 0 && n > 1) a = a.with_row(n, a.row(1));
    const int r = dih::rank(a);
    CHECK(r == oracle::gauss_rank(a));
    CHECK(r == dih::rank(dih::transpose(a)));
    const auto s = dih::rotation_perm(n, n);
    CHECK(r == dih::rank(dih::permute_rows(a, s)));
    CHECK(r == dih::rank(dih::permute_columns(a, dih::reflection_perm(n, 1))));
  }
}

TEST_CASE("linear_combination_row") {
  dih::Rng rng(8, 0, 0);
  const auto a = dih::random_int_matrix(rng, 4, -5, 5);
  const auto b = dih::random_int_vector(rng, 4, -5, 5);
  CHECK(dih::linear_combination_row(a, 2, 1, 0, b) == a);
  CHECK(dih::linear_combination_row(a, 2, 0, 1, b) == a.with_row(2, b));
  const auto c = dih::linear_combination_row(a, 3, 2, Scalar(1, 2), b);
  for (int j = 1; j <= 4; ++j) CHECK(c(3, j) == 2 * a(3, j) + b[static_cast<std::size_t>(j - 1)] / 2);
  CHECK(c.row(1) == a.row(1));
  CHECK_THROWS(dih::linear_combination_row(a, 5, 1, 1, b));
  CHECK_THROWS(dih::linear_combination_row(a, 1, 1, 1, std::vector<Scalar>(3)));
}
