#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dihedrant/permutation.hpp"

namespace dih {

/// Exact rational scalar. gmpxx keeps values canonical after arithmetic;
/// values built from strings go through make_scalar / parse_scalar.
using Scalar = mpq_class;

/// Parses "p" or "p/q" (optional leading sign, q != 0) into canonical form.
/// Throws std::invalid_argument on malformed text.
Scalar parse_scalar(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string scalar_to_string(const Scalar& x);

/// Square matrix of exact rationals, addressed 1-based as (row, column).
/// Immutable: every operation returns a new matrix.
class ExactMatrix {
public:
  /// n x n zero matrix.
  explicit ExactMatrix(int n);

  /// Row-major entries; throws std::domain_error unless square and n >= 1.
  explicit ExactMatrix(const std::vector<std::vector<Scalar>>& rows);

  static ExactMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);
  static ExactMatrix from_ints(const std::vector<std::vector<long>>& rows);
  static ExactMatrix identity(int n);

  int order() const noexcept { return n_; }

  const Scalar& operator()(int i, int j) const {
    return data_[index(i, j)];
  }

  std::vector<Scalar> row(int i) const;
  std::vector<Scalar> column(int j) const;

  /// Copy with entry (i, j) replaced.
  ExactMatrix with_entry(int i, int j, const Scalar& value) const;

  /// Copy with row i replaced by `values`.
  ExactMatrix with_row(int i, const std::vector<Scalar>& values) const;

  bool is_integral() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
  }

  int n_;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const ExactMatrix& a);

ExactMatrix transpose(const ExactMatrix& a);

/// Column j of the result is column sigma(j) of `a`.
ExactMatrix permute_columns(const ExactMatrix& a, const Permutation& sigma);

/// Row i of the result is row sigma(i) of `a`.
ExactMatrix permute_rows(const ExactMatrix& a, const Permutation& sigma);

/// Row j replaced by alpha * row_j(a) + beta * b.
ExactMatrix linear_combination_row(const ExactMatrix& a, int j, const Scalar& alpha,
                                   const Scalar& beta, const std::vector<Scalar>& b);

/// Column analogue of linear_combination_row.
ExactMatrix linear_combination_column(const ExactMatrix& a, int j, const Scalar& alpha,
                                      const Scalar& beta, const std::vector<Scalar>& b);

/// Exact rank over Q by fraction-free elimination on the integer matrix
/// obtained by clearing denominators row by row.
int rank(const ExactMatrix& a);

/// Permutation matrix P with P(i, sigma(i)) = 1.
ExactMatrix permutation_matrix(const Permutation& sigma);

}  // namespace dih
