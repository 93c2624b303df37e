#include "dihedrant/exact_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace dih {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::string out(s);
  if (!out.empty() && out.front() == '+') out.erase(0, 1);
  return out;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  std::string num = strip(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : strip(text.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw std::invalid_argument("not an integer or p/q rational: '" + std::string(text) + "'");
  }
  mpz_class p(num, 10);
  mpz_class q(den, 10);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar x(p, q);
  x.canonicalize();
  return x;
}

std::string scalar_to_string(const Scalar& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

ExactMatrix::ExactMatrix(int n) : n_(n) {
  if (n < 1) throw std::domain_error("matrix order must be >= 1");
  data_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Scalar(0));
}

ExactMatrix::ExactMatrix(const std::vector<std::vector<Scalar>>& rows)
    : n_(static_cast<int>(rows.size())) {
  if (rows.empty()) throw std::domain_error("matrix order must be >= 1");
  data_.reserve(rows.size() * rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw std::domain_error("matrix is not square: row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " +
                              std::to_string(rows.size()));
    }
    for (const Scalar& x : rows[i]) {
      Scalar v = x;
      v.canonicalize();
      data_.push_back(std::move(v));
    }
  }
}

ExactMatrix ExactMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_ints(v);
}

ExactMatrix ExactMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> q;
  q.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    row.reserve(r.size());
    for (long x : r) row.emplace_back(x);
    q.push_back(std::move(row));
  }
  return ExactMatrix(q);
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n);
  for (int i = 1; i <= n; ++i) m.data_[m.index(i, i)] = 1;
  return m;
}

std::vector<Scalar> ExactMatrix::row(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("row index out of range");
  return {data_.begin() + static_cast<std::ptrdiff_t>(index(i, 1)),
          data_.begin() + static_cast<std::ptrdiff_t>(index(i, n_)) + 1};
}

std::vector<Scalar> ExactMatrix::column(int j) const {
  if (j < 1 || j > n_) throw std::out_of_range("column index out of range");
  std::vector<Scalar> c;
  c.reserve(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) c.push_back((*this)(i, j));
  return c;
}

ExactMatrix ExactMatrix::with_entry(int i, int j, const Scalar& value) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("entry index out of range");
  ExactMatrix m = *this;
  m.data_[index(i, j)] = value;
  m.data_[index(i, j)].canonicalize();
  return m;
}

ExactMatrix ExactMatrix::with_row(int i, const std::vector<Scalar>& values) const {
  if (i < 1 || i > n_) throw std::out_of_range("row index out of range");
  if (static_cast<int>(values.size()) != n_) throw std::domain_error("row length mismatch");
  ExactMatrix m = *this;
  for (int j = 1; j <= n_; ++j) {
    m.data_[index(i, j)] = values[static_cast<std::size_t>(j - 1)];
    m.data_[index(i, j)].canonicalize();
  }
  return m;
}

bool ExactMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.get_den() == 1; });
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& a) {
  os << '[';
  for (int i = 1; i <= a.order(); ++i) {
    if (i > 1) os << ',';
    os << '[';
    for (int j = 1; j <= a.order(); ++j) {
      if (j > 1) os << ',';
      os << scalar_to_string(a(i, j));
    }
    os << ']';
  }
  return os << ']';
}

namespace {

void require_same_order(const ExactMatrix& a, const Permutation& sigma) {
  if (sigma.size() != a.order()) {
    throw std::domain_error("permutation of size " + std::to_string(sigma.size()) +
                            " applied to matrix of order " + std::to_string(a.order()));
  }
}

}  // namespace

ExactMatrix transpose(const ExactMatrix& a) {
  const int n = a.order();
  std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) rows[static_cast<std::size_t>(i - 1)] = a.column(i);
  return ExactMatrix(rows);
}

ExactMatrix permute_columns(const ExactMatrix& a, const Permutation& sigma) {
  require_same_order(a, sigma);
  const int n = a.order();
  std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto& r = rows[static_cast<std::size_t>(i - 1)];
    r.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) r.push_back(a(i, sigma(j)));
  }
  return ExactMatrix(rows);
}

ExactMatrix permute_rows(const ExactMatrix& a, const Permutation& sigma) {
  require_same_order(a, sigma);
  const int n = a.order();
  std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) rows[static_cast<std::size_t>(i - 1)] = a.row(sigma(i));
  return ExactMatrix(rows);
}

ExactMatrix linear_combination_row(const ExactMatrix& a, int j, const Scalar& alpha,
                                   const Scalar& beta, const std::vector<Scalar>& b) {
  const int n = a.order();
  if (j < 1 || j > n) throw std::out_of_range("row index out of range");
  if (static_cast<int>(b.size()) != n) throw std::domain_error("vector length mismatch");
  std::vector<Scalar> r = a.row(j);
  for (std::size_t l = 0; l < r.size(); ++l) r[l] = alpha * r[l] + beta * b[l];
  return a.with_row(j, r);
}

ExactMatrix linear_combination_column(const ExactMatrix& a, int j, const Scalar& alpha,
                                      const Scalar& beta, const std::vector<Scalar>& b) {
  return transpose(linear_combination_row(transpose(a), j, alpha, beta, b));
}

int rank(const ExactMatrix& a) {
  const int n = a.order();
  // Scale each row by the lcm of its denominators to get an integer matrix
  // with the same rank.
  std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    mpz_class l = 1;
    for (int j = 1; j <= n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    auto& row = m[static_cast<std::size_t>(i - 1)];
    row.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) row.push_back(a(i, j).get_num() * (l / a(i, j).get_den()));
  }

  // Row-echelon Bareiss: every entry below the processed block stays an
  // integer minor, so the division by the previous pivot is exact.
  mpz_class prev = 1;
  std::size_t r = 0;
  const auto N = static_cast<std::size_t>(n);
  for (std::size_t c = 0; c < N && r < N; ++c) {
    std::size_t p = r;
    while (p < N && m[p][c] == 0) ++p;
    if (p == N) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < N; ++i) {
      for (std::size_t j = c + 1; j < N; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

ExactMatrix permutation_matrix(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(n),
                                        std::vector<Scalar>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(sigma(i) - 1)] = 1;
  }
  return ExactMatrix(rows);
}

}  // namespace dih
