#include "dihedrant/functionals.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace dih {

Scalar diagonal_product(const ExactMatrix& a, const Permutation& sigma) {
  Scalar p = 1;
  for (int i = 1; i <= a.order(); ++i) {
    const Scalar& x = a(i, sigma(i));
    if (x == 0) return Scalar(0);
    p *= x;
  }
  return p;
}

std::vector<SignedTerm> dihedral_terms(int n) {
  std::vector<SignedTerm> terms;
  for (auto& e : dihedral_group(n)) terms.push_back({std::move(e.perm), sig(e)});
  return terms;
}

namespace {

void require_order(const ExactMatrix& a, const std::vector<SignedTerm>& terms) {
  for (const auto& t : terms) {
    if (t.perm.size() != a.order()) {
      throw std::domain_error("term permutation of size " + std::to_string(t.perm.size()) +
                              " for matrix of order " + std::to_string(a.order()));
    }
  }
}

// Below this many terms the thread team costs more than the products.
constexpr std::size_t kParallelTermThreshold = 256;

}  // namespace

Scalar group_functional(const ExactMatrix& a, const std::vector<SignedTerm>& terms) {
  require_order(a, terms);
  const auto count = static_cast<std::ptrdiff_t>(terms.size());
  const int workers = terms.size() < kParallelTermThreshold ? 1 : omp_get_max_threads();
  std::vector<Scalar> partial(static_cast<std::size_t>(workers), Scalar(0));

#pragma omp parallel num_threads(workers)
  {
    Scalar& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
      const SignedTerm& term = terms[static_cast<std::size_t>(t)];
      Scalar p = diagonal_product(a, term.perm);
      if (term.sign > 0) acc += p; else acc -= p;
    }
  }

  Scalar total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

Scalar dihedrant(const ExactMatrix& a) {
  return group_functional(a, dihedral_terms(a.order()));
}

Scalar leibniz_det(const ExactMatrix& a, int cap) {
  const int n = a.order();
  SymmetricGroup group(n, cap);  // enforces the cap
  const std::uint64_t total = group.size();

  // Lexicographic blocks of S_n; each block starts from its unranked first
  // element and walks with next_lex.
  const std::uint64_t blocks =
      std::min<std::uint64_t>(total, static_cast<std::uint64_t>(omp_get_max_threads()) * 8);
  const std::uint64_t per_block = (total + blocks - 1) / blocks;
  std::vector<Scalar> partial(static_cast<std::size_t>(blocks), Scalar(0));

#pragma omp parallel for schedule(dynamic) if (total >= kParallelTermThreshold)
  for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(blocks); ++blk) {
    const std::uint64_t begin = static_cast<std::uint64_t>(blk) * per_block;
    const std::uint64_t end = std::min(total, begin + per_block);
    if (begin >= end) continue;
    Permutation sigma = unrank_lex(n, begin);
    Scalar acc = 0;
    for (std::uint64_t r = begin; r < end; ++r) {
      Scalar p = diagonal_product(a, sigma);
      if (sgn(sigma) > 0) acc += p; else acc -= p;
      next_lex(sigma);
    }
    partial[static_cast<std::size_t>(blk)] = std::move(acc);
  }

  Scalar det = 0;
  for (const auto& p : partial) det += p;
  return det;
}

Scalar elimination_det(const ExactMatrix& a) {
  const auto n = static_cast<std::size_t>(a.order());
  // Clear denominators row by row; det(A) = det(M) / prod(row scales).
  std::vector<std::vector<mpz_class>> m(n);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const int row = static_cast<int>(i) + 1;
    mpz_class l = 1;
    for (int j = 1; j <= a.order(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(row, j).get_den_mpz_t());
    }
    scale *= l;
    m[i].reserve(n);
    for (int j = 1; j <= a.order(); ++j) m[i].push_back(a(row, j).get_num() * (l / a(row, j).get_den()));
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Scalar det(mpz_class(sign) * m[n - 1][n - 1], scale);
  det.canonicalize();
  return det;
}

}  // namespace dih
