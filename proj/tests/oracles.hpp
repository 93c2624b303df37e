#pragma once

// Independent reference computations used only by the tests. None of these
// go through perm_core's group enumeration or the library's elimination.

#include <vector>

#include "dihedrant/exact_matrix.hpp"

namespace oracle {

// rho_k written out as (k, k+1, ..., n, 1, ..., k-1).
inline std::vector<int> rotation_values(int n, int k) {
  std::vector<int> v;
  for (int x = k; x <= n; ++x) v.push_back(x);
  for (int x = 1; x < k; ++x) v.push_back(x);
  return v;
}

// mu_k written out as (k, k-1, ..., 1, n, ..., k+1).
inline std::vector<int> reflection_values(int n, int k) {
  std::vector<int> v;
  for (int x = k; x >= 1; --x) v.push_back(x);
  for (int x = n; x > k; --x) v.push_back(x);
  return v;
}

inline int inversion_sign(const std::vector<int>& images) {
  int inv = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i] > images[j]) ++inv;
    }
  }
  return inv % 2 == 0 ? 1 : -1;
}

// The band diagram itself: append the first n-1 columns, add the n
// down-right diagonals and subtract the n down-left diagonals.
inline dih::Scalar band_dihedrant(const dih::ExactMatrix& a) {
  const int n = a.order();
  auto ext = [&](int i, int j) -> const dih::Scalar& { return a(i, (j - 1) % n + 1); };
  dih::Scalar sum = 0;
  for (int start = 1; start <= n; ++start) {
    dih::Scalar p = 1;
    for (int i = 1; i <= n; ++i) p *= ext(i, start + i - 1);
    sum += p;
  }
  for (int start = n; start <= 2 * n - 1; ++start) {
    dih::Scalar p = 1;
    for (int i = 1; i <= n; ++i) p *= ext(i, start - i + 1);
    sum -= p;
  }
  return sum;
}

// Laplace expansion along the first row.
inline dih::Scalar cofactor_det(const std::vector<std::vector<dih::Scalar>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  dih::Scalar det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<dih::Scalar>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<dih::Scalar> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    dih::Scalar term = m[0][c] * cofactor_det(minor);
    if (c % 2 == 0) det += term; else det -= term;
  }
  return det;
}

inline dih::Scalar cofactor_det(const dih::ExactMatrix& a) {
  std::vector<std::vector<dih::Scalar>> m;
  for (int i = 1; i <= a.order(); ++i) m.push_back(a.row(i));
  return cofactor_det(m);
}

// Plain rational Gaussian elimination.
inline int gauss_rank(const dih::ExactMatrix& a) {
  std::vector<std::vector<dih::Scalar>> m;
  for (int i = 1; i <= a.order(); ++i) m.push_back(a.row(i));
  const std::size_t n = m.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const dih::Scalar f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace oracle
