#include "dihedrant/random.hpp"

#include <limits>
#include <stdexcept>

namespace dih {

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

long Rng::draw_int(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("draw_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long>(engine_());  // full 64-bit range
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<long>(static_cast<std::uint64_t>(lo) + x % span);
}

long Rng::draw_nonzero(long lo, long hi) {
  if (lo == 0 && hi == 0) throw std::invalid_argument("draw_nonzero: range is {0}");
  long x;
  do {
    x = draw_int(lo, hi);
  } while (x == 0);
  return x;
}

ExactMatrix random_int_matrix(Rng& rng, int n, long lo, long hi) {
  std::vector<std::vector<long>> rows(static_cast<std::size_t>(n));
  for (auto& r : rows) {
    r.resize(static_cast<std::size_t>(n));
    for (auto& x : r) x = rng.draw_int(lo, hi);
  }
  return ExactMatrix::from_ints(rows);
}

std::vector<Scalar> random_int_vector(Rng& rng, int n, long lo, long hi) {
  std::vector<Scalar> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.emplace_back(rng.draw_int(lo, hi));
  return v;
}

ExactMatrix random_rational_matrix(Rng& rng, int n, long lo, long hi, long max_den) {
  std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(n));
  for (auto& r : rows) {
    for (int j = 0; j < n; ++j) {
      const long p = rng.draw_int(lo, hi);
      const long q = rng.draw_int(1, max_den);
      Scalar x{mpz_class(p), mpz_class(q)};
      x.canonicalize();
      r.push_back(x);
    }
  }
  return ExactMatrix(rows);
}

}  // namespace dih
