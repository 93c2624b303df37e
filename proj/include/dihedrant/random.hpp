#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dihedrant/exact_matrix.hpp"

namespace dih {

/// Mixes (seed, stream, index) into an independent 64-bit seed, so sample
/// i of stream s is reproducible without generating samples 0..i-1.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// mt19937_64 seeded from split_seed. mt19937_64's output sequence is fixed
/// by the standard; draw_int below avoids the implementation-defined
/// std::uniform_int_distribution so samples match across platforms.
class Rng {
public:
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
      : engine_(split_seed(seed, stream, index)) {}

  /// Uniform integer in [lo, hi].
  long draw_int(long lo, long hi);

  /// Uniform in [lo, hi] excluding 0.
  long draw_nonzero(long lo, long hi);

  /// Uniform index in [0, n).
  std::size_t draw_index(std::size_t n) {
    return static_cast<std::size_t>(draw_int(0, static_cast<long>(n) - 1));
  }

private:
  std::mt19937_64 engine_;
};

ExactMatrix random_int_matrix(Rng& rng, int n, long lo, long hi);

std::vector<Scalar> random_int_vector(Rng& rng, int n, long lo, long hi);

/// Entries p/q with p in [lo, hi] and q in [1, max_den].
ExactMatrix random_rational_matrix(Rng& rng, int n, long lo, long hi, long max_den);

}  // namespace dih
