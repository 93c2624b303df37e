#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

namespace dih {

/// Default largest n for which S_n may be enumerated (10! = 3628800).
inline constexpr int kDefaultOracleCap = 10;

/// A bijection of {1..n} stored in one-line notation.
///
/// All accessors are 1-based: `(*this)(i)` is sigma(i) for i in 1..n.
/// Construction validates bijectivity and throws std::domain_error
/// otherwise, so every live Permutation is valid.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }

  /// sigma(i), 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  std::string to_string() const;

  /// Steps to the lexicographic successor in place. Returns false (and
  /// wraps to the identity) after the last permutation.
  friend bool next_lex(Permutation& p);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

bool next_lex(Permutation& p);

enum class DihedralKind { Rotation, Reflection };

/// One of the 2n symmetries of the regular n-gon, tagged with how it was
/// built. For n <= 2 a rotation and a reflection may share a permutation;
/// the tag is what distinguishes them.
struct DihedralElement {
  Permutation perm;
  DihedralKind kind;
  int index;  // k in 1..n

  /// "rho_k" or "mu_k".
  std::string name() const;
};

/// ((x - 1) mod n) + 1 with a nonnegative mod; maps any integer into 1..n.
int mod1(long long x, int n);

/// rho_k: i -> mod1(i + k - 1, n).
Permutation rotation_perm(int n, int k);

/// mu_k: i -> mod1(k + 1 - i, n).
Permutation reflection_perm(int n, int k);

/// rho_1..rho_n followed by mu_1..mu_n, always 2n entries.
std::vector<DihedralElement> dihedral_group(int n);

/// tau o sigma, i.e. i -> tau(sigma(i)).
Permutation compose(const Permutation& tau, const Permutation& sigma);

Permutation inverse(const Permutation& sigma);

/// Parity via cycle decomposition: (-1)^(n - #cycles).
int sgn(const Permutation& sigma);

int cycle_count(const Permutation& sigma);

/// +1 for rotations, -1 for reflections.
inline int sig(const DihedralElement& e) noexcept {
  return e.kind == DihedralKind::Rotation ? 1 : -1;
}

/// Finds an element of `group` whose permutation equals `p`. For n >= 3
/// the match is unique; for n <= 2 the first (rotation) match is returned.
const DihedralElement* find_dihedral(const std::vector<DihedralElement>& group,
                                     const Permutation& p);

/// n! as an unsigned 64-bit value; n must be <= 20.
std::uint64_t factorial(int n);

/// The permutation of lexicographic rank `rank` in S_n (rank 0 is the
/// identity). Used to split enumeration across workers.
Permutation unrank_lex(int n, std::uint64_t rank);

/// Lexicographic enumeration of S_n as an input range.
///
///   for (const Permutation& p : SymmetricGroup(4)) ...
///
/// Refuses n above `cap` with ResourceLimitError.
class SymmetricGroup {
public:
  explicit SymmetricGroup(int n, int cap = kDefaultOracleCap);

  class iterator {
  public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using reference = const Permutation&;
    using pointer = const Permutation*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(int n) : current_(Permutation::identity(n)), done_(false) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_;
    }

  private:
    Permutation current_ = Permutation::identity(1);
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

  int order() const noexcept { return n_; }
  std::uint64_t size() const { return factorial(n_); }

private:
  int n_;
};

/// Convenience: all of S_n materialized in lexicographic order.
std::vector<Permutation> symmetric_group(int n, int cap = kDefaultOracleCap);

}  // namespace dih
