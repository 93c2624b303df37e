#include "dihedrant/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dihedrant/errors.hpp"

namespace dih {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n < 1) throw std::domain_error("permutation must have n >= 1");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n) {
      throw std::domain_error("permutation image " + std::to_string(v) + " outside 1.." +
                              std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw std::domain_error("permutation image " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::domain_error("permutation must have n >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  os << '(';
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) os << ',';
    os << p(i);
  }
  return os << ')';
}

std::string DihedralElement::name() const {
  return (kind == DihedralKind::Rotation ? "rho_" : "mu_") + std::to_string(index);
}

int mod1(long long x, int n) {
  long long r = (x - 1) % n;
  if (r < 0) r += n;
  return static_cast<int>(r + 1);
}

namespace {
void check_index(int n, int k) {
  if (n < 1) throw std::domain_error("order n must be >= 1");
  if (k < 1 || k > n) {
    throw std::domain_error("index k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
}
}  // namespace

Permutation rotation_perm(int n, int k) {
  check_index(n, k);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = mod1(i + k - 1, n);
  return Permutation(std::move(images));
}

Permutation reflection_perm(int n, int k) {
  check_index(n, k);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = mod1(k + 1 - i, n);
  return Permutation(std::move(images));
}

std::vector<DihedralElement> dihedral_group(int n) {
  if (n < 1) throw std::domain_error("order n must be >= 1");
  std::vector<DihedralElement> group;
  group.reserve(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= n; ++k) group.push_back({rotation_perm(n, k), DihedralKind::Rotation, k});
  for (int k = 1; k <= n; ++k) {
    group.push_back({reflection_perm(n, k), DihedralKind::Reflection, k});
  }
  return group;
}

Permutation compose(const Permutation& tau, const Permutation& sigma) {
  if (tau.size() != sigma.size()) {
    throw std::domain_error("compose: size mismatch " + std::to_string(tau.size()) + " vs " +
                            std::to_string(sigma.size()));
  }
  std::vector<int> images(static_cast<std::size_t>(sigma.size()));
  for (int i = 1; i <= sigma.size(); ++i) images[static_cast<std::size_t>(i - 1)] = tau(sigma(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& sigma) {
  std::vector<int> images(static_cast<std::size_t>(sigma.size()));
  for (int i = 1; i <= sigma.size(); ++i) images[static_cast<std::size_t>(sigma(i) - 1)] = i;
  return Permutation(std::move(images));
}

int cycle_count(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  int cycles = 0;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    ++cycles;
    for (int i = start; !visited[static_cast<std::size_t>(i - 1)]; i = sigma(i)) {
      visited[static_cast<std::size_t>(i - 1)] = true;
    }
  }
  return cycles;
}

int sgn(const Permutation& sigma) {
  return ((sigma.size() - cycle_count(sigma)) % 2 == 0) ? 1 : -1;
}

const DihedralElement* find_dihedral(const std::vector<DihedralElement>& group,
                                     const Permutation& p) {
  auto it = std::find_if(group.begin(), group.end(),
                         [&](const DihedralElement& e) { return e.perm == p; });
  return it == group.end() ? nullptr : &*it;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::domain_error("factorial: n must be in 0..20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation unrank_lex(int n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw std::domain_error("unrank_lex: rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  images.reserve(pool.size());
  for (int remaining = n; remaining >= 1; --remaining) {
    const std::uint64_t block = factorial(remaining - 1);
    const auto pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    images.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Permutation(std::move(images));
}

SymmetricGroup::SymmetricGroup(int n, int cap) : n_(n) {
  if (n < 1) throw std::domain_error("order n must be >= 1");
  if (n > cap) {
    throw ResourceLimitError("S_" + std::to_string(n) + " exceeds the enumeration cap n <= " +
                                 std::to_string(cap),
                             static_cast<std::size_t>(cap));
  }
}

SymmetricGroup::iterator& SymmetricGroup::iterator::operator++() {
  done_ = !next_lex(current_);
  return *this;
}

bool next_lex(Permutation& p) {
  return std::next_permutation(p.images_.begin(), p.images_.end());
}

std::vector<Permutation> symmetric_group(int n, int cap) {
  SymmetricGroup group(n, cap);
  std::vector<Permutation> all;
  all.reserve(static_cast<std::size_t>(group.size()));
  for (const Permutation& p : group) all.push_back(p);
  return all;
}

}  // namespace dih
