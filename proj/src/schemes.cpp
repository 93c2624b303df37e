#include "dihedrant/schemes.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace dih {

Scheme false_sarrus_scheme(int n) {
  Scheme s{n, dihedral_terms(n), "false Sarrus band, n=" + std::to_string(n)};
  return s;
}

const std::array<Permutation, 3>& corrected_scheme_columns() {
  // One column order per cyclic arrangement of {1,2,3,4} up to rotation and
  // reversal; D_4 preserves exactly one such arrangement.
  static const std::array<Permutation, 3> columns{
      Permutation({1, 2, 3, 4}),
      Permutation({1, 2, 4, 3}),
      Permutation({1, 3, 2, 4}),
  };
  return columns;
}

namespace {

std::vector<Scheme> build_corrected() {
  std::vector<Scheme> schemes;
  std::set<Permutation> seen;
  const auto d4 = dihedral_group(4);
  for (const Permutation& tau : corrected_scheme_columns()) {
    Scheme s{4, {}, "columns " + tau.to_string()};
    for (const auto& d : d4) {
      Permutation p = compose(tau, d.perm);
      const int sign = sgn(p);
      seen.insert(p);
      s.monomials.push_back({std::move(p), sign});
    }
    schemes.push_back(std::move(s));
  }
  if (seen.size() != 24) {
    throw std::logic_error("corrected 4x4 scheme does not partition S_4");
  }
  return schemes;
}

std::string factor_name(int n, int i, int j) {
  if (n < 10) return "a" + std::to_string(i) + std::to_string(j);
  return "a" + std::to_string(i) + "," + std::to_string(j);
}

}  // namespace

std::vector<Scheme> corrected_scheme_4x4() {
  static const std::vector<Scheme> schemes = build_corrected();
  return schemes;
}

std::vector<DihedralSign> scheme_signs_within_D4() {
  std::vector<DihedralSign> out;
  for (auto& e : dihedral_group(4)) {
    const int s = sgn(e.perm);
    out.push_back({std::move(e), s});
  }
  return out;
}

Scalar evaluate(const Scheme& s, const ExactMatrix& a) {
  return group_functional(a, s.monomials);
}

std::string render_scheme_text(const Scheme& s) {
  std::ostringstream os;
  for (const auto& m : s.monomials) {
    os << (m.sign > 0 ? '+' : '-');
    for (int i = 1; i <= s.n; ++i) os << ' ' << factor_name(s.n, i, m.perm(i));
    os << '\n';
  }
  return os.str();
}

std::string render_dihedral_listing(int n) {
  std::ostringstream os;
  for (const auto& e : dihedral_group(n)) {
    os << e.name() << "  " << e.perm << "  sig=" << (sig(e) > 0 ? "+1" : "-1") << '\n';
  }
  return os.str();
}

}  // namespace dih
