#include "dihedrant/claims.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dih {

namespace {

CheckConfig config_for(const VerifyOptions& opts, std::size_t default_trials, long lo = -5, long hi = 5) {
  CheckConfig cfg;
  cfg.seed = opts.seed;
  cfg.trials = opts.trials.value_or(default_trials);
  cfg.lo = lo;
  cfg.hi = hi;
  cfg.workers = opts.workers;
  return cfg;
}

constexpr std::size_t kSuiteTrials = 200;

}  // namespace

const std::vector<std::string>& known_claims() {
  static const std::vector<std::string> ids{
      "ledger",
      "fact:degenerate",
      "fact:n3",
      "thm:AT",
      "thm:rotation",
      "thm:rotation-all",
      "thm:linear",
      "thm:rank1",
      "thm:n-1-row-equal",
      "thm:n-2-row-equal",
      "cor:rank2",
      "lem:signs",
      "thm:antitriangular",
      "scheme:4x4",
      "oracle:elim",
      "ex:rank2-expansion",
  };
  return ids;
}

bool is_known_claim(std::string_view id) {
  if (id == "all") return true;
  const auto& ids = known_claims();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<TheoremReport> run_claim(std::string_view id, const VerifyOptions& opts) {
  if (id == "all") {
    std::vector<TheoremReport> out;
    for (const auto& c : known_claims()) {
      auto part = run_claim(c, opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (id == "ledger") return check_counterexample_ledger();
  if (id == "fact:degenerate") return {check_degenerate(config_for(opts, 500))};
  if (id == "fact:n3") return {check_n3_equivalence(config_for(opts, 10000, -9, 9))};
  if (id == "thm:AT") return {check_transpose(config_for(opts, kSuiteTrials))};
  if (id == "thm:rotation") return {check_dihedral_permutation(config_for(opts, kSuiteTrials))};
  if (id == "thm:rotation-all") return {check_dihedral_permutation_all(config_for(opts, 50), 4, 7)};
  if (id == "thm:linear") return {check_multilinearity(config_for(opts, kSuiteTrials))};
  if (id == "thm:rank1") return {check_rank1(config_for(opts, kSuiteTrials))};
  if (id == "thm:n-1-row-equal") return {check_n_minus_1_equal_rows(config_for(opts, kSuiteTrials))};
  if (id == "thm:n-2-row-equal") return {check_n_minus_2_equal_rows(config_for(opts, kSuiteTrials))};
  if (id == "cor:rank2") return {check_rank2_small(config_for(opts, kSuiteTrials))};
  if (id == "lem:signs") return {check_lemma_signs(12)};
  if (id == "thm:antitriangular") {
    std::vector<TheoremReport> out;
    for (int n = 3; n <= 9; ++n) out.push_back(check_antitriangular(n, config_for(opts, 100)));
    return out;
  }
  if (id == "scheme:4x4") return {check_corrected_scheme(config_for(opts, 500, -9, 9))};
  if (id == "oracle:elim") return {check_oracle_agreement(config_for(opts, kSuiteTrials), 1, 6)};
  if (id == "ex:rank2-expansion") {
    std::vector<TheoremReport> out;
    for (int n = 4; n <= 6; ++n) out.push_back(check_rank2_expansion(n, config_for(opts, 50)));
    return out;
  }
  throw std::invalid_argument("unknown claim '" + std::string(id) + "'");
}

std::string format_report(const TheoremReport& r) {
  std::ostringstream os;
  os << r.claim_id << "  " << r.trials << "  " << r.failures << '\n';
  if (r.witness) os << "  witness " << *r.witness << '\n';
  return os.str();
}

std::string format_reports(const std::vector<TheoremReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += format_report(r);
  return out;
}

}  // namespace dih
