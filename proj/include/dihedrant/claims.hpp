#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dihedrant/analysis.hpp"

namespace dih {

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Overrides each claim's default trial count when set.
  std::optional<std::size_t> trials;
  int workers = 0;
};

/// Claim ids accepted by run_claim, in the order `all` runs them.
const std::vector<std::string>& known_claims();

bool is_known_claim(std::string_view id);

/// Runs one claim (or "all"). Throws std::invalid_argument for unknown ids.
std::vector<TheoremReport> run_claim(std::string_view id, const VerifyOptions& opts);

/// "claim_id  trials  failures", then an indented witness line if present.
std::string format_report(const TheoremReport& r);

std::string format_reports(const std::vector<TheoremReport>& reports);

}  // namespace dih
