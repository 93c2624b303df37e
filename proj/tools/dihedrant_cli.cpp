// Command-line front end for the dihedrant library.
//
//   dihedrant eval FILE [--functional dih|det-leibniz|det-elim] [--format json|csv]
//   dihedrant verify CLAIM|all [--seed S] [--trials T]
//   dihedrant signs N
//   dihedrant scheme N|4x4-corrected
//   dihedrant search --n N --min LO --max HI [--mode random|exhaustive] ...
//   dihedrant corner [--n-min A] [--n-max B] [--samples S] [--seed S]
//   dihedrant dihedral N
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/parse error, 3 resource limit.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dihedrant/analysis.hpp"
#include "dihedrant/claims.hpp"
#include "dihedrant/errors.hpp"
#include "dihedrant/functionals.hpp"
#include "dihedrant/matrix_io.hpp"
#include "dihedrant/schemes.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

int oracle_cap() {
  const char* env = std::getenv("DIH_ORACLE_CAP");
  if (env == nullptr || *env == '\0') return dih::kDefaultOracleCap;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("DIH_ORACLE_CAP is not an integer: ") + env);
  }
}

int cmd_eval(const std::string& path, const std::string& functional,
             const std::optional<std::string>& format) {
  dih::MatrixFormat fmt = dih::format_for_path(path);
  if (format) fmt = *format == "csv" ? dih::MatrixFormat::Csv : dih::MatrixFormat::Json;
  const dih::ExactMatrix a = dih::read_matrix_file(path, fmt);
  dih::Scalar value;
  if (functional == "dih") value = dih::dihedrant(a);
  else if (functional == "det-leibniz") value = dih::leibniz_det(a, oracle_cap());
  else value = dih::elimination_det(a);
  std::cout << dih::scalar_to_string(value) << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& claim, std::uint64_t seed, const std::optional<std::size_t>& trials,
               int workers) {
  if (!dih::is_known_claim(claim)) {
    std::cerr << "error: unknown claim '" << claim << "'; known claims: all";
    for (const auto& c : dih::known_claims()) std::cerr << ' ' << c;
    std::cerr << '\n';
    return kExitUsage;
  }
  const auto reports = dih::run_claim(claim, {seed, trials, workers});
  std::cout << dih::format_reports(reports);
  for (const auto& r : reports) {
    if (!r.passed()) return kExitFailed;
  }
  return kExitOk;
}

int cmd_scheme(const std::string& which) {
  if (which == "4x4-corrected") {
    const auto schemes = dih::corrected_scheme_4x4();
    for (std::size_t i = 0; i < schemes.size(); ++i) {
      if (i > 0) std::cout << '\n';
      std::cout << "# " << schemes[i].label << '\n' << dih::render_scheme_text(schemes[i]);
    }
    return kExitOk;
  }
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(which, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != which.size() || n < 1) {
    std::cerr << "error: scheme expects a positive order or '4x4-corrected', got '" << which << "'\n";
    return kExitUsage;
  }
  std::cout << dih::render_scheme_text(dih::false_sarrus_scheme(n));
  return kExitOk;
}

int cmd_search(const dih::SearchConfig& cfg) {
  const auto found = dih::search_dih_equals_det(cfg);
  std::cout << '[';
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::cout << (i == 0 ? "\n  " : ",\n  ") << dih::matrix_to_json(found[i]);
  }
  std::cout << (found.empty() ? "]\n" : "\n]\n");
  return kExitOk;
}

int cmd_corner(int n_lo, int n_hi, const dih::CheckConfig& cfg) {
  std::cout << "n  samples  dih!=det\n";
  std::string held;
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto r = dih::check_corner_pattern(n, cfg);
    std::cout << n << "  " << r.trials << "  " << r.failures << '\n';
    if (r.failures == 0) held += (held.empty() ? "" : ",") + std::to_string(n);
  }
  std::cout << "dih = det on every sample for n in {" << held << "}\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dihedrant and Sarrus-scheme toolkit over exact rationals"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate a functional on a matrix file");
  std::string eval_path;
  std::string functional = "dih";
  std::optional<std::string> format;
  eval->add_option("path", eval_path, "Matrix file (.json or .csv)")->required();
  eval->add_option("--functional,-f", functional, "dih | det-leibniz | det-elim")
      ->check(CLI::IsMember({"dih", "det-leibniz", "det-elim"}));
  eval->add_option("--format", format, "json | csv (default: by extension)")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run a claim's property suite");
  std::string claim;
  std::uint64_t seed = 1;
  std::optional<std::size_t> trials;
  int workers = 0;
  verify->add_option("claim", claim, "Claim id or 'all'")->required();
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--trials", trials, "Override the claim's trial count");
  verify->add_option("--workers", workers, "Worker threads (0: default)");

  auto* signs = app.add_subcommand("signs", "sig vs sgn table for D_n");
  int signs_n = 0;
  signs->add_option("n", signs_n, "Order")->required()->check(CLI::PositiveNumber);

  auto* scheme = app.add_subcommand("scheme", "Print a Sarrus-style scheme");
  std::string scheme_which;
  scheme->add_option("which", scheme_which, "Order n or '4x4-corrected'")->required();

  auto* search = app.add_subcommand("search", "Search for matrices with dih = det");
  dih::SearchConfig search_cfg;
  std::string mode = "random";
  search->add_option("--n", search_cfg.n, "Order")->required()->check(CLI::PositiveNumber);
  search->add_option("--min", search_cfg.lo, "Smallest entry")->required();
  search->add_option("--max", search_cfg.hi, "Largest entry")->required();
  search->add_option("--mode", mode, "random | exhaustive")->check(CLI::IsMember({"random", "exhaustive"}));
  search->add_option("--seed", search_cfg.seed, "RNG seed (random mode)");
  search->add_option("--count", search_cfg.sample_count, "Samples (random mode)");
  search->add_flag("--require-nonzero", search_cfg.require_nonzero, "Only report dih = det != 0");
  search->add_option("--budget", search_cfg.exhaustive_budget, "Exhaustive-mode matrix budget");
  search->add_option("--workers", search_cfg.workers, "Worker threads (0: default)");

  auto* corner = app.add_subcommand("corner", "Empirical dih = det table for the corner pattern");
  int corner_lo = 4;
  int corner_hi = 8;
  dih::CheckConfig corner_cfg;
  corner->add_option("--n-min", corner_lo, "Smallest order")->check(CLI::Range(2, 12));
  corner->add_option("--n-max", corner_hi, "Largest order")->check(CLI::Range(2, 12));
  corner->add_option("--samples", corner_cfg.trials, "Samples per order");
  corner->add_option("--seed", corner_cfg.seed, "RNG seed");

  auto* dihedral = app.add_subcommand("dihedral", "List the rotations and reflections of D_n");
  int dihedral_n = 0;
  dihedral->add_option("n", dihedral_n, "Order")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_path, functional, format);
    if (*verify) return cmd_verify(claim, seed, trials, workers);
    if (*signs) {
      std::cout << dih::render_sign_table(dih::classify_signs(signs_n));
      return kExitOk;
    }
    if (*scheme) return cmd_scheme(scheme_which);
    if (*search) {
      search_cfg.mode = mode == "exhaustive" ? dih::SearchMode::Exhaustive : dih::SearchMode::Random;
      return cmd_search(search_cfg);
    }
    if (*corner) return cmd_corner(corner_lo, corner_hi, corner_cfg);
    if (*dihedral) {
      std::cout << dih::render_dihedral_listing(dihedral_n);
      return kExitOk;
    }
  } catch (const dih::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const dih::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
