// Command-line front end: validate economies, test minimality, compute the
// equilibrium allocation and supporting price, and generate test economies.
//
// Exit codes (frozen interface):
//   0  success
//   1  I/O or parse failure
//   2  invalid economy
//   3  economy is valid but not minimal
//   4  price-system anomaly (inconsistent / underdetermined / negative)
//   5  generation failure

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "simplexeq/equilibrium.hpp"
#include "simplexeq/gen.hpp"
#include "simplexeq/io.hpp"
#include "simplexeq/model.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNotMinimal = 3;
constexpr int kExitPriceAnomaly = 4;
constexpr int kExitGeneration = 5;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw simplexeq::Error(simplexeq::Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int exit_code_for(const simplexeq::Error& e) {
  switch (e.code()) {
    case simplexeq::Errc::entry_out_of_range:
    case simplexeq::Errc::sigma_out_of_range:
    case simplexeq::Errc::column_not_stochastic:
    case simplexeq::Errc::zero_column:
    case simplexeq::Errc::shape_mismatch:
      return kExitInvalid;
    case simplexeq::Errc::generation_failed:
      return kExitGeneration;
    default:
      return kExitIo;
  }
}

simplexeq::ValidatedEconomy load_economy(const std::string& path,
                                         simplexeq::StochasticPolicy policy) {
  const std::string text = read_input(path);
  simplexeq::RawEconomy raw = simplexeq::parse_economy(text, path);
  return simplexeq::validate_economy(raw.w_rows, raw.sigma_one_based, policy);
}

int cmd_validate(const std::string& path, bool normalize) {
  auto validated = load_economy(path, normalize ? simplexeq::StochasticPolicy::normalize
                                                : simplexeq::StochasticPolicy::exact);
  std::cout << simplexeq::column_sums_line(validated.report) << "\n"
            << simplexeq::adjustments_lines(validated.report)
            << "verdict: valid simplex economy (" << validated.economy.consumers()
            << " consumers, " << validated.economy.commodities() << " commodities)\n";
  return kExitOk;
}

int cmd_check_minimal(const std::string& path) {
  auto validated = load_economy(path, simplexeq::StochasticPolicy::exact);
  auto groups = simplexeq::group_preferences(validated.economy.preferences());
  auto mins = simplexeq::compute_min_terms(validated.economy, groups);
  auto minimality = simplexeq::is_minimal(validated.economy, groups, mins);
  std::cout << "min terms:";
  for (int s = 0; s < groups.count(); ++s) {
    std::cout << " Min[" << groups.groups[static_cast<std::size_t>(s)].commodity + 1
              << "] = " << mins.value[static_cast<std::size_t>(s)].str();
  }
  std::cout << "\n";
  if (minimality.minimal) {
    std::cout << "minimal: yes (witness: consumer " << *minimality.witness + 1 << ")\n";
    return kExitOk;
  }
  std::cout << "minimal: no\n";
  return kExitNotMinimal;
}

int cmd_solve(const std::string& path, const std::string& format, int verify_trials,
              std::uint64_t seed) {
  auto validated = load_economy(path, simplexeq::StochasticPolicy::exact);
  auto result = simplexeq::solve_equilibrium(validated.economy);

  simplexeq::VerificationReport verification;
  const simplexeq::VerificationReport* verification_ptr = nullptr;
  if (verify_trials > 0) {
    verification =
        simplexeq::verify_equilibrium_sampled(result, validated.economy, verify_trials, seed);
    verification_ptr = &verification;
  }

  if (format == "machine") {
    std::cout << simplexeq::report_to_json(validated, result, verification_ptr);
  } else {
    std::cout << simplexeq::report_to_table(validated, result, verification_ptr);
  }

  if (!result.price.price.has_value()) {
    std::cerr << "error: no supporting price (" << simplexeq::outcome_name(result.price.outcome)
              << (result.price.negative_component ? ", negative component" : "") << ")\n";
    return kExitPriceAnomaly;
  }
  if (!result.minimality.minimal) {
    std::cerr << "warning: economy is not minimal; equilibrium not guaranteed\n";
    return kExitNotMinimal;
  }
  return kExitOk;
}

int cmd_generate(int consumers, int commodities, std::uint64_t seed, unsigned bound,
                 bool minimal) {
  simplexeq::GenSpec spec;
  spec.consumers = consumers;
  spec.commodities = commodities;
  spec.seed = seed;
  spec.denominator_bound = bound;
  spec.force_minimal = minimal;
  std::cout << simplexeq::economy_to_json(simplexeq::generate_economy(spec));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact competitive-equilibrium solver for simplex exchange economies"};
  app.require_subcommand(1);

  std::string path;
  bool normalize = false;
  auto* validate = app.add_subcommand("validate", "Validate an economy file");
  validate->add_option("file", path, "Economy file (JSON or CSV; '-' for stdin)")->required();
  validate->add_flag("--normalize", normalize, "Rescale columns to unit sum instead of rejecting");

  auto* check = app.add_subcommand("check-minimal", "Test minimality of a valid economy");
  check->add_option("file", path, "Economy file (JSON or CSV; '-' for stdin)")->required();

  std::string format = "table";
  int verify_trials = 0;
  std::uint64_t seed = 0;
  auto* solve = app.add_subcommand("solve", "Compute the equilibrium allocation and price");
  solve->add_option("file", path, "Economy file (JSON or CSV; '-' for stdin)")->required();
  solve->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"table", "machine"}))
      ->capture_default_str();
  solve->add_option("--verify-trials", verify_trials,
                    "Sample this many dominating allocations and check the budget defense")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--seed", seed, "Seed for the verification sampler")->capture_default_str();

  int gen_m = 1;
  int gen_n = 1;
  unsigned bound = 10;
  bool minimal = false;
  auto* generate = app.add_subcommand("generate", "Emit a random economy file on stdout");
  generate->add_option("-m,--consumers", gen_m, "Number of consumers")
      ->required()
      ->check(CLI::PositiveNumber);
  generate->add_option("-n,--commodities", gen_n, "Number of commodities")
      ->required()
      ->check(CLI::PositiveNumber);
  generate->add_option("--seed", seed, "Generator seed")->capture_default_str();
  generate->add_option("--denominator-bound", bound, "Granularity of the drawn fractions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_flag("--minimal", minimal, "Post-edit the economy until it is minimal");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(path, normalize);
    if (check->parsed()) return cmd_check_minimal(path);
    if (solve->parsed()) return cmd_solve(path, format, verify_trials, seed);
    if (generate->parsed()) return cmd_generate(gen_m, gen_n, seed, bound, minimal);
  } catch (const simplexeq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
