// Acceptance suite: runs the full set of exit criteria and prints one
// PASS/FAIL line per criterion. Exits nonzero when any criterion fails.
//
// Paths default to the build-time locations; SIMPLEXEQ_DATA and
// SIMPLEXEQ_CLI environment variables override them.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "simplexeq/equilibrium.hpp"
#include "simplexeq/gen.hpp"
#include "simplexeq/io.hpp"
#include "simplexeq/model.hpp"
#include "../test_support.hpp"

using namespace simplexeq;
using support::R;
using support::Rows;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string data_dir() {
  if (const char* env = std::getenv("SIMPLEXEQ_DATA")) return env;
  return SIMPLEXEQ_DATA_DIR;
}

std::string cli_path() {
  if (const char* env = std::getenv("SIMPLEXEQ_CLI")) return env;
  return SIMPLEXEQ_CLI_PATH;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string run_capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
  std::array<char, 4096> chunk{};
  std::size_t got = 0;
  while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0) out.append(chunk.data(), got);
  if (pclose(pipe) == -1) throw std::runtime_error("pclose failed");
  return out;
}

ValidatedEconomy load(const std::string& file) {
  RawEconomy raw = parse_economy(read_file(data_dir() + "/" + file), file);
  return validate_economy(raw.w_rows, raw.sigma_one_based);
}

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

// --- criterion bodies ------------------------------------------------------

bool golden_example(std::string& detail) {
  const auto start = Clock::now();
  ValidatedEconomy validated = load("example1.json");
  EquilibriumResult result = solve_equilibrium(validated.economy);
  const double elapsed = seconds_since(start);

  Allocation expected_f{support::example5x4_f_star()};
  PriceSystem expected_p{{R("1/4"), R("0"), R("1/4"), R("1/2")}};
  bool ok = result.f_star == expected_f;
  if (!result.price.price.has_value() || !(*result.price.price == expected_p)) ok = false;
  if (elapsed >= 1.0) ok = false;
  detail = "solved in " + std::to_string(elapsed) + " s";
  return ok;
}

bool golden_budgets(std::string& detail) {
  ValidatedEconomy validated = load("example1.json");
  EquilibriumResult result = solve_equilibrium(validated.economy);
  bool ok = result.budgets.size() == 5 &&
            result.budgets[0].endowment_value == R("1/8") &&
            result.budgets[0].allocation_value == R("1/8") &&
            result.budgets[1].endowment_value == R("3/10") &&
            result.budgets[1].allocation_value == R("3/10");
  detail = "consumer 1: " + result.budgets[0].endowment_value.str() + ", consumer 2: " +
           result.budgets[1].endowment_value.str();
  return ok;
}

bool golden_minimality(std::string& detail) {
  ValidatedEconomy base = load("example1.json");
  auto groups = group_preferences(base.economy.preferences());
  Minimality got = is_minimal(base.economy, groups, compute_min_terms(base.economy, groups));
  auto brute = support::oracle_minimal_witness(support::example5x4_rows(),
                                               support::example5x4_sigma());
  bool ok = got.minimal && got.witness == 0 && brute == 0;

  ValidatedEconomy variant = load("example1_nonminimal.json");
  auto vgroups = group_preferences(variant.economy.preferences());
  Minimality vgot =
      is_minimal(variant.economy, vgroups, compute_min_terms(variant.economy, vgroups));
  auto vbrute = support::oracle_minimal_witness(support::nonminimal5x4_rows(),
                                                support::example5x4_sigma());
  if (vgot.minimal || vbrute.has_value()) ok = false;
  detail = "witness consumer 1; variant non-minimal; brute-force scan agrees";
  return ok;
}

bool feasibility_and_range(std::string& detail) {
  const auto start = Clock::now();
  const int economies = 1000;
  Rng seeds(20250101);
  for (int iter = 0; iter < economies; ++iter) {
    GenSpec spec;
    spec.consumers = static_cast<int>(seeds.between(1, 8));
    spec.commodities = static_cast<int>(seeds.between(1, 8));
    spec.denominator_bound = static_cast<unsigned>(seeds.between(1, 60));
    spec.seed = seeds.between(0, 1u << 31);
    SimplexEconomy econ = generate_economy(spec);
    auto groups = group_preferences(econ.preferences());
    Allocation f_star = build_f_star(econ, groups, compute_min_terms(econ, groups));
    for (int j = 0; j < f_star.commodities(); ++j) {
      if (f_star.column_sum(j) != Rational(1)) {
        detail = "column sum failure at iteration " + std::to_string(iter);
        return false;
      }
    }
    for (int i = 0; i < f_star.consumers(); ++i) {
      for (int j = 0; j < f_star.commodities(); ++j) {
        if (f_star.at(i, j) < Rational(0) || f_star.at(i, j) > Rational(1)) {
          detail = "range failure at iteration " + std::to_string(iter);
          return false;
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  detail = std::to_string(economies) + " economies in " + std::to_string(elapsed) + " s";
  return elapsed < 30.0;
}

bool budget_balance(std::string& detail) {
  const int economies = 500;
  Rng seeds(20250202);
  for (int iter = 0; iter < economies; ++iter) {
    GenSpec spec;
    spec.consumers = static_cast<int>(seeds.between(1, 6));
    spec.commodities = static_cast<int>(seeds.between(1, 6));
    spec.denominator_bound = static_cast<unsigned>(seeds.between(2, 30));
    spec.seed = seeds.between(0, 1u << 31);
    spec.force_minimal = true;
    SimplexEconomy econ = generate_economy(spec);
    EquilibriumResult result = solve_equilibrium(econ);
    if (!result.price.price.has_value()) {
      detail = "no price at iteration " + std::to_string(iter);
      return false;
    }
    const PriceSystem& p = *result.price.price;
    Rational sum = 0;
    for (int j = 0; j < econ.commodities(); ++j) sum += p[j];
    if (sum != Rational(1)) {
      detail = "price sum failure at iteration " + std::to_string(iter);
      return false;
    }
    std::vector<bool> preferred(static_cast<std::size_t>(econ.commodities()), false);
    for (const auto& g : result.groups.groups) preferred[static_cast<std::size_t>(g.commodity)] = true;
    for (int j = 0; j < econ.commodities(); ++j) {
      if (!preferred[static_cast<std::size_t>(j)] && !p[j].is_zero()) {
        detail = "nonzero price off the preferred set at iteration " + std::to_string(iter);
        return false;
      }
    }
    for (std::size_t i = 0; i < result.budgets.size(); ++i) {
      if (result.budgets[i].endowment_value != result.budgets[i].allocation_value) {
        detail = "budget mismatch at iteration " + std::to_string(iter);
        return false;
      }
    }
  }
  detail = std::to_string(economies) + " forced-minimal economies balanced exactly";
  return true;
}

bool equilibrium_defense(std::string& detail) {
  const int economies = 200;
  const int trials = 50;
  Rng seeds(20250303);
  long total_samples = 0;
  long counterexamples = 0;
  for (int iter = 0; iter < economies; ++iter) {
    GenSpec spec;
    spec.consumers = static_cast<int>(seeds.between(2, 6));
    spec.commodities = static_cast<int>(seeds.between(2, 5));
    spec.denominator_bound = static_cast<unsigned>(seeds.between(2, 30));
    spec.seed = seeds.between(0, 1u << 31);
    spec.force_minimal = true;
    SimplexEconomy econ = generate_economy(spec);
    EquilibriumResult result = solve_equilibrium(econ);
    if (!result.price.price.has_value()) {
      detail = "no price at iteration " + std::to_string(iter);
      return false;
    }
    VerificationReport report = verify_equilibrium_sampled(result, econ, trials, spec.seed ^ 0x9e3779b9);
    total_samples += report.samples_checked;
    counterexamples += static_cast<long>(report.counterexamples.size());
  }
  detail = std::to_string(total_samples) + " dominating allocations sampled, " +
           std::to_string(counterexamples) + " counterexamples";
  return counterexamples == 0 && total_samples > 0;
}

// Enumerates every column vector of length m over {p/q in [0,1] : q <= 4}
// that sums to exactly 1.
std::vector<std::vector<Rational>> stochastic_columns(int m) {
  const std::vector<Rational> values = {R("0"),   R("1"),   R("1/2"), R("1/3"),
                                        R("2/3"), R("1/4"), R("3/4")};
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> current(static_cast<std::size_t>(m));
  std::function<void(int, Rational)> rec = [&](int i, Rational sum) {
    if (sum > Rational(1)) return;
    if (i == m) {
      if (sum == Rational(1)) out.push_back(current);
      return;
    }
    for (const auto& v : values) {
      current[static_cast<std::size_t>(i)] = v;
      rec(i + 1, sum + v);
    }
  };
  rec(0, Rational(0));
  return out;
}

// Checks one grid economy against both independent oracles. Returns false
// with detail on the first discrepancy.
bool check_grid_economy(const Rows& rows, const std::vector<int>& sigma, std::string& detail) {
  SimplexEconomy econ = support::make_economy(rows, sigma);
  auto groups = group_preferences(econ.preferences());
  auto mins = compute_min_terms(econ, groups);
  Allocation f_star = build_f_star(econ, groups, mins);
  if (!(f_star == Allocation{support::oracle_f_star(rows, sigma)})) {
    detail = "allocation oracle mismatch";
    return false;
  }

  SupportingPrice sp = supporting_price(econ.endowments(), f_star, groups);

  // Independent system assembly from the oracle allocation.
  const int m = econ.consumers();
  const int k = groups.count();
  Rows oracle_f = support::oracle_f_star(rows, sigma);
  Rows system(static_cast<std::size_t>(m) + 1,
              std::vector<Rational>(static_cast<std::size_t>(k)));
  std::vector<Rational> rhs(static_cast<std::size_t>(m) + 1, Rational(0));
  for (int t = 0; t < k; ++t) {
    const auto j = static_cast<std::size_t>(groups.groups[static_cast<std::size_t>(t)].commodity);
    for (int i = 0; i < m; ++i) {
      system[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] =
          oracle_f[static_cast<std::size_t>(i)][j] - rows[static_cast<std::size_t>(i)][j];
    }
    system[static_cast<std::size_t>(m)][static_cast<std::size_t>(t)] = 1;
  }
  rhs.back() = 1;

  // Cramer's rule over every k-row subsystem.
  std::vector<int> subset(static_cast<std::size_t>(k));
  bool any_nonsingular = false;
  std::function<bool(int, int)> scan = [&](int pos, int from) -> bool {
    if (pos == k) {
      Rows square;
      std::vector<Rational> sub_rhs;
      for (int idx : subset) {
        square.push_back(system[static_cast<std::size_t>(idx)]);
        sub_rhs.push_back(rhs[static_cast<std::size_t>(idx)]);
      }
      auto solved = support::oracle_cramer(square, sub_rhs);
      if (!solved) return true;
      any_nonsingular = true;
      const auto* unique = std::get_if<UniqueSolution>(&sp.outcome);
      if (unique == nullptr) {
        detail = "oracle found a nonsingular subsystem but the solver did not solve";
        return false;
      }
      for (int t = 0; t < k; ++t) {
        if ((*solved)[static_cast<std::size_t>(t)] != unique->x[static_cast<std::size_t>(t)]) {
          detail = "Cramer subsystem disagrees with the solved price";
          return false;
        }
      }
      return true;
    }
    for (int idx = from; idx <= m - (k - pos - 1); ++idx) {
      subset[static_cast<std::size_t>(pos)] = idx;
      if (!scan(pos + 1, idx + 1)) return false;
    }
    return true;
  };
  if (!scan(0, 0)) return false;

  if (std::holds_alternative<UniqueSolution>(sp.outcome) && !any_nonsingular) {
    detail = "solver solved but every square subsystem is singular";
    return false;
  }
  return true;
}

bool oracle_equivalence(std::string& detail) {
  const auto start = Clock::now();
  long cases = 0;
  for (int m = 1; m <= 3; ++m) {
    auto columns = stochastic_columns(m);
    for (int n = 1; n <= 3; ++n) {
      const auto column_count = columns.size();
      std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
      while (true) {
        Rows rows(static_cast<std::size_t>(m),
                  std::vector<Rational>(static_cast<std::size_t>(n)));
        for (int j = 0; j < n; ++j) {
          for (int i = 0; i < m; ++i) {
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                columns[pick[static_cast<std::size_t>(j)]][static_cast<std::size_t>(i)];
          }
        }
        std::vector<int> sigma(static_cast<std::size_t>(m), 1);
        while (true) {
          ++cases;
          if (!check_grid_economy(rows, sigma, detail)) {
            detail += " (m=" + std::to_string(m) + " n=" + std::to_string(n) + ")";
            return false;
          }
          int carry = 0;
          while (carry < m && ++sigma[static_cast<std::size_t>(carry)] > n) {
            sigma[static_cast<std::size_t>(carry)] = 1;
            ++carry;
          }
          if (carry == m) break;
        }
        std::size_t digit = 0;
        while (digit < static_cast<std::size_t>(n) && ++pick[digit] == column_count) {
          pick[digit] = 0;
          ++digit;
        }
        if (digit == static_cast<std::size_t>(n)) break;
      }
    }
  }
  detail = std::to_string(cases) + " grid economies checked in " +
           std::to_string(seconds_since(start)) + " s";
  return true;
}

bool complexity_smoke(std::string& detail) {
  auto construction_time = [](int size) {
    GenSpec spec;
    spec.consumers = size;
    spec.commodities = size;
    spec.seed = 424242;
    spec.denominator_bound = 10;
    SimplexEconomy econ = generate_economy(spec);
    double best = 1e100;
    for (int rep = 0; rep < 9; ++rep) {
      const auto start = Clock::now();
      auto groups = group_preferences(econ.preferences());
      auto mins = compute_min_terms(econ, groups);
      Allocation f_star = build_f_star(econ, groups, mins);
      if (f_star.consumers() != size) std::abort();  // keep the work alive
      best = std::min(best, seconds_since(start));
    }
    return best;
  };
  const double small = construction_time(100);
  const double large = construction_time(200);
  const double ratio = large / small;
  detail = "construction 100x100: " + std::to_string(small) + " s, 200x200: " +
           std::to_string(large) + " s, ratio " + std::to_string(ratio);
  return ratio <= 5.0;
}

bool exactness_via_cli(std::string& detail) {
  const std::string cli = cli_path();
  const std::string a =
      run_capture("'" + cli + "' solve '" + data_dir() + "/example1.json' --format machine");
  const std::string b = run_capture("'" + cli + "' solve '" + data_dir() +
                                    "/example1_fractions.json' --format machine");
  if (a.empty()) {
    detail = "no output from " + cli;
    return false;
  }
  detail = "two machine reports of " + std::to_string(a.size()) + " bytes";
  return a == b;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"golden-example", golden_example},
      {"golden-budgets", golden_budgets},
      {"golden-minimality", golden_minimality},
      {"feasibility-and-range", feasibility_and_range},
      {"budget-balance", budget_balance},
      {"equilibrium-defense", equilibrium_defense},
      {"oracle-equivalence", oracle_equivalence},
      {"complexity-smoke", complexity_smoke},
      {"exactness-via-cli", exactness_via_cli},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].name
              << (detail.empty() ? "" : " — " + detail) << "\n";
  }
  if (failures > 0) std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
