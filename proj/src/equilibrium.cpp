#include "simplexeq/equilibrium.hpp"

#include <stdexcept>
#include <utility>

#include "simplexeq/rng.hpp"

namespace simplexeq {

namespace {

constexpr int kSampleRetryCap = 100;

std::string commodity_name(int j) { return std::to_string(j + 1); }

}  // namespace

PreferenceGroups group_preferences(const PreferenceVector& sigma) {
  PreferenceGroups out;
  out.group_of.assign(static_cast<std::size_t>(sigma.consumers()), -1);
  std::vector<int> index_of_commodity(static_cast<std::size_t>(sigma.commodities()), -1);
  for (int i = 0; i < sigma.consumers(); ++i) {
    int j = sigma.preferred(i);
    int g = index_of_commodity[static_cast<std::size_t>(j)];
    if (g < 0) {
      g = out.count();
      index_of_commodity[static_cast<std::size_t>(j)] = g;
      out.groups.push_back({j, {}});
    }
    out.groups[static_cast<std::size_t>(g)].members.push_back(i);
    out.group_of[static_cast<std::size_t>(i)] = g;
  }
  return out;
}

MinTerms compute_min_terms(const SimplexEconomy& econ, const PreferenceGroups& groups) {
  const auto& w = econ.endowments();
  MinTerms mins;
  mins.value.reserve(static_cast<std::size_t>(groups.count()));
  mins.used.reserve(static_cast<std::size_t>(groups.count()));
  for (int s = 0; s < groups.count(); ++s) {
    const int j = groups.groups[static_cast<std::size_t>(s)].commodity;
    bool found = false;
    Rational best = 1;
    for (int i = 0; i < econ.consumers(); ++i) {
      if (groups.group_of[static_cast<std::size_t>(i)] == s) continue;
      const Rational& v = w.at(i, j);
      if (!found || v < best) {
        best = v;
        found = true;
      }
    }
    // Empty complement (single group): sentinel 1, never consumed because
    // the additive coefficient (m - m_s)/m_s is zero.
    mins.value.push_back(found ? std::move(best) : Rational(1));
    mins.used.push_back(found);
  }
  return mins;
}

Minimality is_minimal(const SimplexEconomy& econ, const PreferenceGroups& groups,
                      const MinTerms& mins) {
  const auto& w = econ.endowments();
  for (int i = 0; i < econ.consumers(); ++i) {
    const int s = groups.group_of[static_cast<std::size_t>(i)];
    bool attains_all = true;
    for (int t = 0; t < groups.count(); ++t) {
      if (t == s) continue;
      const int j = groups.groups[static_cast<std::size_t>(t)].commodity;
      if (w.at(i, j) != mins.value[static_cast<std::size_t>(t)]) {
        attains_all = false;
        break;
      }
    }
    if (attains_all) return {true, i};
  }
  return {false, std::nullopt};
}

Allocation build_f_star(const SimplexEconomy& econ, const PreferenceGroups& groups,
                        const MinTerms& mins) {
  const auto& w = econ.endowments();
  const int m = econ.consumers();
  const int n = econ.commodities();
  const Rational equal_share(1, m);

  std::vector<std::vector<Rational>> rows(
      static_cast<std::size_t>(m),
      std::vector<Rational>(static_cast<std::size_t>(n), equal_share));
  for (int i = 0; i < m; ++i) {
    const int s = groups.group_of[static_cast<std::size_t>(i)];
    auto& row = rows[static_cast<std::size_t>(i)];
    for (int t = 0; t < groups.count(); ++t) {
      const auto& group = groups.groups[static_cast<std::size_t>(t)];
      const int j = group.commodity;
      const int group_size = static_cast<int>(group.members.size());
      if (t == s) {
        Rational boost = Rational(m - group_size, group_size) *
                         mins.value[static_cast<std::size_t>(t)];
        row[static_cast<std::size_t>(j)] = w.at(i, j) + boost;
      } else {
        row[static_cast<std::size_t>(j)] = w.at(i, j) - mins.value[static_cast<std::size_t>(t)];
      }
    }
  }

  Allocation f_star{std::move(rows)};  // range check happens here
  if (!is_feasible(f_star)) {
    throw std::logic_error("build_f_star: constructed allocation is not feasible");
  }
  return f_star;
}

SupportingPrice supporting_price(const StochasticAllocation& w, const Allocation& f_star,
                                 const PreferenceGroups& groups) {
  const int m = w.consumers();
  const int k = groups.count();

  RationalMatrix a(m + 1, k);
  std::vector<Rational> b(static_cast<std::size_t>(m) + 1, Rational(0));
  for (int i = 0; i < m; ++i) {
    for (int t = 0; t < k; ++t) {
      const int j = groups.groups[static_cast<std::size_t>(t)].commodity;
      a.at(i, t) = f_star.at(i, j) - w.at(i, j);
    }
  }
  for (int t = 0; t < k; ++t) a.at(m, t) = 1;
  b.back() = 1;

  SupportingPrice out;
  out.system_rows = m + 1;
  out.system_cols = k;
  out.outcome = solve_exact(a, b);

  const auto* unique = std::get_if<UniqueSolution>(&out.outcome);
  if (unique == nullptr) return out;

  for (int t = 0; t < k; ++t) {
    if (unique->x[static_cast<std::size_t>(t)].sign() < 0) {
      out.negative_component = groups.groups[static_cast<std::size_t>(t)].commodity;
      return out;
    }
  }

  std::vector<Rational> p(static_cast<std::size_t>(w.commodities()), Rational(0));
  for (int t = 0; t < k; ++t) {
    p[static_cast<std::size_t>(groups.groups[static_cast<std::size_t>(t)].commodity)] =
        unique->x[static_cast<std::size_t>(t)];
  }
  PriceSystem price{std::move(p)};
  for (int i = 0; i < m; ++i) {
    if (value(f_star.row(i), price) != value(w.row(i), price)) {
      throw std::logic_error("supporting_price: budget balance failed the exact re-check");
    }
  }
  out.price = std::move(price);
  return out;
}

EquilibriumResult solve_equilibrium(const SimplexEconomy& econ) {
  PreferenceGroups groups = group_preferences(econ.preferences());
  MinTerms mins = compute_min_terms(econ, groups);
  Minimality minimality = is_minimal(econ, groups, mins);
  Allocation f_star = build_f_star(econ, groups, mins);
  SupportingPrice price = supporting_price(econ.endowments(), f_star, groups);

  EquilibriumResult result{std::move(groups), std::move(mins), minimality,
                           std::move(f_star), std::move(price),
                           {},  // budgets
                           std::nullopt,
                           {}};

  if (result.price.price.has_value()) {
    const PriceSystem& p = *result.price.price;
    result.budgets.reserve(static_cast<std::size_t>(econ.consumers()));
    bool strict_everywhere = true;
    for (int i = 0; i < econ.consumers(); ++i) {
      Rational spent = value(result.f_star.row(i), p);
      for (int j = 0; strict_everywhere && j < econ.commodities(); ++j) {
        if (!(spent > result.f_star.at(i, j) * p[j])) strict_everywhere = false;
      }
      result.budgets.push_back({value(econ.endowments().row(i), p), std::move(spent)});
    }
    result.value_exceeds_components = strict_everywhere;
  } else if (result.price.negative_component.has_value()) {
    result.caveats.push_back("supporting price has a negative component at commodity " +
                             commodity_name(*result.price.negative_component) +
                             "; price left the simplex");
  } else if (const auto* under = std::get_if<Underdetermined>(&result.price.outcome)) {
    result.caveats.push_back("supporting price system is underdetermined (rank " +
                             std::to_string(under->rank) + "); no unique price");
  } else if (std::holds_alternative<Inconsistent>(result.price.outcome)) {
    result.caveats.push_back("supporting price system is inconsistent; no price exists");
  }

  if (!result.minimality.minimal) {
    result.caveats.push_back(
        "economy is not minimal: the computed allocation and price are reported, "
        "but the equilibrium property is not guaranteed");
  }
  return result;
}

VerificationReport verify_equilibrium_sampled(const EquilibriumResult& result,
                                              const SimplexEconomy& econ, int trials,
                                              std::uint64_t seed) {
  VerificationReport report;
  report.trials_requested = trials;
  if (!result.price.price.has_value()) return report;
  const PriceSystem& p = *result.price.price;
  const auto& groups = result.groups;
  const Allocation& f_star = result.f_star;
  const int m = econ.consumers();

  if (result.minimality.minimal) {
    const int witness = *result.minimality.witness;
    const int s = groups.group_of[static_cast<std::size_t>(witness)];
    bool vanishes = true;
    for (int t = 0; t < groups.count(); ++t) {
      if (t == s) continue;
      if (!f_star.at(witness, groups.groups[static_cast<std::size_t>(t)].commodity).is_zero()) {
        vanishes = false;
      }
    }
    report.witness_row_vanishes = vanishes;
    const int js = groups.groups[static_cast<std::size_t>(s)].commodity;
    report.witness_value_single_term =
        value(f_star.row(witness), p) == f_star.at(witness, js) * p[js];
  }

  if (trials <= 0) return report;

  // Mass available to move toward each group: what non-preferring
  // consumers hold in the group's column. A zero here means no feasible
  // allocation strictly preferred to F* exists, so there is nothing to
  // sample.
  std::vector<Rational> slack(static_cast<std::size_t>(groups.count()), Rational(0));
  for (int t = 0; t < groups.count(); ++t) {
    const int j = groups.groups[static_cast<std::size_t>(t)].commodity;
    for (int i = 0; i < m; ++i) {
      if (groups.group_of[static_cast<std::size_t>(i)] != t) slack[static_cast<std::size_t>(t)] += f_star.at(i, j);
    }
    if (slack[static_cast<std::size_t>(t)].is_zero()) {
      report.saturated_commodity = j;
      return report;
    }
  }

  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    bool built = false;
    for (int attempt = 0; attempt < kSampleRetryCap && !built; ++attempt) {
      std::vector<std::vector<Rational>> g(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) g[static_cast<std::size_t>(i)] = f_star.bundle(i);

      bool in_range = true;
      for (int t = 0; t < groups.count() && in_range; ++t) {
        const auto& group = groups.groups[static_cast<std::size_t>(t)];
        const int j = group.commodity;
        const int group_size = static_cast<int>(group.members.size());
        // Raise every member by a random share of the column slack, at
        // most half of it in total, then shrink the non-preferring
        // entries proportionally so the column still sums to 1.
        Rational taken = 0;
        for (int member : group.members) {
          auto draw = static_cast<long long>(rng.between(1, 16));
          Rational delta = slack[static_cast<std::size_t>(t)] * Rational(draw, 32LL * group_size);
          auto& cell = g[static_cast<std::size_t>(member)][static_cast<std::size_t>(j)];
          cell += delta;
          taken += delta;
          if (cell > Rational(1)) {
            in_range = false;
            break;
          }
        }
        if (!in_range) break;
        Rational keep = (slack[static_cast<std::size_t>(t)] - taken) / slack[static_cast<std::size_t>(t)];
        for (int i = 0; i < m; ++i) {
          if (groups.group_of[static_cast<std::size_t>(i)] != t) {
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *= keep;
          }
        }
      }
      if (!in_range) continue;

      Allocation candidate{std::move(g)};
      if (!is_feasible(candidate) || !strictly_prefers(f_star, candidate, econ.preferences())) {
        throw std::logic_error("verify_equilibrium_sampled: sampler produced a bad candidate");
      }
      bool someone_over_budget = false;
      for (int i = 0; i < m && !someone_over_budget; ++i) {
        if (value(candidate.row(i), p) > value(econ.endowments().row(i), p)) {
          someone_over_budget = true;
        }
      }
      ++report.samples_checked;
      if (!someone_over_budget) {
        report.counterexamples.push_back({trial, std::move(candidate)});
      }
      built = true;
    }
    if (!built) ++report.trials_exhausted;
  }
  return report;
}

}  // namespace simplexeq
