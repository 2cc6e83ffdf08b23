#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simplexeq/linalg.hpp"
#include "simplexeq/model.hpp"

namespace simplexeq {

/// Consumers sharing a preferred commodity, in first-appearance order of
/// the commodity; members ascending.
struct PreferenceGroup {
  int commodity;             // 0-based
  std::vector<int> members;  // 0-based consumers
};

struct PreferenceGroups {
  std::vector<PreferenceGroup> groups;
  std::vector<int> group_of;  // consumer -> index into groups
  int count() const { return static_cast<int>(groups.size()); }
};

PreferenceGroups group_preferences(const PreferenceVector& sigma);

/// Per preferred commodity j: the smallest endowment of j held by the
/// consumers who do not prefer j. When every consumer prefers j (single
/// group) the complement is empty; the value is the sentinel 1 and flagged
/// unused — the construction never reads it in that case.
struct MinTerms {
  std::vector<Rational> value;  // aligned with PreferenceGroups::groups
  std::vector<bool> used;
};

MinTerms compute_min_terms(const SimplexEconomy& econ, const PreferenceGroups& groups);

/// Whether some consumer attains the minimum at every preferred commodity
/// other than its own. The witness is the smallest such consumer.
struct Minimality {
  bool minimal = false;
  std::optional<int> witness;  // 0-based consumer
};

Minimality is_minimal(const SimplexEconomy& econ, const PreferenceGroups& groups,
                      const MinTerms& mins);

/// The constructed redistribution: preferred coordinate boosted by
/// (m - m_s) * Min / m_s, other preferred coordinates reduced by their Min
/// term, non-preferred coordinates set to 1/m. Feasible with entries in
/// [0,1]; both are re-checked after construction.
Allocation build_f_star(const SimplexEconomy& econ, const PreferenceGroups& groups,
                        const MinTerms& mins);

struct SupportingPrice {
  SolveOutcome outcome;
  /// Present only when the system has a unique solution that lies on the
  /// simplex after zero-padding the non-preferred commodities.
  std::optional<PriceSystem> price;
  /// Commodity (0-based) of the first negative solved component, when the
  /// solution leaves the simplex. Surfaced, never clamped.
  std::optional<int> negative_component;
  int system_rows = 0;
  int system_cols = 0;
};

/// Assembles the (m+1) x k system: rows (f*_i - w_i) restricted to the
/// preferred commodities plus an all-ones row, right-hand side
/// (0,...,0,1); solves it exactly and embeds the solution into a length-n
/// price with zeros off the preferred set.
SupportingPrice supporting_price(const StochasticAllocation& w, const Allocation& f_star,
                                 const PreferenceGroups& groups);

struct ConsumerBudget {
  Rational endowment_value;   // w_i . p*
  Rational allocation_value;  // f*_i . p*
};

struct EquilibriumResult {
  PreferenceGroups groups;
  MinTerms mins;
  Minimality minimality;
  Allocation f_star;
  SupportingPrice price;
  std::vector<ConsumerBudget> budgets;  // filled when a price exists
  /// Whether every consumer's bundle value strictly exceeds each of its
  /// single-commodity parts f*_i[j] * p*_j. Logged, not asserted.
  std::optional<bool> value_exceeds_components;
  std::vector<std::string> caveats;
};

/// Full pipeline: grouping, Min terms, minimality, F*, supporting price,
/// budgets. Non-minimal economies are solved anyway and labeled with a
/// caveat instead of being rejected.
EquilibriumResult solve_equilibrium(const SimplexEconomy& econ);

struct SampledCounterexample {
  int trial;
  Allocation g;
};

struct VerificationReport {
  int trials_requested = 0;
  int samples_checked = 0;
  int trials_exhausted = 0;  // retry cap hit while sampling
  /// Set when some preferred column leaves no mass with non-preferring
  /// consumers: no dominating feasible allocation can be sampled at all.
  std::optional<int> saturated_commodity;  // 0-based
  /// Deterministic checks, evaluated when the economy is minimal and a
  /// price exists: the witness row vanishes at the other preferred
  /// commodities, and its bundle value reduces to the single preferred
  /// term.
  std::optional<bool> witness_row_vanishes;
  std::optional<bool> witness_value_single_term;
  std::vector<SampledCounterexample> counterexamples;
};

/// Samples feasible allocations G strictly preferred to F* (raise each
/// consumer's preferred coordinate, take the mass proportionally from
/// non-preferring consumers in the same column) and records any sample
/// that leaves every consumer within budget. Counterexamples are report
/// content, not errors.
VerificationReport verify_equilibrium_sampled(const EquilibriumResult& result,
                                              const SimplexEconomy& econ, int trials,
                                              std::uint64_t seed);

}  // namespace simplexeq
