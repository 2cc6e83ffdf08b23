#include "simplexeq/gen.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simplexeq/equilibrium.hpp"
#include "simplexeq/rng.hpp"

namespace simplexeq {

namespace {

constexpr int kAttemptCap = 100;

// Edits the raw grid so that consumer `chosen` attains the column minimum
// at every preferred commodity other than its own, keeping column sums by
// handing the removed mass to another non-preferring consumer. Returns
// false when no recipient can absorb the mass within [0,1].
bool plant_witness(std::vector<std::vector<Rational>>& w, const PreferenceGroups& groups,
                   const MinTerms& mins, int chosen, Rng& rng) {
  const int m = static_cast<int>(w.size());
  const int s = groups.group_of[static_cast<std::size_t>(chosen)];
  for (int t = 0; t < groups.count(); ++t) {
    if (t == s) continue;
    const int j = groups.groups[static_cast<std::size_t>(t)].commodity;
    Rational delta =
        w[static_cast<std::size_t>(chosen)][static_cast<std::size_t>(j)] -
        mins.value[static_cast<std::size_t>(t)];
    if (delta.is_zero()) continue;

    const int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    int recipient = -1;
    for (int off = 0; off < m; ++off) {
      const int r = (start + off) % m;
      if (r == chosen || groups.group_of[static_cast<std::size_t>(r)] == t) continue;
      if (w[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] + delta <= Rational(1)) {
        recipient = r;
        break;
      }
    }
    if (recipient < 0) return false;
    w[static_cast<std::size_t>(chosen)][static_cast<std::size_t>(j)] =
        mins.value[static_cast<std::size_t>(t)];
    w[static_cast<std::size_t>(recipient)][static_cast<std::size_t>(j)] += delta;
  }
  return true;
}

}  // namespace

SimplexEconomy generate_economy(const GenSpec& spec) {
  if (spec.consumers < 1 || spec.commodities < 1 || spec.denominator_bound < 1) {
    throw std::invalid_argument("generate_economy: consumers, commodities and "
                                "denominator bound must all be at least 1");
  }
  const int m = spec.consumers;
  const int n = spec.commodities;
  const auto bound = static_cast<std::uint64_t>(spec.denominator_bound);
  // Strictly positive draws under force_minimal keep every column minimum
  // positive, which keeps the supporting-price system determined.
  const std::uint64_t lo = spec.force_minimal ? 1 : 0;

  Rng rng(spec.seed);
  for (int attempt = 0; attempt < kAttemptCap; ++attempt) {
    std::vector<std::vector<Rational>> w(
        static_cast<std::size_t>(m),
        std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int j = 0; j < n; ++j) {
      std::vector<long long> draws(static_cast<std::size_t>(m));
      long long sum = 0;
      do {
        sum = 0;
        for (int i = 0; i < m; ++i) {
          draws[static_cast<std::size_t>(i)] =
              static_cast<long long>(rng.between(lo, bound));
          sum += draws[static_cast<std::size_t>(i)];
        }
      } while (sum == 0);
      for (int i = 0; i < m; ++i) {
        w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            Rational(draws[static_cast<std::size_t>(i)], sum);
      }
    }
    std::vector<int> sigma(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      sigma[static_cast<std::size_t>(i)] =
          static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
    }

    if (spec.force_minimal) {
      PreferenceVector prefs(sigma, n);
      PreferenceGroups groups = group_preferences(prefs);
      {
        SimplexEconomy probe = validate_economy(w, sigma).economy;
        MinTerms mins = compute_min_terms(probe, groups);
        if (!is_minimal(probe, groups, mins).minimal) {
          const int chosen = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
          if (!plant_witness(w, groups, mins, chosen, rng)) continue;
        }
      }
      SimplexEconomy econ = validate_economy(w, sigma).economy;
      MinTerms mins = compute_min_terms(econ, groups);
      if (!is_minimal(econ, groups, mins).minimal) continue;  // re-verified, not assumed
      return econ;
    }
    return validate_economy(w, sigma).economy;
  }
  throw Error(Errc::generation_failed,
              "could not generate a valid economy after " + std::to_string(kAttemptCap) +
                  " attempts (seed " + std::to_string(spec.seed) + ")");
}

}  // namespace simplexeq
