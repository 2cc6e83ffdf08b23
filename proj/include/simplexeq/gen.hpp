#pragma once

#include <cstdint>

#include "simplexeq/model.hpp"

namespace simplexeq {

/// Parameters for deterministic random economies. Entries are drawn as
/// integer/denominator_bound fractions per column and normalized to unit
/// column sums; the same spec and seed always produce the same economy.
struct GenSpec {
  int consumers = 1;
  int commodities = 1;
  std::uint64_t seed = 0;
  unsigned denominator_bound = 10;
  bool force_minimal = false;
};

/// Generates a valid economy; with force_minimal, post-edits one consumer
/// to attain the column minima at every other preferred commodity (moving
/// the removed mass to another non-preferring consumer) and re-checks
/// minimality. Throws Error(Errc::generation_failed) after the retry cap.
SimplexEconomy generate_economy(const GenSpec& spec);

}  // namespace simplexeq
