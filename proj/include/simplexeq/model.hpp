#pragma once

#include <span>
#include <string>
#include <vector>

#include "simplexeq/errors.hpp"
#include "simplexeq/rational.hpp"

namespace simplexeq {

/// A commodity bundle: one coordinate per commodity, each in [0,1].
using Bundle = std::vector<Rational>;

/// Point on the price simplex: nonnegative coordinates summing to 1.
class PriceSystem {
 public:
  explicit PriceSystem(std::vector<Rational> coords);

  /// Unit coordinate price: everything on commodity j (0-based).
  static PriceSystem unit(int commodity, int commodities);

  int commodities() const { return static_cast<int>(p_.size()); }
  const Rational& operator[](int j) const { return p_[static_cast<std::size_t>(j)]; }
  std::span<const Rational> coords() const { return p_; }

  friend bool operator==(const PriceSystem&, const PriceSystem&) = default;

 private:
  std::vector<Rational> p_;
};

/// Each consumer's single preferred commodity. Indices are 1-based in files
/// and reports, 0-based everywhere inside the library.
class PreferenceVector {
 public:
  PreferenceVector(const std::vector<int>& one_based, int commodities);

  int consumers() const { return static_cast<int>(sigma_.size()); }
  int commodities() const { return n_; }
  /// 0-based preferred commodity of a 0-based consumer.
  int preferred(int consumer) const;
  std::vector<int> one_based() const;

  friend bool operator==(const PreferenceVector&, const PreferenceVector&) = default;

 private:
  std::vector<int> sigma_;  // 0-based
  int n_;
};

/// m x n matrix of rationals in [0,1]; row i is consumer i's bundle.
/// Immutable after construction.
class Allocation {
 public:
  explicit Allocation(std::vector<std::vector<Rational>> rows);

  int consumers() const { return m_; }
  int commodities() const { return n_; }
  const Rational& at(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
  }
  std::span<const Rational> row(int i) const {
    return {cells_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_)};
  }
  Bundle bundle(int i) const;
  Rational column_sum(int j) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  int m_, n_;
  std::vector<Rational> cells_;  // row-major
};

/// Allocation whose columns each sum exactly to 1. Rows are the initial
/// endowments; the total endowment is the all-ones bundle.
class StochasticAllocation {
 public:
  explicit StochasticAllocation(Allocation a);

  const Allocation& allocation() const { return a_; }
  int consumers() const { return a_.consumers(); }
  int commodities() const { return a_.commodities(); }
  const Rational& at(int i, int j) const { return a_.at(i, j); }
  std::span<const Rational> row(int i) const { return a_.row(i); }
  /// Componentwise sum of all rows (all ones by the column invariant).
  Bundle total_endowment() const;

  friend bool operator==(const StochasticAllocation&, const StochasticAllocation&) = default;

 private:
  Allocation a_;
};

/// The economy: endowments W plus one preferred commodity per consumer.
class SimplexEconomy {
 public:
  SimplexEconomy(StochasticAllocation w, PreferenceVector sigma);

  const StochasticAllocation& endowments() const { return w_; }
  const PreferenceVector& preferences() const { return sigma_; }
  int consumers() const { return w_.consumers(); }
  int commodities() const { return w_.commodities(); }

  friend bool operator==(const SimplexEconomy&, const SimplexEconomy&) = default;

 private:
  StochasticAllocation w_;
  PreferenceVector sigma_;
};

enum class StochasticPolicy { exact, normalize };

/// A column rescaled under the normalize policy, with its original sum.
struct ColumnAdjustment {
  int column;  // 0-based
  Rational original_sum;
};

struct ValidationReport {
  StochasticPolicy policy = StochasticPolicy::exact;
  std::vector<Rational> column_sums;  // sums of the matrix as given
  std::vector<ColumnAdjustment> adjustments;
};

struct ValidatedEconomy {
  SimplexEconomy economy;
  ValidationReport report;
};

/// Checks entries and preferences and builds the economy. Under
/// StochasticPolicy::exact every column must sum to exactly 1; under
/// normalize each column is divided by its sum (ZeroColumn if that sum is
/// 0) and the rescale is recorded. Entries outside [0,1] and preference
/// indices outside {1,...,n} are rejected under both policies.
ValidatedEconomy validate_economy(const std::vector<std::vector<Rational>>& w_rows,
                                  const std::vector<int>& sigma_one_based,
                                  StochasticPolicy policy = StochasticPolicy::exact);

/// Value of a bundle under a price system: the exact dot product.
Rational value(std::span<const Rational> bundle, const PriceSystem& price);

/// Consumer i's utility from a bundle: its coordinate at i's preferred
/// commodity.
Rational utility(int consumer, std::span<const Rational> bundle,
                 const PreferenceVector& sigma);

/// True iff every consumer's preferred coordinate strictly increases from
/// f to g.
bool strictly_prefers(const Allocation& f, const Allocation& g,
                      const PreferenceVector& sigma);

/// True iff every column of f sums exactly to 1 (the allocation clears the
/// market against the total endowment).
bool is_feasible(const Allocation& f);

}  // namespace simplexeq
