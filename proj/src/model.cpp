#include "simplexeq/model.hpp"

#include <string>
#include <utility>

namespace simplexeq {

namespace {

const Rational kZero = 0;
const Rational kOne = 1;

std::string entry_name(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

PriceSystem::PriceSystem(std::vector<Rational> coords) : p_(std::move(coords)) {
  if (p_.empty()) {
    throw Error(Errc::shape_mismatch, "price system needs at least one commodity");
  }
  Rational sum = 0;
  for (std::size_t j = 0; j < p_.size(); ++j) {
    if (p_[j] < kZero || p_[j] > kOne) {
      throw Error(Errc::price_not_on_simplex,
                  "price component " + std::to_string(j + 1) + " = " +
                      p_[j].str() + " is outside [0,1]");
    }
    sum += p_[j];
  }
  if (sum != kOne) {
    throw Error(Errc::price_not_on_simplex,
                "price components sum to " + sum.str() + ", expected 1");
  }
}

PriceSystem PriceSystem::unit(int commodity, int commodities) {
  std::vector<Rational> p(static_cast<std::size_t>(commodities), Rational(0));
  p.at(static_cast<std::size_t>(commodity)) = 1;
  return PriceSystem(std::move(p));
}

PreferenceVector::PreferenceVector(const std::vector<int>& one_based, int commodities)
    : n_(commodities) {
  if (one_based.empty()) {
    throw Error(Errc::shape_mismatch, "preference vector needs at least one consumer");
  }
  if (n_ < 1) {
    throw Error(Errc::shape_mismatch, "preference vector needs at least one commodity");
  }
  sigma_.reserve(one_based.size());
  for (std::size_t i = 0; i < one_based.size(); ++i) {
    int s = one_based[i];
    if (s < 1 || s > n_) {
      throw Error(Errc::sigma_out_of_range,
                  "sigma(" + std::to_string(i + 1) + ") = " + std::to_string(s) +
                      " is not a commodity index in 1.." + std::to_string(n_));
    }
    sigma_.push_back(s - 1);
  }
}

int PreferenceVector::preferred(int consumer) const {
  if (consumer < 0 || consumer >= consumers()) {
    throw Error(Errc::index_out_of_range,
                "consumer index " + std::to_string(consumer + 1) + " out of range");
  }
  return sigma_[static_cast<std::size_t>(consumer)];
}

std::vector<int> PreferenceVector::one_based() const {
  std::vector<int> out;
  out.reserve(sigma_.size());
  for (int s : sigma_) out.push_back(s + 1);
  return out;
}

Allocation::Allocation(std::vector<std::vector<Rational>> rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(Errc::shape_mismatch, "allocation needs at least one consumer and one commodity");
  }
  m_ = static_cast<int>(rows.size());
  n_ = static_cast<int>(rows.front().size());
  cells_.reserve(static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_));
  for (int i = 0; i < m_; ++i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != n_) {
      throw Error(Errc::shape_mismatch,
                  "row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                      " entries, expected " + std::to_string(n_));
    }
    for (int j = 0; j < n_; ++j) {
      Rational& v = row[static_cast<std::size_t>(j)];
      if (v < kZero || v > kOne) {
        throw Error(Errc::entry_out_of_range,
                    "entry " + entry_name(i, j) + " = " + v.str() + " is outside [0,1]");
      }
      cells_.push_back(std::move(v));
    }
  }
}

Bundle Allocation::bundle(int i) const {
  auto r = row(i);
  return Bundle(r.begin(), r.end());
}

Rational Allocation::column_sum(int j) const {
  Rational sum = 0;
  for (int i = 0; i < m_; ++i) sum += at(i, j);
  return sum;
}

StochasticAllocation::StochasticAllocation(Allocation a) : a_(std::move(a)) {
  for (int j = 0; j < a_.commodities(); ++j) {
    Rational sum = a_.column_sum(j);
    if (sum != kOne) {
      throw Error(Errc::column_not_stochastic,
                  "column " + std::to_string(j + 1) + " sums to " + sum.str() +
                      ", expected 1");
    }
  }
}

Bundle StochasticAllocation::total_endowment() const {
  Bundle total(static_cast<std::size_t>(commodities()), Rational(0));
  for (int i = 0; i < consumers(); ++i) {
    auto r = row(i);
    for (int j = 0; j < commodities(); ++j) total[static_cast<std::size_t>(j)] += r[static_cast<std::size_t>(j)];
  }
  return total;
}

SimplexEconomy::SimplexEconomy(StochasticAllocation w, PreferenceVector sigma)
    : w_(std::move(w)), sigma_(std::move(sigma)) {
  if (sigma_.consumers() != w_.consumers()) {
    throw Error(Errc::shape_mismatch,
                "preference vector covers " + std::to_string(sigma_.consumers()) +
                    " consumers, endowments have " + std::to_string(w_.consumers()));
  }
  if (sigma_.commodities() != w_.commodities()) {
    throw Error(Errc::shape_mismatch,
                "preference vector was validated against " +
                    std::to_string(sigma_.commodities()) + " commodities, endowments have " +
                    std::to_string(w_.commodities()));
  }
}

ValidatedEconomy validate_economy(const std::vector<std::vector<Rational>>& w_rows,
                                  const std::vector<int>& sigma_one_based,
                                  StochasticPolicy policy) {
  if (w_rows.empty() || w_rows.front().empty()) {
    throw Error(Errc::shape_mismatch, "endowment matrix needs at least one consumer and one commodity");
  }
  const int m = static_cast<int>(w_rows.size());
  const int n = static_cast<int>(w_rows.front().size());
  for (int i = 0; i < m; ++i) {
    const auto& row = w_rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != n) {
      throw Error(Errc::shape_mismatch,
                  "row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                      " entries, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      const Rational& v = row[static_cast<std::size_t>(j)];
      if (v < kZero || v > kOne) {
        throw Error(Errc::entry_out_of_range,
                    "entry " + entry_name(i, j) + " = " + v.str() + " is outside [0,1]");
      }
    }
  }
  if (static_cast<int>(sigma_one_based.size()) != m) {
    throw Error(Errc::shape_mismatch,
                "sigma has " + std::to_string(sigma_one_based.size()) +
                    " entries, expected one per consumer (" + std::to_string(m) + ")");
  }
  PreferenceVector sigma(sigma_one_based, n);

  ValidationReport report;
  report.policy = policy;
  report.column_sums.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Rational sum = 0;
    for (int i = 0; i < m; ++i) sum += w_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    report.column_sums.push_back(std::move(sum));
  }

  std::vector<std::vector<Rational>> rows = w_rows;
  if (policy == StochasticPolicy::normalize) {
    for (int j = 0; j < n; ++j) {
      const Rational& sum = report.column_sums[static_cast<std::size_t>(j)];
      if (sum.is_zero()) {
        throw Error(Errc::zero_column,
                    "column " + std::to_string(j + 1) + " sums to 0 and cannot be rescaled");
      }
      if (sum == kOne) continue;
      for (int i = 0; i < m; ++i) {
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] /= sum;
      }
      report.adjustments.push_back({j, sum});
    }
  }

  StochasticAllocation w{Allocation(std::move(rows))};
  return ValidatedEconomy{SimplexEconomy(std::move(w), std::move(sigma)), std::move(report)};
}

Rational value(std::span<const Rational> bundle, const PriceSystem& price) {
  if (static_cast<int>(bundle.size()) != price.commodities()) {
    throw Error(Errc::shape_mismatch,
                "bundle has " + std::to_string(bundle.size()) + " coordinates, price has " +
                    std::to_string(price.commodities()));
  }
  Rational sum = 0;
  for (std::size_t j = 0; j < bundle.size(); ++j) {
    if (!price[static_cast<int>(j)].is_zero()) sum += bundle[j] * price[static_cast<int>(j)];
  }
  return sum;
}

Rational utility(int consumer, std::span<const Rational> bundle,
                 const PreferenceVector& sigma) {
  int j = sigma.preferred(consumer);
  if (j >= static_cast<int>(bundle.size())) {
    throw Error(Errc::index_out_of_range,
                "bundle has no coordinate for commodity " + std::to_string(j + 1));
  }
  return bundle[static_cast<std::size_t>(j)];
}

bool strictly_prefers(const Allocation& f, const Allocation& g,
                      const PreferenceVector& sigma) {
  if (f.consumers() != g.consumers() || f.commodities() != g.commodities()) {
    throw Error(Errc::shape_mismatch, "allocations have different shapes");
  }
  if (sigma.consumers() != f.consumers() || sigma.commodities() != f.commodities()) {
    throw Error(Errc::shape_mismatch, "preference vector does not match allocation shape");
  }
  for (int i = 0; i < f.consumers(); ++i) {
    int j = sigma.preferred(i);
    if (!(f.at(i, j) < g.at(i, j))) return false;
  }
  return true;
}

bool is_feasible(const Allocation& f) {
  for (int j = 0; j < f.commodities(); ++j) {
    if (f.column_sum(j) != kOne) return false;
  }
  return true;
}

}  // namespace simplexeq
