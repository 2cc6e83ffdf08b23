#pragma once

// Shared fixtures and test-only oracles. The oracles are deliberate
// re-transcriptions (inline minima, no grouping structures) so they stay
// independent of the implementation paths they check.

#include <optional>
#include <vector>

#include "simplexeq/model.hpp"
#include "simplexeq/rng.hpp"

namespace support {

using simplexeq::Rational;
using Rows = std::vector<std::vector<Rational>>;

inline Rational R(std::string_view text) { return Rational::parse(text); }

inline Rows parse_rows(const std::vector<std::vector<const char*>>& grid) {
  Rows rows;
  for (const auto& r : grid) {
    std::vector<Rational> row;
    for (const char* cell : r) row.push_back(R(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

// The 5-consumer, 4-commodity worked example used across the suites.
inline Rows example5x4_rows() {
  return parse_rows({{"0.2", "0.4", "0.1", "0.1"},
                     {"0.2", "0.3", "0.2", "0.4"},
                     {"0.2", "0.2", "0.2", "0.3"},
                     {"0.2", "0.1", "0.3", "0.1"},
                     {"0.2", "0", "0.2", "0.1"}});
}

inline std::vector<int> example5x4_sigma() { return {1, 1, 3, 4, 4}; }

inline Rows example5x4_f_star() {
  return parse_rows({{"1/2", "1/5", "0", "0"},
                     {"1/2", "1/5", "1/10", "3/10"},
                     {"0", "1/5", "3/5", "1/5"},
                     {"0", "1/5", "1/5", "1/4"},
                     {"0", "1/5", "1/10", "1/4"}});
}

// Variant of the worked example that is genuinely not minimal: consumer 2
// now holds the unique column-3 minimum but misses the column-4 one, and
// nobody else attains both minima either.
inline Rows nonminimal5x4_rows() {
  return parse_rows({{"0.2", "0.4", "0.15", "0.1"},
                     {"0.2", "0.3", "0.1", "0.4"},
                     {"0.2", "0.2", "0.2", "0.3"},
                     {"0.2", "0.1", "0.35", "0.1"},
                     {"0.2", "0", "0.2", "0.1"}});
}

inline Rows economy2x2_rows() { return parse_rows({{"1/2", "1/4"}, {"1/2", "3/4"}}); }

inline simplexeq::SimplexEconomy make_economy(const Rows& rows, const std::vector<int>& sigma) {
  return simplexeq::validate_economy(rows, sigma).economy;
}

// --- independent oracles -------------------------------------------------

inline bool oracle_prefers(const std::vector<int>& sigma_one_based, int i, int j) {
  return sigma_one_based[static_cast<std::size_t>(i)] == j + 1;
}

inline int oracle_preferrer_count(const std::vector<int>& sigma_one_based, int j) {
  int count = 0;
  for (std::size_t i = 0; i < sigma_one_based.size(); ++i) {
    if (oracle_prefers(sigma_one_based, static_cast<int>(i), j)) ++count;
  }
  return count;
}

inline Rational oracle_min_nonpreferrers(const Rows& w, const std::vector<int>& sigma_one_based,
                                         int j) {
  bool found = false;
  Rational best = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (oracle_prefers(sigma_one_based, static_cast<int>(i), j)) continue;
    if (!found || w[i][static_cast<std::size_t>(j)] < best) {
      best = w[i][static_cast<std::size_t>(j)];
      found = true;
    }
  }
  return best;
}

// Literal three-case construction with minima recomputed inline.
inline Rows oracle_f_star(const Rows& w, const std::vector<int>& sigma_one_based) {
  const int m = static_cast<int>(w.size());
  const int n = static_cast<int>(w.front().size());
  Rows out(static_cast<std::size_t>(m),
           std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, m)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const int preferrers = oracle_preferrer_count(sigma_one_based, j);
      if (preferrers == 0) continue;  // nobody prefers j: equal share stays
      if (oracle_prefers(sigma_one_based, i, j)) {
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
            Rational(m - preferrers, preferrers) *
                oracle_min_nonpreferrers(w, sigma_one_based, j);
      } else {
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
            oracle_min_nonpreferrers(w, sigma_one_based, j);
      }
    }
  }
  return out;
}

// Brute-force witness scan: consumer i qualifies iff it attains the
// non-preferrer minimum at every commodity someone else prefers.
inline std::optional<int> oracle_minimal_witness(const Rows& w,
                                                 const std::vector<int>& sigma_one_based) {
  const int m = static_cast<int>(w.size());
  const int n = static_cast<int>(w.front().size());
  for (int i = 0; i < m; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      if (oracle_prefers(sigma_one_based, i, j)) continue;
      if (oracle_preferrer_count(sigma_one_based, j) == 0) continue;
      if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          oracle_min_nonpreferrers(w, sigma_one_based, j)) {
        ok = false;
      }
    }
    if (ok) return i;
  }
  return std::nullopt;
}

// Determinant by cofactor expansion; fine for the small systems used in
// tests.
inline Rational oracle_det(const Rows& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Rational sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    Rows minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      row.reserve(n - 1);
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (cc != c) row.push_back(a[r][cc]);
      }
      minor.push_back(std::move(row));
    }
    Rational term = a[0][c] * oracle_det(minor);
    if (c % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

// Cramer's-rule solve of a square system; nullopt when singular.
inline std::optional<std::vector<Rational>> oracle_cramer(const Rows& a,
                                                          const std::vector<Rational>& b) {
  Rational d = oracle_det(a);
  if (d.is_zero()) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<Rational> x;
  x.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    Rows replaced = a;
    for (std::size_t r = 0; r < n; ++r) replaced[r][c] = b[r];
    x.push_back(oracle_det(replaced) / d);
  }
  return x;
}

// --- random helpers ------------------------------------------------------

inline Rational random_unit_rational(simplexeq::Rng& rng, unsigned max_den = 20) {
  const auto den = static_cast<long long>(rng.between(1, max_den));
  const auto num = static_cast<long long>(rng.below(static_cast<std::uint64_t>(den) + 1));
  return {num, den};
}

inline simplexeq::PriceSystem random_price(simplexeq::Rng& rng, int n, unsigned max_num = 12) {
  std::vector<Rational> draws(static_cast<std::size_t>(n));
  Rational sum = 0;
  do {
    sum = 0;
    for (int j = 0; j < n; ++j) {
      draws[static_cast<std::size_t>(j)] = Rational(static_cast<long long>(rng.below(max_num + 1)));
      sum += draws[static_cast<std::size_t>(j)];
    }
  } while (sum.is_zero());
  for (auto& d : draws) d /= sum;
  return simplexeq::PriceSystem(std::move(draws));
}

}  // namespace support
