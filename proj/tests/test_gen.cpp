#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "simplexeq/equilibrium.hpp"
#include "simplexeq/gen.hpp"
#include "test_support.hpp"

using namespace simplexeq;

TEST_CASE("the same spec and seed reproduce the same economy") {
  GenSpec spec;
  spec.consumers = 5;
  spec.commodities = 4;
  spec.seed = 7;
  spec.force_minimal = true;
  SimplexEconomy a = generate_economy(spec);
  SimplexEconomy b = generate_economy(spec);
  CHECK(a == b);

  spec.seed = 8;
  CHECK_FALSE(a == generate_economy(spec));
}

TEST_CASE("generated economies validate under the exact policy") {
  Rng seeds(61);
  for (int iter = 0; iter < 60; ++iter) {
    GenSpec spec;
    spec.consumers = static_cast<int>(seeds.between(1, 8));
    spec.commodities = static_cast<int>(seeds.between(1, 8));
    spec.seed = seeds.between(0, 1u << 30);
    spec.denominator_bound = static_cast<unsigned>(seeds.between(1, 60));
    SimplexEconomy econ = generate_economy(spec);

    support::Rows rows;
    for (int i = 0; i < econ.consumers(); ++i) {
      auto r = econ.endowments().row(i);
      rows.emplace_back(r.begin(), r.end());
    }
    auto revalidated = validate_economy(rows, econ.preferences().one_based());
    CHECK(revalidated.economy == econ);
    CHECK(revalidated.report.adjustments.empty());
  }
}

TEST_CASE("force_minimal output is re-checked, across many seeds") {
  Rng seeds(67);
  for (int iter = 0; iter < 60; ++iter) {
    GenSpec spec;
    spec.consumers = static_cast<int>(seeds.between(1, 7));
    spec.commodities = static_cast<int>(seeds.between(1, 7));
    spec.seed = seeds.between(0, 1u << 30);
    spec.force_minimal = true;
    SimplexEconomy econ = generate_economy(spec);
    PreferenceGroups g = group_preferences(econ.preferences());
    CHECK(is_minimal(econ, g, compute_min_terms(econ, g)).minimal);
  }
}

TEST_CASE("the one-consumer one-commodity economy is the identity") {
  GenSpec spec;  // defaults: m = n = 1
  SimplexEconomy econ = generate_economy(spec);
  CHECK(econ.consumers() == 1);
  CHECK(econ.commodities() == 1);
  CHECK(econ.endowments().at(0, 0) == Rational(1));
  CHECK(econ.preferences().one_based() == std::vector<int>{1});
}

TEST_CASE("invalid specs are rejected") {
  GenSpec spec;
  spec.consumers = 0;
  CHECK_THROWS_AS(generate_economy(spec), std::invalid_argument);
  spec.consumers = 2;
  spec.denominator_bound = 0;
  CHECK_THROWS_AS(generate_economy(spec), std::invalid_argument);
}
