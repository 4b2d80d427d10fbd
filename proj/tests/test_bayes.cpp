#include <doctest.h>

#include "evidence/bayes.hpp"
#include "support/generators.hpp"

using namespace evidence;

TEST_CASE("reliability_posterior spot values") {
  CHECK(reliability_posterior({0.8, 0.5, 0.5}) == doctest::Approx(0.9).epsilon(1e-12));
  for (double q : {0.0, 0.3, 1.0}) {
    CHECK(std::abs(reliability_posterior({0.8, 1.0, q}) - 1.0) <= 1e-9);
  }
  for (double r : {0.0, 0.5, 0.8}) {
    for (double p : {0.1, 0.5, 1.0}) {
      CHECK(std::abs(reliability_posterior({r, p, 1.0}) - 1.0) <= 1e-9);
    }
  }
  CHECK(reliability_posterior({0.8, 0.0, 0.0}) == 0.0);
}

TEST_CASE("reliability_posterior rejects impossible announcements") {
  CHECK_THROWS_AS(reliability_posterior({0.8, 0.0, 1.0}), InconsistentScenarioError);
  CHECK_THROWS_AS(reliability_posterior({0.0, 1.0, 0.0}), InconsistentScenarioError);
  CHECK_THROWS_AS(reliability_posterior({1.2, 0.5, 0.5}), Error);
  CHECK_THROWS_AS(reliability_posterior({0.8, -0.1, 0.5}), Error);
}

TEST_CASE("posterior is monotone in p and q at r = 0.8") {
  auto at = [](int i) { return i / 20.0; };
  auto posterior = [](double p, double q) -> std::optional<double> {
    try {
      return reliability_posterior({0.8, p, q});
    } catch (const InconsistentScenarioError&) {
      return std::nullopt;
    }
  };
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const auto here = posterior(at(i), at(j));
      if (!here) continue;
      if (i < 20) {
        const auto next_p = posterior(at(i + 1), at(j));
        CHECK((next_p && *next_p >= *here - 1e-12));
      }
      if (j < 20) {
        const auto next_q = posterior(at(i), at(j + 1));
        if (next_q) CHECK(*next_q >= *here - 1e-12);
      }
      if (at(j) >= 0.5) CHECK(*here >= at(i) - 1e-12);
    }
  }
}

TEST_CASE("an unreliable witness reduces to the careless channel alone") {
  // With r = 0 the witness is always careless:
  //   P(assert | true) = q, P(assert | false) = 1 - q
  //   => posterior = p q / (p q + (1 - p)(1 - q)).
  const double points[10][2] = {{0.1, 0.2}, {0.2, 0.9}, {0.3, 0.5}, {0.4, 0.1}, {0.5, 0.5},
                                {0.6, 0.7}, {0.7, 0.3}, {0.8, 0.8}, {0.9, 0.05}, {0.95, 0.6}};
  for (const auto& [p, q] : points) {
    const double expected = p * q / (p * q + (1 - p) * (1 - q));
    CHECK(std::abs(reliability_posterior({0.0, p, q}) - expected) <= 1e-12);
  }
}

TEST_CASE("compare_designs puts both designs side by side") {
  auto model = testing::fred_model();
  auto yes = model.target().subset({"yes"});

  std::vector<ReliabilityScenario> grid{{0.8, 0.5, 0.5}};
  auto rows = compare_designs(grid, model, yes);
  REQUIRE(rows.size() == 1);
  CHECK(*rows[0].bayes == doctest::Approx(0.9));
  CHECK(rows[0].bel == doctest::Approx(0.8));
  CHECK(rows[0].pl == doctest::Approx(1.0));

  CHECK(compare_designs({}, model, yes).empty());

  std::vector<ReliabilityScenario> divergent{{0.8, 0.0, 0.0}, {0.8, 0.0, 1.0}};
  rows = compare_designs(divergent, model, yes);
  CHECK(*rows[0].bayes == 0.0);
  CHECK(rows[0].bel == doctest::Approx(0.8));
  CHECK_FALSE(rows[1].bayes.has_value());

  CHECK_THROWS_AS(compare_designs(grid, model, Frame{"a"}.full()), FrameMismatchError);
}
