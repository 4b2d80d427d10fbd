#include "evidence/bayes.hpp"

#include <string>

namespace evidence {

namespace {

void require_probability(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
  }
}

}  // namespace

void ReliabilityScenario::validate() const {
  require_probability(reliability, "r");
  require_probability(prior, "p");
  require_probability(careless_accuracy, "q");
}

double reliability_posterior(const ReliabilityScenario& s) {
  s.validate();
  const double r = s.reliability;
  const double p = s.prior;
  const double q = s.careless_accuracy;
  const double numerator = r * p + (1.0 - r) * p * q;
  const double denominator = numerator + (1.0 - r) * (1.0 - p) * (1.0 - q);
  if (denominator <= 1e-12) {
    throw InconsistentScenarioError("the announcement has probability zero under r=" +
                                    std::to_string(r) + ", p=" + std::to_string(p) +
                                    ", q=" + std::to_string(q));
  }
  return numerator / denominator;
}

std::vector<ComparisonRow> compare_designs(std::span<const ReliabilityScenario> grid,
                                           const SourceModel& model, const Subset& proposition) {
  require_same_frame(model.target(), proposition.frame());
  const auto mass = evaluate(model).mass;
  const double bel = belief(mass, proposition);
  const double pl = plausibility(mass, proposition);

  std::vector<ComparisonRow> rows;
  rows.reserve(grid.size());
  for (const auto& scenario : grid) {
    std::optional<double> posterior;
    try {
      posterior = reliability_posterior(scenario);
    } catch (const InconsistentScenarioError&) {
    }
    rows.push_back({scenario, posterior, bel, pl});
  }
  return rows;
}

}  // namespace evidence
