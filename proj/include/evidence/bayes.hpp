// Bayesian conditioning design for a witness of known reliability, and a
// side-by-side comparison with the belief-function treatment of the same
// testimony.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "evidence/frame.hpp"
#include "evidence/source_model.hpp"

namespace evidence {

/// The announcement has probability zero under the scenario.
class InconsistentScenarioError : public Error {
 public:
  using Error::Error;
};

/// Inputs of the conditioning design.
///
/// reliability: chance the witness reports truthfully.
/// prior: prior probability of the asserted proposition.
/// careless_accuracy: chance a careless report happens to assert the true
/// state, so P(assert | careless, true) = q and P(assert | careless, false)
/// = 1 - q.
struct ReliabilityScenario {
  double reliability = 0.8;
  double prior = 0.5;
  double careless_accuracy = 0.5;

  /// Throws Error unless all three lie in [0, 1].
  void validate() const;
};

/// P(proposition | announcement) =
///   (r p + (1-r) p q) / (r p + (1-r) p q + (1-r)(1-p)(1-q)).
/// Throws InconsistentScenarioError when the denominator is at most 1e-12.
double reliability_posterior(const ReliabilityScenario& s);

struct ComparisonRow {
  ReliabilityScenario scenario;
  /// Empty when the scenario is inconsistent.
  std::optional<double> bayes;
  double bel;
  double pl;
};

/// One row per scenario. Bel/Pl of `proposition` come from evaluate(model)
/// and are the same on every row. Inconsistent scenarios get an empty
/// posterior instead of aborting the table.
std::vector<ComparisonRow> compare_designs(std::span<const ReliabilityScenario> grid,
                                           const SourceModel& model, const Subset& proposition);

}  // namespace evidence
