// Source models: a probability measure over a source frame, a compatibility
// relation into a target frame, and the belief function obtained by
// extending the measure along the relation.
#pragma once

#include <vector>

#include "evidence/belief.hpp"
#include "evidence/frame.hpp"

namespace evidence {

/// All prior probability sits on source states that no target answer is
/// compatible with: the evidence cannot be reconciled.
class TotalConflictError : public Error {
 public:
  explicit TotalConflictError(const std::string& what) : Error(what) {}
};

/// extend() was handed a model that still puts mass on contradicted states.
class NotConditionedError : public Error {
 public:
  using Error::Error;
};

/// Relation between a source frame S and a target frame T, stored as the
/// image {t | s compatible with t} of every s. An empty image marks a source
/// state that the observed evidence contradicts.
class CompatibilityRelation {
 public:
  CompatibilityRelation(Frame source, Frame target, std::vector<Subset> images);

  /// Identity relation on `f`: each element is compatible only with itself.
  static CompatibilityRelation identity(const Frame& f);

  const Frame& source() const noexcept { return source_; }
  const Frame& target() const noexcept { return target_; }
  const Subset& image(std::size_t source_index) const { return images_.at(source_index); }
  const std::vector<Subset>& images() const noexcept { return images_; }

 private:
  Frame source_;
  Frame target_;
  std::vector<Subset> images_;
};

class SourceModel;
struct ConditionedSource;
ConditionedSource condition_source(const SourceModel& model);

/// A compatibility relation together with a prior over its source frame.
///
/// The prior has one entry per source element, each in [0, 1], summing to 1
/// within kNormTolerance; it is renormalized exactly at construction.
class SourceModel {
 public:
  SourceModel(CompatibilityRelation relation, std::vector<double> prior);

  const CompatibilityRelation& relation() const noexcept { return relation_; }
  const Frame& source() const noexcept { return relation_.source(); }
  const Frame& target() const noexcept { return relation_.target(); }
  const std::vector<double>& prior() const noexcept { return prior_; }
  double prior(std::size_t source_index) const { return prior_.at(source_index); }

 private:
  SourceModel(CompatibilityRelation relation, std::vector<double> prior, bool);
  friend ConditionedSource condition_source(const SourceModel& model);

  CompatibilityRelation relation_;
  std::vector<double> prior_;
};

struct ConditionedSource {
  SourceModel posterior;
  /// Prior probability that sat on contradicted source states.
  double conflict;
};

/// Remove the prior mass on empty-image states and renormalize the rest.
/// A model without conflict is returned unchanged. Throws TotalConflictError
/// when at most 1e-12 of the prior survives.
ConditionedSource condition_source(const SourceModel& model);

/// Push an already-conditioned prior along the relation: the mass of each
/// target subset B is the prior of the states whose image is exactly B.
/// Throws NotConditionedError if a contradicted state has positive prior.
MassFunction extend(const SourceModel& model);

struct Evaluation {
  MassFunction mass;
  double conflict;
};

/// extend(condition_source(model)), keeping the conflict.
Evaluation evaluate(const SourceModel& model);

}  // namespace evidence
