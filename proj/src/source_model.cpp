#include "evidence/source_model.hpp"

#include <cmath>
#include <string>

namespace evidence {

namespace {

constexpr double kTotalConflictFloor = 1e-12;

}  // namespace

CompatibilityRelation::CompatibilityRelation(Frame source, Frame target,
                                             std::vector<Subset> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size()) {
    throw Error("compatibility relation needs one image per source element");
  }
  for (const auto& image : images_) require_same_frame(target_, image.frame());
}

CompatibilityRelation CompatibilityRelation::identity(const Frame& f) {
  std::vector<Subset> images;
  images.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) images.push_back(f.singleton(i));
  return CompatibilityRelation(f, f, std::move(images));
}

SourceModel::SourceModel(CompatibilityRelation relation, std::vector<double> prior)
    : relation_(std::move(relation)), prior_(std::move(prior)) {
  if (prior_.size() != relation_.source().size()) {
    throw Error("prior needs one probability per source element");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < prior_.size(); ++i) {
    const double p = prior_[i];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error("prior of '" + relation_.source().label(i) + "' must lie in [0, 1], got " +
                  std::to_string(p));
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw Error("prior does not sum to 1 (sum " + std::to_string(total) + ")");
  }
  for (auto& p : prior_) p /= total;
}

SourceModel::SourceModel(CompatibilityRelation relation, std::vector<double> prior, bool)
    : relation_(std::move(relation)), prior_(std::move(prior)) {}

ConditionedSource condition_source(const SourceModel& model) {
  double conflict = 0.0;
  double supported = 0.0;
  for (std::size_t i = 0; i < model.prior().size(); ++i) {
    if (model.relation().image(i).is_empty()) {
      conflict += model.prior(i);
    } else {
      supported += model.prior(i);
    }
  }
  if (supported <= kTotalConflictFloor) {
    throw TotalConflictError("every source state with positive probability is contradicted");
  }
  if (conflict == 0.0) return {model, 0.0};

  std::vector<double> posterior(model.prior().size(), 0.0);
  for (std::size_t i = 0; i < posterior.size(); ++i) {
    if (!model.relation().image(i).is_empty()) posterior[i] = model.prior(i) / supported;
  }
  return {SourceModel(model.relation(), std::move(posterior), true), conflict};
}

MassFunction extend(const SourceModel& model) {
  MassFunction::FocalMap focal;
  for (std::size_t i = 0; i < model.prior().size(); ++i) {
    const double p = model.prior(i);
    if (p == 0.0) continue;
    const Subset& image = model.relation().image(i);
    if (image.is_empty()) {
      throw NotConditionedError("source state '" + model.source().label(i) +
                                "' is contradicted but carries probability; condition first");
    }
    focal[image.mask()] += p;
  }
  return MassFunction::from_weights(model.target(), std::move(focal));
}

Evaluation evaluate(const SourceModel& model) {
  auto conditioned = condition_source(model);
  return {extend(conditioned.posterior), conditioned.conflict};
}

}  // namespace evidence
