#include "evidence/combination.hpp"

namespace evidence {

namespace {

constexpr double kTotalConflictFloor = 1e-12;

}  // namespace

SourceModel product_source(const SourceModel& a, const SourceModel& b) {
  require_same_frame(a.target(), b.target());
  const std::size_t na = a.source().size();
  const std::size_t nb = b.source().size();
  if (na * nb > Frame::kMaxSize) throw FrameTooLargeError(na * nb);

  std::vector<std::string> labels;
  std::vector<Subset> images;
  std::vector<double> prior;
  labels.reserve(na * nb);
  images.reserve(na * nb);
  prior.reserve(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      labels.push_back("(" + a.source().label(i) + ", " + b.source().label(j) + ")");
      images.push_back(intersect(a.relation().image(i), b.relation().image(j)));
      prior.push_back(a.prior(i) * b.prior(j));
    }
  }
  return SourceModel(CompatibilityRelation(Frame(std::move(labels)), a.target(), std::move(images)),
                     std::move(prior));
}

Combination dempster_combine(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame());
  MassFunction::FocalMap merged;
  double conflict = 0.0;
  double retained = 0.0;
  for (const auto& [a, ma] : m1.focal()) {
    for (const auto& [b, mb] : m2.focal()) {
      const double w = ma * mb;
      if (const Mask meet = a & b; meet == 0) {
        conflict += w;
      } else {
        merged[meet] += w;
        retained += w;
      }
    }
  }
  if (retained <= kTotalConflictFloor) {
    throw TotalConflictError("the mass functions are totally conflicting");
  }
  return {MassFunction::from_weights(m1.frame(), std::move(merged)), conflict};
}

CombineAllResult combine_all(std::span<const MassFunction> masses, const Frame& frame) {
  for (const auto& m : masses) require_same_frame(frame, m.frame());
  if (masses.empty()) return {vacuous(frame), {}, {}};

  CombineAllResult result{masses.front(), {}, {}};
  double survived = 1.0;
  for (std::size_t k = 1; k < masses.size(); ++k) {
    try {
      auto step = dempster_combine(result.mass, masses[k]);
      result.mass = std::move(step.mass);
      result.step_conflicts.push_back(step.conflict);
      survived *= 1.0 - step.conflict;
      result.cumulative_conflicts.push_back(1.0 - survived);
    } catch (const TotalConflictError& e) {
      throw CombinationStepError(k, e.what());
    }
  }
  return result;
}

}  // namespace evidence
