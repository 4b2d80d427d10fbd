// Dempster's rule of combination, directly on mass functions and through
// the product of two independent source models.
//
// Both paths assume the items of evidence are independent. Nothing here can
// detect dependence; dependent evidence belongs in a single joint
// SourceModel evaluated with evaluate().
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evidence/belief.hpp"
#include "evidence/source_model.hpp"

namespace evidence {

/// Product of two independent sources over a shared target frame.
///
/// Source states are the pairs "(a, b)" in row-major order, with prior
/// prior_a(a) * prior_b(b) and image image_a(a) ∩ image_b(b). Throws
/// FrameMismatchError on different targets and FrameTooLargeError when the
/// product frame would exceed 64 states.
SourceModel product_source(const SourceModel& a, const SourceModel& b);

struct Combination {
  MassFunction mass;
  /// Weight the focal products committed to the empty set.
  double conflict;
};

/// Dempster's rule: intersect every pair of focal sets, discard the weight
/// landing on the empty set and renormalize. Throws TotalConflictError when
/// the discarded weight is 1 within 1e-12.
Combination dempster_combine(const MassFunction& m1, const MassFunction& m2);

/// Raised by combine_all; `step()` is the 1-based index of the failing fold
/// step (step k combines the running result with masses[k]).
class CombinationStepError : public TotalConflictError {
 public:
  CombinationStepError(std::size_t step, const std::string& what)
      : TotalConflictError("combination step " + std::to_string(step) + ": " + what),
        step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

struct CombineAllResult {
  MassFunction mass;
  /// Conflict of each binary step, in fold order.
  std::vector<double> step_conflicts;
  /// 1 - prod(1 - K_i) after each step: the share of the product measure
  /// discarded so far.
  std::vector<double> cumulative_conflicts;

  double total_conflict() const noexcept {
    return cumulative_conflicts.empty() ? 0.0 : cumulative_conflicts.back();
  }
};

/// Left fold of dempster_combine. An empty list yields vacuous(frame).
CombineAllResult combine_all(std::span<const MassFunction> masses, const Frame& frame);

}  // namespace evidence
