// Mass functions and the belief / plausibility functions they induce.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "evidence/frame.hpp"

namespace evidence {

/// Raised when a mass assignment violates the mass-function invariants.
class InvalidMassError : public Error {
 public:
  using Error::Error;
};

/// Normalization slack accepted at construction.
inline constexpr double kNormTolerance = 1e-9;

/// A normalized assignment of positive mass to non-empty focal subsets.
///
/// Construction rejects empty focal sets, non-positive masses, duplicated
/// subsets and totals further than kNormTolerance from 1, then divides every
/// mass by the computed total. Focal sets iterate in ascending mask order.
class MassFunction {
 public:
  using FocalMap = std::map<Mask, double>;

  MassFunction(Frame frame, const std::vector<std::pair<Subset, double>>& focal);

  const Frame& frame() const noexcept { return frame_; }
  const FocalMap& focal() const noexcept { return focal_; }
  std::size_t focal_count() const noexcept { return focal_.size(); }

  /// Mass of `s`; zero when `s` is not focal.
  double mass(const Subset& s) const;

  /// Focal subsets with their masses, in canonical order.
  std::vector<std::pair<Subset, double>> focal_sets() const;

  /// Skips validation; `focal` must already satisfy every invariant except
  /// exact normalization, which is restored here.
  static MassFunction from_weights(Frame frame, FocalMap focal);

 private:
  MassFunction(Frame frame, FocalMap focal, bool);

  Frame frame_;
  FocalMap focal_;
};

/// Total mass of focal sets contained in `b`.
double belief(const MassFunction& m, const Subset& b);
/// 1 - belief of the complement of `b`.
double plausibility(const MassFunction& m, const Subset& b);
/// All mass on the full frame.
MassFunction vacuous(const Frame& f);
/// True when every focal element is a singleton.
bool is_bayesian(const MassFunction& m);

/// Belief values for every subset of a small frame, indexed by mask.
class BeliefTable {
 public:
  static constexpr std::size_t kMaxFrameSize = 16;

  BeliefTable(Frame frame, std::vector<double> values);

  const Frame& frame() const noexcept { return frame_; }
  double value(const Subset& s) const;
  double value(Mask mask) const { return values_.at(mask); }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  Frame frame_;
  std::vector<double> values_;
};

/// Tabulate belief(m, B) for every subset B of m's frame.
BeliefTable belief_table(const MassFunction& m);

/// Recover the mass function whose beliefs reproduce `t` (Moebius inversion).
/// Masses below 1e-12 are dropped. Throws InvalidMassError if some
/// recovered mass is below -1e-9, i.e. `t` is not a belief function.
MassFunction mass_from_belief(const BeliefTable& t);

}  // namespace evidence
