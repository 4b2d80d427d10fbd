#include "evidence/belief.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace evidence {

namespace {

constexpr double kDropBelow = 1e-12;

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

MassFunction::MassFunction(Frame frame, const std::vector<std::pair<Subset, double>>& focal)
    : frame_(std::move(frame)) {
  double total = 0.0;
  for (const auto& [subset, mass] : focal) {
    require_same_frame(frame_, subset.frame());
    if (subset.is_empty()) throw InvalidMassError("the empty set cannot carry mass");
    if (!(mass > 0.0) || !std::isfinite(mass)) {
      throw InvalidMassError("mass of " + subset.to_string() + " must be positive, got " +
                             std::to_string(mass));
    }
    if (!focal_.emplace(subset.mask(), mass).second) {
      throw InvalidMassError("duplicate focal set " + subset.to_string());
    }
    total += mass;
  }
  if (focal_.empty()) throw InvalidMassError("a mass function needs at least one focal set");
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw InvalidMassError("masses sum to " + std::to_string(total) + ", not 1");
  }
  for (auto& entry : focal_) entry.second /= total;
}

MassFunction::MassFunction(Frame frame, FocalMap focal, bool)
    : frame_(std::move(frame)), focal_(std::move(focal)) {}

MassFunction MassFunction::from_weights(Frame frame, FocalMap focal) {
  double total = 0.0;
  for (const auto& entry : focal) total += entry.second;
  for (auto& entry : focal) entry.second /= total;
  return MassFunction(std::move(frame), std::move(focal), true);
}

double MassFunction::mass(const Subset& s) const {
  require_same_frame(frame_, s.frame());
  auto it = focal_.find(s.mask());
  return it == focal_.end() ? 0.0 : it->second;
}

std::vector<std::pair<Subset, double>> MassFunction::focal_sets() const {
  std::vector<std::pair<Subset, double>> out;
  out.reserve(focal_.size());
  for (const auto& [mask, mass] : focal_) out.emplace_back(Subset(frame_, mask), mass);
  return out;
}

double belief(const MassFunction& m, const Subset& b) {
  require_same_frame(m.frame(), b.frame());
  double sum = 0.0;
  for (const auto& [mask, mass] : m.focal()) {
    if ((mask & ~b.mask()) == 0) sum += mass;
  }
  return clamp_unit(sum);
}

double plausibility(const MassFunction& m, const Subset& b) {
  return clamp_unit(1.0 - belief(m, complement(b)));
}

MassFunction vacuous(const Frame& f) {
  return MassFunction::from_weights(f, {{f.full_mask(), 1.0}});
}

bool is_bayesian(const MassFunction& m) {
  return std::all_of(m.focal().begin(), m.focal().end(),
                     [](const auto& entry) { return (entry.first & (entry.first - 1)) == 0; });
}

BeliefTable::BeliefTable(Frame frame, std::vector<double> values)
    : frame_(std::move(frame)), values_(std::move(values)) {
  if (frame_.size() > kMaxFrameSize) {
    throw Error("belief tables are limited to frames of at most 16 elements");
  }
  if (values_.size() != (std::size_t{1} << frame_.size())) {
    throw Error("belief table needs one value per subset of the frame");
  }
}

double BeliefTable::value(const Subset& s) const {
  require_same_frame(frame_, s.frame());
  return values_.at(s.mask());
}

BeliefTable belief_table(const MassFunction& m) {
  const auto& frame = m.frame();
  if (frame.size() > BeliefTable::kMaxFrameSize) {
    throw Error("belief tables are limited to frames of at most 16 elements");
  }
  std::vector<double> values(std::size_t{1} << frame.size(), 0.0);
  for (const auto& [mask, mass] : m.focal()) values[mask] += mass;
  // Zeta transform over the subset lattice: values[B] = sum of values[A], A subset of B.
  for (std::size_t bit = 0; bit < frame.size(); ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t mask = 0; mask < values.size(); ++mask) {
      if (mask & b) values[mask] += values[mask ^ b];
    }
  }
  for (auto& v : values) v = clamp_unit(v);
  return BeliefTable(frame, std::move(values));
}

MassFunction mass_from_belief(const BeliefTable& t) {
  std::vector<double> masses = t.values();
  // Inverse of the zeta transform above.
  for (std::size_t bit = 0; bit < t.frame().size(); ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t mask = 0; mask < masses.size(); ++mask) {
      if (mask & b) masses[mask] -= masses[mask ^ b];
    }
  }
  if (std::abs(masses[0]) > kNormTolerance) {
    throw InvalidMassError("belief of the empty set must be 0");
  }
  std::vector<std::pair<Subset, double>> focal;
  for (std::size_t mask = 1; mask < masses.size(); ++mask) {
    const double m = masses[mask];
    if (m < -kNormTolerance) {
      throw InvalidMassError("table is not a belief function: inverted mass of " +
                             t.frame().subset_from_mask(mask).to_string() + " is " +
                             std::to_string(m));
    }
    if (m >= kDropBelow) focal.emplace_back(t.frame().subset_from_mask(mask), m);
  }
  return MassFunction(t.frame(), focal);
}

}  // namespace evidence
