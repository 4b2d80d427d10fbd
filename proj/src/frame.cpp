#include "evidence/frame.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace evidence {

namespace {

std::shared_ptr<const std::vector<std::string>> validated(std::vector<std::string> labels) {
  if (labels.empty()) throw EmptyFrameError();
  if (labels.size() > Frame::kMaxSize) throw FrameTooLargeError(labels.size());
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw Error("frame labels must be non-empty");
    if (!seen.insert(label).second) throw DuplicateLabelError(label);
  }
  return std::make_shared<const std::vector<std::string>>(std::move(labels));
}

}  // namespace

Frame::Frame(std::vector<std::string> labels) : labels_(validated(std::move(labels))) {}

Frame make_frame(std::vector<std::string> labels) { return Frame(std::move(labels)); }

std::size_t Frame::index_of(std::string_view label) const {
  const auto& ls = *labels_;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) throw UnknownLabelError(std::string(label));
  return static_cast<std::size_t>(it - ls.begin());
}

bool Frame::contains(std::string_view label) const noexcept {
  return std::find(labels_->begin(), labels_->end(), label) != labels_->end();
}

Mask Frame::full_mask() const noexcept {
  return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1;
}

Subset Frame::empty() const { return Subset(*this, 0); }
Subset Frame::full() const { return Subset(*this, full_mask()); }

Subset Frame::singleton(std::size_t index) const {
  if (index >= size()) throw Error("element index out of range");
  return Subset(*this, Mask{1} << index);
}

Subset Frame::subset(std::span<const std::string> labels) const {
  Mask mask = 0;
  for (const auto& label : labels) mask |= Mask{1} << index_of(label);
  return Subset(*this, mask);
}

Subset Frame::subset(std::initializer_list<std::string> labels) const {
  return subset(std::span<const std::string>(labels.begin(), labels.size()));
}

Subset Frame::subset_from_mask(Mask mask) const { return Subset(*this, mask); }

Subset::Subset(Frame frame, Mask members) : frame_(std::move(frame)), members_(members) {
  if ((members_ & ~frame_.full_mask()) != 0) throw Error("subset member index out of range");
}

std::size_t Subset::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(members_));
}

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  for (Mask rest = members_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

std::vector<std::string> Subset::labels() const {
  std::vector<std::string> out;
  for (auto i : indices()) out.push_back(frame_.label(i));
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto i : indices()) {
    if (!first) out += ',';
    out += frame_.label(i);
    first = false;
  }
  return out + "}";
}

void require_same_frame(const Frame& a, const Frame& b) {
  if (!(a == b)) throw FrameMismatchError();
}

Subset complement(const Subset& s) {
  return Subset(s.frame(), ~s.mask() & s.frame().full_mask());
}

Subset intersect(const Subset& a, const Subset& b) {
  require_same_frame(a.frame(), b.frame());
  return Subset(a.frame(), a.mask() & b.mask());
}

Subset unite(const Subset& a, const Subset& b) {
  require_same_frame(a.frame(), b.frame());
  return Subset(a.frame(), a.mask() | b.mask());
}

bool is_subset(const Subset& a, const Subset& b) {
  require_same_frame(a.frame(), b.frame());
  return (a.mask() & ~b.mask()) == 0;
}

}  // namespace evidence
