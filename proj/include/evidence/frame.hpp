// Frames of discernment and subset algebra over them.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace evidence {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyFrameError : public Error {
 public:
  EmptyFrameError() : Error("frame must have at least one label") {}
};

class DuplicateLabelError : public Error {
 public:
  explicit DuplicateLabelError(const std::string& label)
      : Error("duplicate frame label '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class FrameTooLargeError : public Error {
 public:
  explicit FrameTooLargeError(std::size_t size)
      : Error("frame has " + std::to_string(size) + " labels; at most 64 are supported") {}
};

class UnknownLabelError : public Error {
 public:
  explicit UnknownLabelError(const std::string& label)
      : Error("unknown label '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

/// Raised when two values defined on different frames are combined.
class FrameMismatchError : public Error {
 public:
  FrameMismatchError() : Error("operands are defined on different frames") {}
};

using Mask = std::uint64_t;

class Subset;

/// An ordered, finite list of mutually exclusive answers to one question.
///
/// Copies share the label storage. Two frames are equal when their label
/// lists are equal, in order.
class Frame {
 public:
  static constexpr std::size_t kMaxSize = 64;

  explicit Frame(std::vector<std::string> labels);
  Frame(std::initializer_list<std::string> labels)
      : Frame(std::vector<std::string>(labels)) {}

  std::size_t size() const noexcept { return labels_->size(); }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  const std::string& label(std::size_t index) const { return labels_->at(index); }

  /// Canonical index of `label`; throws UnknownLabelError.
  std::size_t index_of(std::string_view label) const;
  bool contains(std::string_view label) const noexcept;

  /// Mask with every element of the frame set.
  Mask full_mask() const noexcept;

  Subset empty() const;
  Subset full() const;
  Subset singleton(std::size_t index) const;
  Subset subset(std::span<const std::string> labels) const;
  Subset subset(std::initializer_list<std::string> labels) const;
  Subset subset_from_mask(Mask mask) const;

  friend bool operator==(const Frame& a, const Frame& b) noexcept {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Build a frame, rejecting empty, oversized or duplicated label lists.
Frame make_frame(std::vector<std::string> labels);

/// A subset of a frame's elements, stored as a bit mask over canonical indices.
class Subset {
 public:
  Subset(Frame frame, Mask members);

  const Frame& frame() const noexcept { return frame_; }
  Mask mask() const noexcept { return members_; }

  std::size_t size() const noexcept;
  bool is_empty() const noexcept { return members_ == 0; }
  bool is_full() const noexcept { return members_ == frame_.full_mask(); }
  bool is_singleton() const noexcept { return size() == 1; }
  bool contains(std::size_t index) const noexcept {
    return index < frame_.size() && ((members_ >> index) & 1U) != 0;
  }

  /// Member indices in canonical order.
  std::vector<std::size_t> indices() const;
  /// Member labels in canonical order.
  std::vector<std::string> labels() const;
  /// "{a,b}" in canonical order; "{}" for the empty set.
  std::string to_string() const;

  friend bool operator==(const Subset& a, const Subset& b) noexcept {
    return a.members_ == b.members_ && a.frame_ == b.frame_;
  }

 private:
  Frame frame_;
  Mask members_;
};

Subset complement(const Subset& s);
Subset intersect(const Subset& a, const Subset& b);
Subset unite(const Subset& a, const Subset& b);
/// True when every member of `a` is a member of `b`.
bool is_subset(const Subset& a, const Subset& b);

/// Throws FrameMismatchError unless the frames are equal.
void require_same_frame(const Frame& a, const Frame& b);

}  // namespace evidence
