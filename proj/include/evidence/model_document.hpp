// Declarative evidence-model files (JSON).
//
//   {"target_frame": ["yes", "no"],
//    "sources": [{"name": "fred",
//                 "frame": ["truthful", "careless"],
//                 "prior": {"truthful": 0.8, "careless": 0.2},
//                 "compatibility": {"truthful": ["yes"], "careless": ["yes", "no"]}}]}
//
// A document holds either "sources" (independent items of evidence, to be
// combined as a product) or "joint" (one block whose prior already encodes
// the dependence between witnesses), never both. An empty compatibility
// list marks a contradicted source state.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evidence/frame.hpp"
#include "evidence/source_model.hpp"

namespace evidence {

/// The document is malformed or violates a model invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The document could not be read.
class IoError : public Error {
 public:
  using Error::Error;
};

struct SourceBlock {
  std::string name;
  SourceModel model;
};

struct ModelDocument {
  Frame target;
  std::vector<SourceBlock> sources;
  std::optional<SourceBlock> joint;

  bool is_joint() const noexcept { return joint.has_value(); }

  /// The joint block as is, or the product of all independent sources in
  /// document order.
  SourceModel combined_model() const;
};

ModelDocument load_model(std::string_view text);
ModelDocument load_model_file(const std::filesystem::path& path);

}  // namespace evidence
