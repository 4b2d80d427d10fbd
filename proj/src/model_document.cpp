#include "evidence/model_document.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "evidence/combination.hpp"

namespace evidence {

namespace {

using nlohmann::json;

void require_keys(const json& object, std::initializer_list<std::string_view> allowed,
                  const std::string& where) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (auto key : allowed) known = known || item.key() == key;
    if (!known) throw ValidationError(where + ": unexpected key '" + item.key() + "'");
  }
}

std::vector<std::string> string_list(const json& value, const std::string& where) {
  if (!value.is_array()) throw ValidationError(where + " must be a list of labels");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) throw ValidationError(where + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Frame frame_from(const json& value, const std::string& where) {
  try {
    return Frame(string_list(value, where));
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

SourceBlock parse_block(const json& block, const Frame& target, const std::string& fallback_name) {
  if (!block.is_object()) throw ValidationError(fallback_name + " must be an object");
  require_keys(block, {"name", "frame", "prior", "compatibility"}, fallback_name);

  std::string name = fallback_name;
  if (block.contains("name")) {
    if (!block["name"].is_string()) throw ValidationError(fallback_name + ": name must be a string");
    name = block["name"].get<std::string>();
  }
  const std::string where = "source '" + name + "'";
  for (auto key : {"frame", "prior", "compatibility"}) {
    if (!block.contains(key)) throw ValidationError(where + ": missing \"" + key + "\"");
  }
  const Frame source = frame_from(block["frame"], where + " frame");

  const json& prior_json = block["prior"];
  const json& compat_json = block["compatibility"];
  if (!prior_json.is_object()) throw ValidationError(where + ": prior must be an object");
  if (!compat_json.is_object()) throw ValidationError(where + ": compatibility must be an object");
  for (const auto& item : prior_json.items()) {
    if (!source.contains(item.key())) {
      throw ValidationError(where + ": prior names unknown source label '" + item.key() + "'");
    }
  }
  for (const auto& item : compat_json.items()) {
    if (!source.contains(item.key())) {
      throw ValidationError(where + ": compatibility names unknown source label '" + item.key() +
                            "'");
    }
  }

  std::vector<double> prior;
  std::vector<Subset> images;
  for (const auto& label : source.labels()) {
    if (!prior_json.contains(label)) {
      throw ValidationError(where + ": prior has no entry for '" + label + "'");
    }
    if (!prior_json[label].is_number()) {
      throw ValidationError(where + ": prior of '" + label + "' must be a number");
    }
    prior.push_back(prior_json[label].get<double>());

    if (!compat_json.contains(label)) {
      throw ValidationError(where + ": compatibility has no row for '" + label + "'");
    }
    Mask mask = 0;
    for (const auto& t : string_list(compat_json[label], where + " compatibility of '" + label + "'")) {
      if (!target.contains(t)) {
        throw ValidationError(where + ": unknown label '" + t + "' in compatibility of '" + label +
                              "'");
      }
      mask |= Mask{1} << target.index_of(t);
    }
    images.push_back(target.subset_from_mask(mask));
  }

  double total = 0.0;
  for (double p : prior) total += p;
  if (std::abs(total - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << where << ": prior does not sum to 1 (sum " << total << ")";
    throw ValidationError(msg.str());
  }
  try {
    return {name, SourceModel(CompatibilityRelation(source, target, std::move(images)),
                              std::move(prior))};
  } catch (const Error& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

}  // namespace

SourceModel ModelDocument::combined_model() const {
  if (joint) return joint->model;
  SourceModel combined = sources.front().model;
  for (std::size_t i = 1; i < sources.size(); ++i) {
    combined = product_source(combined, sources[i].model);
  }
  return combined;
}

ModelDocument load_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("model document must be a JSON object");
  require_keys(doc, {"target_frame", "sources", "joint"}, "model document");
  if (!doc.contains("target_frame")) throw ValidationError("missing \"target_frame\"");
  const bool has_sources = doc.contains("sources");
  const bool has_joint = doc.contains("joint");
  if (has_sources && has_joint) {
    throw ValidationError("a document holds either \"sources\" or \"joint\", not both");
  }
  if (!has_sources && !has_joint) throw ValidationError("missing \"sources\" or \"joint\"");

  ModelDocument out{frame_from(doc["target_frame"], "target_frame"), {}, std::nullopt};
  if (has_joint) {
    out.joint = parse_block(doc["joint"], out.target, "joint");
    return out;
  }
  const json& sources = doc["sources"];
  if (!sources.is_array() || sources.empty()) {
    throw ValidationError("\"sources\" must be a non-empty list");
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    auto block = parse_block(sources[i], out.target, "sources[" + std::to_string(i) + "]");
    if (!names.insert(block.name).second) {
      throw ValidationError("duplicate source name '" + block.name + "'");
    }
    out.sources.push_back(std::move(block));
  }
  return out;
}

ModelDocument load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_model(buffer.str());
}

}  // namespace evidence
