// Copyright 2026 The rlam Authors
// SPDX-License-Identifier: Apache-2.0

#include "rlam/action.hpp"

#include "rlam/errors.hpp"

namespace rlam {

namespace {

constexpr std::string_view kNodePrefix = "@node:";
constexpr std::string_view kOutputInfix = "/output:";

bool valid_ref_component(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == '/' || c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  }
  return true;
}

const Value& require_field(const Value& doc, const char* key, const char* ctx) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(std::string(ctx) + " is missing required field '" + key + "'");
  }
  return *it;
}

std::string require_string(const Value& doc, const char* key, const char* ctx) {
  const Value& v = require_field(doc, key, ctx);
  if (!v.is_string()) {
    throw ParseError(std::string(ctx) + " field '" + key + "' must be a string");
  }
  return v.get<std::string>();
}

}  // namespace

std::string SymbolicRef::to_string() const {
  return std::string(kNodePrefix) + node_id + std::string(kOutputInfix) + output_name;
}

std::optional<SymbolicRef> SymbolicRef::parse(std::string_view text) {
  if (!text.starts_with(kNodePrefix)) return std::nullopt;
  text.remove_prefix(kNodePrefix.size());
  auto sep = text.find(kOutputInfix);
  if (sep == std::string_view::npos) return std::nullopt;
  std::string_view node = text.substr(0, sep);
  std::string_view output = text.substr(sep + kOutputInfix.size());
  if (!valid_ref_component(node) || !valid_ref_component(output)) return std::nullopt;
  return SymbolicRef{std::string(node), std::string(output)};
}

Value artifact_ref_to_json(const ArtifactRef& ref) {
  Value doc = Value::object();
  if (const auto* inline_v = std::get_if<Value>(&ref.ref)) {
    doc["inline"] = *inline_v;
  } else if (const auto* hash = std::get_if<ContentHash>(&ref.ref)) {
    doc["content"] = hash->to_string();
  } else {
    doc["symbolic"] = std::get<std::string>(ref.ref);
  }
  return doc;
}

ArtifactRef artifact_ref_from_json(const Value& doc) {
  if (!doc.is_object() || doc.size() != 1) {
    throw ParseError("artifact reference must be an object with exactly one of "
                     "'inline', 'content', 'symbolic'");
  }
  if (auto it = doc.find("inline"); it != doc.end()) {
    return ArtifactRef::inline_value(*it);
  }
  if (auto it = doc.find("content"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("'content' reference must be a string");
    return ArtifactRef::content(ContentHash::parse(it->get<std::string>()));
  }
  if (auto it = doc.find("symbolic"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("'symbolic' reference must be a string");
    return ArtifactRef::symbolic(it->get<std::string>());
  }
  throw ParseError("artifact reference has unknown variant tag");
}

namespace {

Value predicate_to_json(const Predicate& p) {
  Value doc = Value::object();
  switch (p.kind) {
    case Predicate::Kind::ArtifactExists:
      doc["kind"] = "artifact_exists";
      doc["name"] = p.name;
      break;
    case Predicate::Kind::ArtifactAbsent:
      doc["kind"] = "artifact_absent";
      doc["name"] = p.name;
      break;
    case Predicate::Kind::ParamEquals:
      doc["kind"] = "param_equals";
      doc["name"] = p.name;
      doc["value"] = p.value;
      break;
  }
  return doc;
}

Predicate predicate_from_json(const Value& doc) {
  std::string kind = require_string(doc, "kind", "predicate");
  std::string name = require_string(doc, "name", "predicate");
  if (kind == "artifact_exists") return Predicate::artifact_exists(name);
  if (kind == "artifact_absent") return Predicate::artifact_absent(name);
  if (kind == "param_equals") {
    return Predicate::param_equals(name, require_field(doc, "value", "predicate"));
  }
  throw ParseError("unknown predicate kind '" + kind + "'");
}

Value metadata_to_json(const Metadata& m) {
  Value doc = Value::object();
  doc["environment_id"] = m.environment_id;
  doc["logical_timestamp"] = m.logical_timestamp;
  doc["planner_config"] = m.planner_config;
  Value seeds = Value::object();
  for (const auto& [name, seed] : m.seeds) seeds[name] = seed;
  doc["seeds"] = seeds;
  return doc;
}

Metadata metadata_from_json(const Value& doc) {
  Metadata m;
  m.environment_id = require_string(doc, "environment_id", "metadata");
  const Value& ts = require_field(doc, "logical_timestamp", "metadata");
  if (!ts.is_number_unsigned() && !(ts.is_number_integer() && ts.get<std::int64_t>() >= 0)) {
    throw ParseError("metadata logical_timestamp must be a non-negative integer");
  }
  m.logical_timestamp = ts.get<std::uint64_t>();
  m.planner_config = require_field(doc, "planner_config", "metadata");
  const Value& seeds = require_field(doc, "seeds", "metadata");
  if (!seeds.is_object()) throw ParseError("metadata seeds must be an object");
  for (const auto& [name, seed] : seeds.items()) {
    if (!seed.is_number_unsigned() &&
        !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
      throw ParseError("seed '" + name + "' must be an unsigned 64-bit integer");
    }
    m.seeds.insert(name, seed.get<std::uint64_t>());
  }
  return m;
}

}  // namespace

Value action_to_json(const Action& action) {
  Value doc = Value::object();
  doc["id"] = action.id;
  doc["type"] = action.action_type;
  Value inputs = Value::object();
  for (const auto& [name, ref] : action.inputs) inputs[name] = artifact_ref_to_json(ref);
  doc["inputs"] = inputs;
  Value params = Value::object();
  for (const auto& [name, value] : action.parameters) params[name] = value;
  doc["parameters"] = params;
  Value preconditions = Value::array();
  for (const auto& p : action.preconditions) preconditions.push_back(predicate_to_json(p));
  doc["preconditions"] = preconditions;
  Value effects = Value::array();
  for (const auto& e : action.effects) effects.push_back(Value{{"produces", e.produces}});
  doc["effects"] = effects;
  doc["metadata"] = metadata_to_json(action.metadata);
  return doc;
}

Action action_from_json(const Value& doc) {
  if (!doc.is_object()) throw ParseError("action must be a JSON object");
  Action action;
  action.id = require_string(doc, "id", "action");
  action.action_type = require_string(doc, "type", "action");
  const Value& inputs = require_field(doc, "inputs", "action");
  if (!inputs.is_object()) throw ParseError("action inputs must be an object");
  for (const auto& [name, ref] : inputs.items()) {
    action.inputs.insert(name, artifact_ref_from_json(ref));
  }
  const Value& params = require_field(doc, "parameters", "action");
  if (!params.is_object()) throw ParseError("action parameters must be an object");
  for (const auto& [name, value] : params.items()) action.parameters.insert(name, value);
  const Value& preconditions = require_field(doc, "preconditions", "action");
  if (!preconditions.is_array()) throw ParseError("action preconditions must be an array");
  for (const auto& p : preconditions) action.preconditions.push_back(predicate_from_json(p));
  const Value& effects = require_field(doc, "effects", "action");
  if (!effects.is_array()) throw ParseError("action effects must be an array");
  for (const auto& e : effects) {
    action.effects.push_back(EffectDecl{require_string(e, "produces", "effect")});
  }
  action.metadata = metadata_from_json(require_field(doc, "metadata", "action"));
  return action;
}

std::string canonical_bytes(const Action& action) {
  return canonical_dump(action_to_json(action));
}

Action parse_action(std::string_view bytes) {
  return action_from_json(canonical_parse(bytes));
}

bool operator==(const Action& a, const Action& b) {
  // Canonical bytes are injective on field values and insensitive to map
  // insertion order, which is exactly the equality the schema demands.
  return canonical_bytes(a) == canonical_bytes(b);
}

}  // namespace rlam
