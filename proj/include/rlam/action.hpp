// Copyright 2026 The rlam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rlam/canonical.hpp"
#include "rlam/hash.hpp"
#include "rlam/ordered_map.hpp"

namespace rlam {

/// Parsed form of a symbolic artifact reference,
/// "@node:<node_id>/output:<output_name>". Both components are non-empty
/// and contain neither '/' nor whitespace.
struct SymbolicRef {
  std::string node_id;
  std::string output_name;

  std::string to_string() const;
  static std::optional<SymbolicRef> parse(std::string_view text);

  friend bool operator==(const SymbolicRef&, const SymbolicRef&) = default;
};

/// Reference to an action input: exactly one of an inline value, a
/// content-addressed artifact, or a symbolic reference resolved against the
/// trace at execution time. The symbolic form is kept as a raw string so
/// that malformed references survive parsing and surface as validation
/// violations rather than parse failures.
struct ArtifactRef {
  std::variant<Value, ContentHash, std::string> ref;

  static ArtifactRef inline_value(Value v) { return {std::move(v)}; }
  static ArtifactRef content(ContentHash h) { return {h}; }
  static ArtifactRef symbolic(std::string s) { return {std::move(s)}; }
  static ArtifactRef symbolic(const SymbolicRef& s) { return {s.to_string()}; }

  bool is_inline() const { return std::holds_alternative<Value>(ref); }
  bool is_content() const { return std::holds_alternative<ContentHash>(ref); }
  bool is_symbolic() const { return std::holds_alternative<std::string>(ref); }

  friend bool operator==(const ArtifactRef&, const ArtifactRef&) = default;
};

/// State constraint checked before dispatch. Closed vocabulary: artifact
/// presence, artifact absence, and parameter equality on the action itself.
struct Predicate {
  enum class Kind { ArtifactExists, ArtifactAbsent, ParamEquals };

  Kind kind = Kind::ArtifactExists;
  std::string name;
  Value value;  // ParamEquals only

  static Predicate artifact_exists(std::string name) {
    return {Kind::ArtifactExists, std::move(name), {}};
  }
  static Predicate artifact_absent(std::string name) {
    return {Kind::ArtifactAbsent, std::move(name), {}};
  }
  static Predicate param_equals(std::string name, Value v) {
    return {Kind::ParamEquals, std::move(name), std::move(v)};
  }

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

/// Declared state transition. Single supported form: Produces(output-name).
struct EffectDecl {
  std::string produces;

  friend bool operator==(const EffectDecl&, const EffectDecl&) = default;
};

/// Contextual record stamped onto every action: logical time, the
/// environment binding in force, planner identity, and every seed the
/// action's adapter may draw randomness from.
struct Metadata {
  std::uint64_t logical_timestamp = 0;
  std::string environment_id;
  Value planner_config = Value::object();
  OrderedMap<std::uint64_t> seeds;

  friend bool operator==(const Metadata&, const Metadata&) = default;
};

/// The smallest unit of executable intent. Declarative and immutable by
/// convention: engine code only ever reads a constructed Action, and no
/// field can carry executable code. Two actions with equal field values
/// have byte-identical canonical serializations.
struct Action {
  std::string id;
  std::string action_type;
  OrderedMap<ArtifactRef> inputs;
  OrderedMap<Value> parameters;
  std::vector<Predicate> preconditions;
  std::vector<EffectDecl> effects;
  Metadata metadata;

  /// Field-value equality, insensitive to map insertion order.
  friend bool operator==(const Action& a, const Action& b);
};

/// Deterministic byte serialization of an action (docs/trace-format.md).
/// Total on well-formed actions; equal actions yield equal bytes.
std::string canonical_bytes(const Action& action);

/// Inverse of canonical_bytes. Throws ParseError on malformed input.
Action parse_action(std::string_view bytes);

/// Canonical JSON tree for an action (embedded in trace nodes).
Value action_to_json(const Action& action);
Action action_from_json(const Value& doc);

/// ArtifactRef conversions shared with the trace format.
Value artifact_ref_to_json(const ArtifactRef& ref);
ArtifactRef artifact_ref_from_json(const Value& doc);

}  // namespace rlam
