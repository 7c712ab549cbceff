// Copyright 2026 The rlam Authors
// SPDX-License-Identifier: Apache-2.0

#include "rlam/validation.hpp"

#include <unordered_set>

namespace rlam {

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::UnknownActionType: return "UnknownActionType";
    case Violation::Kind::MissingInput: return "MissingInput";
    case Violation::Kind::MissingParameter: return "MissingParameter";
    case Violation::Kind::MissingSeed: return "MissingSeed";
    case Violation::Kind::MalformedSymbolicRef: return "MalformedSymbolicRef";
    case Violation::Kind::DuplicateEffectOutput: return "DuplicateEffectOutput";
    case Violation::Kind::PreconditionUnsatisfied: return "PreconditionUnsatisfied";
    case Violation::Kind::InvalidRecoveryTarget: return "InvalidRecoveryTarget";
  }
  return "UnknownViolation";
}

bool ValidationReport::has(Violation::Kind kind) const {
  for (const auto& v : violations) {
    if (v.kind == kind) return true;
  }
  return false;
}

std::string ValidationReport::summary() const {
  if (ok()) return "OK";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += to_string(v.kind) + "(" + v.subject + "): " + v.message;
  }
  return out;
}

ValidationReport validate_action(const Action& action, const AdapterRegistry& registry) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::string subject, std::string message) {
    report.violations.push_back({kind, std::move(subject), std::move(message)});
  };

  const Adapter* adapter = registry.find(action.action_type);
  if (adapter == nullptr) {
    add(Violation::Kind::UnknownActionType, action.action_type,
        "no adapter registered for action type");
  } else {
    for (const auto& name : adapter->required_inputs()) {
      if (!action.inputs.contains(name)) {
        add(Violation::Kind::MissingInput, name, "adapter declares this input as required");
      }
    }
    for (const auto& name : adapter->required_parameters()) {
      if (!action.parameters.contains(name)) {
        add(Violation::Kind::MissingParameter, name,
            "adapter declares this parameter as required");
      }
    }
    for (const auto& name : adapter->required_seeds()) {
      if (!action.metadata.seeds.contains(name)) {
        add(Violation::Kind::MissingSeed, name,
            "adapter draws randomness from this seed");
      }
    }
  }

  for (const auto& [name, ref] : action.inputs) {
    if (ref.is_symbolic() && !SymbolicRef::parse(std::get<std::string>(ref.ref))) {
      add(Violation::Kind::MalformedSymbolicRef, name,
          "expected '@node:<id>/output:<name>', got '" +
              std::get<std::string>(ref.ref) + "'");
    }
  }

  std::unordered_set<std::string> seen_outputs;
  for (const auto& effect : action.effects) {
    if (!seen_outputs.insert(effect.produces).second) {
      add(Violation::Kind::DuplicateEffectOutput, effect.produces,
          "output name declared by more than one effect");
    }
  }

  return report;
}

}  // namespace rlam
