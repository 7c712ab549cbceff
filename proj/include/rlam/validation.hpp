// Copyright 2026 The rlam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "rlam/action.hpp"
#include "rlam/adapter.hpp"

namespace rlam {

/// One schema violation. Violations are data: validation never throws.
struct Violation {
  enum class Kind {
    UnknownActionType,
    MissingInput,
    MissingParameter,
    MissingSeed,
    MalformedSymbolicRef,
    DuplicateEffectOutput,
    PreconditionUnsatisfied,
    InvalidRecoveryTarget,
  };

  Kind kind;
  std::string subject;  // input/parameter/output name, or the offending text
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(Violation::Kind kind);

/// Result of the admission check. OK iff no violations were found.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Violation::Kind kind) const;
  std::string summary() const;
};

/// Validates an action against the adapter registry: the action type must
/// be registered, the adapter's declared required inputs/parameters/seeds
/// must be present, symbolic references must be well-formed, and effect
/// output names must be unique. Pure: equal inputs yield equal reports.
ValidationReport validate_action(const Action& action, const AdapterRegistry& registry);

}  // namespace rlam
