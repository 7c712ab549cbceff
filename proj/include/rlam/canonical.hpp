// Copyright 2026 The rlam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

namespace rlam {

/// JSON value with insertion-ordered object members. Used for action
/// parameters, planner configuration and artifact payloads.
using Value = nlohmann::ordered_json;

/// Serializes a value under the canonical rules from docs/trace-format.md:
/// UTF-8, no insignificant whitespace, object keys sorted lexicographically
/// by code point, integers in minimal form, doubles in shortest round-trip
/// decimal form. Equal values yield identical bytes regardless of the
/// insertion order of object members.
std::string canonical_dump(const Value& value);

/// Parses one canonical document. Throws ParseError (with byte offset) on
/// malformed input.
Value canonical_parse(std::string_view text);

}  // namespace rlam
