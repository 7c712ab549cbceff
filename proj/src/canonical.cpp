// Copyright 2026 The rlam Authors
// SPDX-License-Identifier: Apache-2.0

#include "rlam/canonical.hpp"

#include "rlam/errors.hpp"

namespace rlam {

std::string canonical_dump(const Value& value) {
  // nlohmann::json keeps object members in a std::map, whose byte-wise
  // string order equals code-point order for UTF-8 keys. The conversion
  // re-sorts every nesting level.
  nlohmann::json sorted = value;
  return sorted.dump();
}

Value canonical_parse(std::string_view text) {
  try {
    return Value::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 0, e.byte);
  }
}

}  // namespace rlam
