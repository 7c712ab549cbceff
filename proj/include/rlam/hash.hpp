// Copyright 2026 The rlam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace rlam {

/// SHA-256 content address. Rendered as "sha-256:" followed by 64 lowercase
/// hex characters; the algorithm tag is fixed.
class ContentHash {
 public:
  static constexpr std::size_t kDigestSize = 32;
  static constexpr std::string_view kAlgorithm = "sha-256";

  ContentHash() = default;
  explicit ContentHash(std::array<std::uint8_t, kDigestSize> digest) : digest_(digest) {}

  /// Parses "sha-256:<64 lowercase hex>" or a bare 64-hex digest.
  /// Throws ParseError on anything else.
  static ContentHash parse(std::string_view text);

  const std::array<std::uint8_t, kDigestSize>& digest() const { return digest_; }

  /// 64-character lowercase hex digest.
  std::string hex() const;

  /// "sha-256:<hex>" — the form embedded in trace files.
  std::string to_string() const;

  friend auto operator<=>(const ContentHash&, const ContentHash&) = default;

 private:
  std::array<std::uint8_t, kDigestSize> digest_{};
};

/// SHA-256 of a byte string.
ContentHash sha256(std::string_view bytes);

}  // namespace rlam
