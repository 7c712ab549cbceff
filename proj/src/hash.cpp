// Copyright 2026 The rlam Authors
// SPDX-License-Identifier: Apache-2.0

#include "rlam/hash.hpp"

#include <openssl/evp.h>

#include "rlam/errors.hpp"

namespace rlam {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

ContentHash ContentHash::parse(std::string_view text) {
  constexpr std::string_view prefix = "sha-256:";
  if (text.starts_with(prefix)) text.remove_prefix(prefix.size());
  if (text.size() != 2 * kDigestSize) {
    throw ParseError("content hash must be 64 hex characters, got " +
                     std::string(text));
  }
  std::array<std::uint8_t, kDigestSize> digest{};
  for (std::size_t i = 0; i < kDigestSize; ++i) {
    int hi = hex_nibble(text[2 * i]);
    int lo = hex_nibble(text[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw ParseError("content hash contains a non-hex character: " +
                       std::string(text));
    }
    digest[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return ContentHash(digest);
}

std::string ContentHash::hex() const {
  std::string out;
  out.reserve(2 * kDigestSize);
  for (std::uint8_t byte : digest_) {
    out.push_back(kHexDigits[byte >> 4]);
    out.push_back(kHexDigits[byte & 0x0F]);
  }
  return out;
}

std::string ContentHash::to_string() const {
  return std::string(kAlgorithm) + ":" + hex();
}

ContentHash sha256(std::string_view bytes) {
  std::array<std::uint8_t, ContentHash::kDigestSize> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(),
                 nullptr) != 1 ||
      len != ContentHash::kDigestSize) {
    throw Error("sha-256 digest computation failed");
  }
  return ContentHash(digest);
}

}  // namespace rlam
