// Copyright 2026 The rlam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rlam {

/// Insertion-ordered string-keyed map. Canonical serialization sorts keys,
/// so lookup stays linear; maps in this codebase hold a handful of entries.
template <typename T>
class OrderedMap {
 public:
  using value_type = std::pair<std::string, T>;
  using const_iterator = typename std::vector<value_type>::const_iterator;

  OrderedMap() = default;
  OrderedMap(std::initializer_list<value_type> items) : items_(items) {}

  /// Inserts a new entry; returns false (and leaves the map unchanged) if
  /// the key is already present.
  bool insert(std::string key, T value) {
    if (contains(key)) return false;
    items_.emplace_back(std::move(key), std::move(value));
    return true;
  }

  /// Inserts or overwrites.
  void set(std::string key, T value) {
    for (auto& item : items_) {
      if (item.first == key) {
        item.second = std::move(value);
        return;
      }
    }
    items_.emplace_back(std::move(key), std::move(value));
  }

  const T* find(std::string_view key) const {
    for (const auto& item : items_) {
      if (item.first == key) return &item.second;
    }
    return nullptr;
  }

  bool contains(std::string_view key) const { return find(key) != nullptr; }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  void clear() { items_.clear(); }

  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }

  const std::vector<value_type>& items() const { return items_; }

  friend bool operator==(const OrderedMap& a, const OrderedMap& b) = default;

 private:
  std::vector<value_type> items_;
};

}  // namespace rlam
