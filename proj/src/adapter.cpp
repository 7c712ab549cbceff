// Copyright 2026 The rlam Authors
// SPDX-License-Identifier: Apache-2.0

#include "rlam/adapter.hpp"

#include "rlam/errors.hpp"

namespace rlam {

void AdapterRegistry::register_adapter(std::string name, std::shared_ptr<Adapter> adapter) {
  if (adapters_.contains(name)) {
    throw DuplicateAdapterError("adapter '" + name + "' is already registered");
  }
  names_.push_back(name);
  adapters_.insert(std::move(name), std::move(adapter));
}

const Adapter* AdapterRegistry::find(std::string_view name) const {
  const auto* entry = adapters_.find(name);
  return entry ? entry->get() : nullptr;
}

Adapter* AdapterRegistry::find(std::string_view name) {
  const auto* entry = adapters_.find(name);
  return entry ? entry->get() : nullptr;
}

}  // namespace rlam
