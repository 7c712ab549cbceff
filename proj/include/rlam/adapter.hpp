// Copyright 2026 The rlam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rlam/canonical.hpp"
#include "rlam/ordered_map.hpp"

namespace rlam {

/// Resolved call handed to an adapter: raw input payloads (the engine has
/// already fetched content and symbolic references from the store), the
/// action's parameters, and its recorded seeds. Seeds are an adapter's only
/// permitted entropy source.
struct AdapterCall {
  const OrderedMap<std::string>& inputs;
  const OrderedMap<Value>& parameters;
  const OrderedMap<std::uint64_t>& seeds;
};

/// Thrown by adapters to report an execution failure. Partial outputs are
/// preserved in the trace alongside the failure type and error context.
class AdapterFault : public std::exception {
 public:
  AdapterFault(std::string failure_type, std::string error_context,
               OrderedMap<std::string> partial_outputs = {})
      : failure_type_(std::move(failure_type)),
        error_context_(std::move(error_context)),
        partial_outputs_(std::move(partial_outputs)) {}

  const char* what() const noexcept override { return error_context_.c_str(); }
  const std::string& failure_type() const { return failure_type_; }
  const std::string& error_context() const { return error_context_; }
  const OrderedMap<std::string>& partial_outputs() const { return partial_outputs_; }

 private:
  std::string failure_type_;
  std::string error_context_;
  OrderedMap<std::string> partial_outputs_;
};

/// The sole mediated channel through which actions produce effects.
/// Adapters declare their required inputs, parameters and seeds so the
/// engine can validate an action before dispatch, and a version string that
/// feeds the environment binding.
class Adapter {
 public:
  virtual ~Adapter() = default;

  virtual std::string version() const = 0;
  virtual std::vector<std::string> required_inputs() const { return {}; }
  virtual std::vector<std::string> required_parameters() const { return {}; }
  virtual std::vector<std::string> required_seeds() const { return {}; }

  /// Executes the call, returning output payloads keyed by output name.
  /// Throws AdapterFault on failure.
  virtual OrderedMap<std::string> execute(const AdapterCall& call) = 0;
};

/// Name-keyed adapter registry. Also the process-wide dispatch counter used
/// to prove that replay and fork-prefix reuse never invoke adapters.
class AdapterRegistry {
 public:
  /// Throws DuplicateAdapterError if the name is taken.
  void register_adapter(std::string name, std::shared_ptr<Adapter> adapter);

  const Adapter* find(std::string_view name) const;
  Adapter* find(std::string_view name);

  /// Registration order.
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

  /// Total adapter dispatches through this registry, across runs.
  std::uint64_t dispatch_count() const { return dispatch_count_; }
  void count_dispatch() { ++dispatch_count_; }

 private:
  std::vector<std::string> names_;
  OrderedMap<std::shared_ptr<Adapter>> adapters_;
  std::uint64_t dispatch_count_ = 0;
};

}  // namespace rlam
