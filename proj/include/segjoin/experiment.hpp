// Copyright 2026 The segjoin Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "segjoin/join.hpp"
#include "segjoin/selection.hpp"

namespace segjoin {

/// Probe counts a self-join would generate under each strategy, indexed in
/// kAllStrategies order.
struct SelectionTotals {
  std::array<std::int64_t, 4> actual{};
  std::array<std::int64_t, 4> closed_form{};
  /// Number of (probe string, live length bucket) visits.
  std::int64_t probe_buckets = 0;
};

SelectionTotals selection_totals(std::span<const Record> records, Threshold tau);

struct ReportRecord {
  std::string dataset;
  int tau = 0;
  SelectionStrategy strategy = SelectionStrategy::MultiMatch;
  VerifierKind verifier = VerifierKind::ExtensionSharePrefix;
  std::size_t records = 0;
  std::size_t result_pairs = 0;
  JoinStats stats;
  SelectionTotals selection;
  std::optional<bool> oracle_match;
};

/// Flat single-line JSON object. Keys are listed in the README and stay
/// stable.
std::string to_json(const ReportRecord& report);

struct ExperimentOptions {
  std::string label = "dataset";
  int tau_min = 0;
  int tau_max = 3;
  std::vector<SelectionStrategy> strategies{kAllStrategies.begin(), kAllStrategies.end()};
  std::vector<VerifierKind> verifiers{kAllVerifiers.begin(), kAllVerifiers.end()};
  bool oracle_check = false;
};

/// Runs a self-join per (tau, strategy, verifier) and collects the counters.
std::vector<ReportRecord> run_experiment(std::span<const Record> records,
                                         const ExperimentOptions& options);

}  // namespace segjoin
