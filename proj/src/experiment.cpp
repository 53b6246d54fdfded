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

#include "segjoin/experiment.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "segjoin/dataset.hpp"

namespace segjoin {

SelectionTotals selection_totals(std::span<const Record> records, Threshold tau) {
  const int t = tau.value();
  SelectionTotals totals;
  std::vector<int> lengths;
  lengths.reserve(records.size());
  for (const Record& r : records) lengths.push_back(static_cast<int>(r.content.size()));
  std::sort(lengths.begin(), lengths.end());

  std::map<int, std::int64_t> visited;
  for (const int len : lengths) {
    if (len < tau.segments()) continue;
    for (int l = std::max(tau.segments(), len - t); l <= len; ++l) {
      const auto it = visited.find(l);
      if (it == visited.end() || it->second == 0) continue;
      ++totals.probe_buckets;
      for (std::size_t k = 0; k < kAllStrategies.size(); ++k) {
        totals.actual[k] += selection_count(kAllStrategies[k], len, l, tau);
        totals.closed_form[k] += closed_form_count(kAllStrategies[k], len, l, tau);
      }
    }
    ++visited[len];
  }
  return totals;
}

std::string to_json(const ReportRecord& report) {
  const JoinStats& s = report.stats;
  nlohmann::ordered_json doc;
  doc["dataset"] = report.dataset;
  doc["tau"] = report.tau;
  doc["selector"] = std::string(to_string(report.strategy));
  doc["verifier"] = std::string(to_string(report.verifier));
  doc["records"] = report.records;
  doc["result_pairs"] = report.result_pairs;
  doc["probes_generated"] = s.probes_generated;
  doc["candidates_seen"] = s.candidates_seen;
  doc["pairs_verified"] = s.pairs_verified;
  doc["pairs_matched"] = s.pairs_matched;
  doc["segments_indexed"] = s.segments_indexed;
  doc["dp_cells_computed"] = s.dp_cells_computed;
  doc["short_strings"] = s.short_strings;
  doc["max_live_lengths"] = s.max_live_lengths;
  doc["sort_seconds"] = s.sort_seconds;
  doc["index_seconds"] = s.index_seconds;
  doc["probe_seconds"] = s.probe_seconds;
  doc["fallback_seconds"] = s.fallback_seconds;
  doc["total_seconds"] = s.total_seconds;
  doc["probe_buckets"] = report.selection.probe_buckets;
  for (std::size_t k = 0; k < kAllStrategies.size(); ++k) {
    const std::string name(to_string(kAllStrategies[k]));
    doc["selected_" + name] = report.selection.actual[k];
    doc["closed_form_" + name] = report.selection.closed_form[k];
  }
  if (report.oracle_match) doc["oracle_match"] = *report.oracle_match;
  return doc.dump();
}

std::vector<ReportRecord> run_experiment(std::span<const Record> records,
                                         const ExperimentOptions& options) {
  std::vector<ReportRecord> out;
  for (int tau_v = options.tau_min; tau_v <= options.tau_max; ++tau_v) {
    const Threshold tau(tau_v);
    const SelectionTotals selection = selection_totals(records, tau);
    std::optional<std::vector<MatchPair>> oracle;
    if (options.oracle_check) oracle = brute_force_join(records, tau);
    for (const SelectionStrategy strategy : options.strategies) {
      for (const VerifierKind verifier : options.verifiers) {
        JoinConfig config;
        config.tau = tau;
        config.strategy = strategy;
        config.verifier = verifier;
        const JoinResult result = self_join(records, config);
        ReportRecord report;
        report.dataset = options.label;
        report.tau = tau_v;
        report.strategy = strategy;
        report.verifier = verifier;
        report.records = records.size();
        report.result_pairs = result.pairs.size();
        report.stats = result.stats;
        report.selection = selection;
        if (oracle) report.oracle_match = result.pairs == *oracle;
        out.push_back(std::move(report));
      }
    }
  }
  return out;
}

}  // namespace segjoin
