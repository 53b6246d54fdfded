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
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "segjoin/core.hpp"
#include "segjoin/selection.hpp"

namespace segjoin {

/// How candidate pairs are confirmed.
enum class VerifierKind {
  FullDP,                ///< classic |i-j| <= tau strip, whole strings
  Banded,                ///< length-aware band + expected-distance cutoff, whole strings
  Extension,             ///< split around the matched segment
  ExtensionSharePrefix,  ///< Extension, reusing DP rows along a posting list
};

inline constexpr std::array<VerifierKind, 4> kAllVerifiers = {
    VerifierKind::FullDP, VerifierKind::Banded, VerifierKind::Extension,
    VerifierKind::ExtensionSharePrefix};

std::string_view to_string(VerifierKind kind);
std::optional<VerifierKind> parse_verifier(std::string_view name);

enum class JoinMode { SelfJoin, RSJoin };

/// Which input of an R x S join is indexed. Auto picks the larger one.
enum class IndexSide { Auto, Left, Right };

struct JoinConfig {
  Threshold tau;
  SelectionStrategy strategy = SelectionStrategy::MultiMatch;
  VerifierKind verifier = VerifierKind::ExtensionSharePrefix;
  JoinMode mode = JoinMode::SelfJoin;
  IndexSide index_side = IndexSide::Auto;
  /// Probe workers for R x S joins; self-joins are always sequential.
  int threads = 1;
};

/// One similar pair. Self-joins report a < b; R x S joins report
/// (left id, right id).
struct MatchPair {
  RecordId a = 0;
  RecordId b = 0;
  int distance = 0;

  friend auto operator<=>(const MatchPair&, const MatchPair&) = default;
};

struct JoinStats {
  std::uint64_t probes_generated = 0;
  std::uint64_t candidates_seen = 0;
  std::uint64_t pairs_verified = 0;
  std::uint64_t pairs_matched = 0;
  std::uint64_t segments_indexed = 0;
  std::uint64_t dp_cells_computed = 0;
  std::uint64_t short_strings = 0;
  std::uint64_t max_live_lengths = 0;
  double sort_seconds = 0;
  double index_seconds = 0;
  double probe_seconds = 0;
  double fallback_seconds = 0;
  double total_seconds = 0;

  void merge_counters(const JoinStats& other);
};

struct JoinResult {
  /// Sorted ascending, no duplicates.
  std::vector<MatchPair> pairs;
  JoinStats stats;
};

/// Stable sort by (length, byte-lexicographic content).
std::vector<Record> sort_dataset(std::span<const Record> records);

/// All pairs of distinct records within tau. Ids must be unique; throws
/// std::invalid_argument otherwise.
JoinResult self_join(std::span<const Record> records, const JoinConfig& config);

/// All (l, r) in left x right within tau.
JoinResult rs_join(std::span<const Record> left, std::span<const Record> right,
                   const JoinConfig& config);

/// Pairs involving a string too short to partition (length < tau+1),
/// checked directly with banded_verify under the length filter. `all`
/// contains the shorts as well; each unordered pair is reported once with
/// a < b.
std::vector<MatchPair> short_string_fallback(std::span<const Record> shorts,
                                             std::span<const Record> all, Threshold tau);

}  // namespace segjoin
