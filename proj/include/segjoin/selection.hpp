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

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "segjoin/core.hpp"
#include "segjoin/partition.hpp"

namespace segjoin {

/// How probe substrings are chosen for one inverted list. Every strategy is
/// complete; each one selects a subset of the windows of the one before it.
enum class SelectionStrategy { Length, Shift, Position, MultiMatch };

inline constexpr std::array<SelectionStrategy, 4> kAllStrategies = {
    SelectionStrategy::Length, SelectionStrategy::Shift, SelectionStrategy::Position,
    SelectionStrategy::MultiMatch};

std::string_view to_string(SelectionStrategy strategy);
std::optional<SelectionStrategy> parse_strategy(std::string_view name);

/// Inclusive range of 1-based start positions; empty when lo > hi.
struct PositionRange {
  int lo = 1;
  int hi = 0;

  bool empty() const noexcept { return lo > hi; }
  int size() const noexcept { return empty() ? 0 : hi - lo + 1; }
  bool contains(const PositionRange& other) const noexcept {
    return other.empty() || (!empty() && lo <= other.lo && other.hi <= hi);
  }

  friend bool operator==(const PositionRange&, const PositionRange&) = default;
};

/// Start-position window before clipping to the probe string's bounds.
///
/// `probe_length` is |s| and `layout` the partition of the indexed length l.
/// Requires l >= tau+1 and |(|s| - l)| <= tau; a self-join only ever asks
/// with l <= |s|, an R x S join also probes longer buckets.
PositionRange raw_window(SelectionStrategy strategy, int probe_length, const Partition& layout,
                         int ordinal, Threshold tau);

/// raw_window clipped to [1, |s| - l_i + 1]; may be empty.
PositionRange window(SelectionStrategy strategy, int probe_length, const Partition& layout,
                     int ordinal, Threshold tau);
PositionRange window(SelectionStrategy strategy, int probe_length, int indexed_length,
                     int ordinal, Threshold tau);

struct Probe {
  int ordinal = 1;
  int position = 1;
  std::string_view content;

  friend bool operator==(const Probe&, const Probe&) = default;
};

/// Selected substrings of `s` for every list of length bucket `indexed_length`,
/// ordered by (ordinal, position).
std::vector<Probe> enumerate_probes(std::string_view s, int indexed_length, Threshold tau,
                                    SelectionStrategy strategy);

/// Number of substrings actually selected (sum of clipped window sizes).
std::int64_t selection_count(SelectionStrategy strategy, int probe_length, int indexed_length,
                             Threshold tau);

/// Analytic selection size for one length bucket:
///   Length      (tau+1)(|s|+1) - l
///   Shift       (tau+1)(2 tau+1)
///   Position    (tau+1)^2
///   MultiMatch  floor((tau^2 - delta^2) / 2) + tau + 1
/// The MultiMatch value is exact whenever no window is clipped; the others
/// are upper bounds on selection_count.
std::int64_t closed_form_count(SelectionStrategy strategy, int probe_length, int indexed_length,
                               Threshold tau);

}  // namespace segjoin
