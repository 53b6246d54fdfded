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

#include "segjoin/selection.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace segjoin {
namespace {

void check_lengths(int probe_length, int indexed_length, Threshold tau) {
  const int tau_v = tau.value();
  if (indexed_length < tau.segments() || std::abs(probe_length - indexed_length) > tau_v) {
    throw std::invalid_argument("selection window undefined for |s|=" +
                                std::to_string(probe_length) + ", l=" +
                                std::to_string(indexed_length) + ", tau=" +
                                std::to_string(tau_v));
  }
}

}  // namespace

std::string_view to_string(SelectionStrategy strategy) {
  switch (strategy) {
    case SelectionStrategy::Length: return "length";
    case SelectionStrategy::Shift: return "shift";
    case SelectionStrategy::Position: return "position";
    case SelectionStrategy::MultiMatch: return "multimatch";
  }
  return "unknown";
}

std::optional<SelectionStrategy> parse_strategy(std::string_view name) {
  for (SelectionStrategy s : kAllStrategies) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

PositionRange raw_window(SelectionStrategy strategy, int probe_length, const Partition& layout,
                         int ordinal, Threshold tau) {
  check_lengths(probe_length, layout.string_length(), tau);
  const int t = tau.value();
  const int delta = probe_length - layout.string_length();
  const Segment& seg = layout.segment(ordinal);
  const int p = seg.start;
  switch (strategy) {
    case SelectionStrategy::Length:
      return {1, probe_length - seg.length + 1};
    case SelectionStrategy::Shift:
      return {p - t, p + t};
    case SelectionStrategy::Position:
      // |delta| <= tau keeps both numerators non-negative.
      return {p - (t - delta) / 2, p + (t + delta) / 2};
    case SelectionStrategy::MultiMatch: {
      const int left_slack = ordinal - 1;
      const int right_slack = t + 1 - ordinal;
      return {std::max(p - left_slack, p + delta - right_slack),
              std::min(p + left_slack, p + delta + right_slack)};
    }
  }
  throw std::invalid_argument("unknown selection strategy");
}

PositionRange window(SelectionStrategy strategy, int probe_length, const Partition& layout,
                     int ordinal, Threshold tau) {
  PositionRange r = raw_window(strategy, probe_length, layout, ordinal, tau);
  r.lo = std::max(r.lo, 1);
  r.hi = std::min(r.hi, probe_length - layout.segment(ordinal).length + 1);
  return r;
}

PositionRange window(SelectionStrategy strategy, int probe_length, int indexed_length,
                     int ordinal, Threshold tau) {
  check_lengths(probe_length, indexed_length, tau);
  return window(strategy, probe_length, Partition(indexed_length, tau), ordinal, tau);
}

std::vector<Probe> enumerate_probes(std::string_view s, int indexed_length, Threshold tau,
                                    SelectionStrategy strategy) {
  const int probe_length = static_cast<int>(s.size());
  check_lengths(probe_length, indexed_length, tau);
  const Partition layout(indexed_length, tau);
  std::vector<Probe> out;
  for (int i = 1; i <= layout.ordinals(); ++i) {
    const PositionRange r = window(strategy, probe_length, layout, i, tau);
    const int len = layout.segment(i).length;
    for (int p = r.lo; p <= r.hi; ++p) out.push_back({i, p, s.substr(p - 1, len)});
  }
  return out;
}

std::int64_t selection_count(SelectionStrategy strategy, int probe_length, int indexed_length,
                             Threshold tau) {
  check_lengths(probe_length, indexed_length, tau);
  const Partition layout(indexed_length, tau);
  std::int64_t total = 0;
  for (int i = 1; i <= layout.ordinals(); ++i) {
    total += window(strategy, probe_length, layout, i, tau).size();
  }
  return total;
}

std::int64_t closed_form_count(SelectionStrategy strategy, int probe_length, int indexed_length,
                               Threshold tau) {
  check_lengths(probe_length, indexed_length, tau);
  const std::int64_t t = tau.value();
  const std::int64_t delta = probe_length - indexed_length;
  switch (strategy) {
    case SelectionStrategy::Length: return (t + 1) * (probe_length + 1) - indexed_length;
    case SelectionStrategy::Shift: return (t + 1) * (2 * t + 1);
    case SelectionStrategy::Position: return (t + 1) * (t + 1);
    case SelectionStrategy::MultiMatch: return (t * t - delta * delta) / 2 + t + 1;
  }
  throw std::invalid_argument("unknown selection strategy");
}

}  // namespace segjoin
