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

// Test-only oracles. Written from the definitions, independent of the
// library's code paths.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "segjoin/core.hpp"
#include "segjoin/join.hpp"
#include "segjoin/selection.hpp"

namespace segjoin::testing {

// Full (|a|+1) x (|b|+1) Levenshtein matrix.
inline int reference_distance(std::string_view a, std::string_view b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[n][m];
}

// Even-partition geometry straight from the definition: with k = len mod
// (tau+1), the last k segments are one byte longer.
struct RefSegment {
  int start;
  int length;
};

inline std::vector<RefSegment> reference_layout(int len, int tau) {
  const int count = tau + 1;
  const int k = len - (len / count) * count;
  std::vector<RefSegment> out;
  int start = 1;
  for (int i = 1; i <= count; ++i) {
    const int l = i > count - k ? (len + count - 1) / count : len / count;
    out.push_back({start, l});
    start += l;
  }
  return out;
}

// Start positions kept by a strategy, by testing each position against the
// strategy's defining constraint on the shift k = p - p_i.
inline std::vector<int> reference_positions(SelectionStrategy strategy, int s_len, int l,
                                            int ordinal, int tau) {
  const RefSegment seg = reference_layout(l, tau)[ordinal - 1];
  const int delta = s_len - l;
  std::vector<int> out;
  for (int p = 1; p + seg.length - 1 <= s_len; ++p) {
    const int k = p - seg.start;
    bool keep = false;
    switch (strategy) {
      case SelectionStrategy::Length: keep = true; break;
      case SelectionStrategy::Shift: keep = std::abs(k) <= tau; break;
      case SelectionStrategy::Position: keep = std::abs(k) + std::abs(k - delta) <= tau; break;
      case SelectionStrategy::MultiMatch:
        keep = std::abs(k) <= ordinal - 1 && std::abs(k - delta) <= tau + 1 - ordinal;
        break;
    }
    if (keep) out.push_back(p);
  }
  return out;
}

inline std::string random_bytes(std::mt19937_64& rng, int len, int alphabet) {
  std::string s(static_cast<std::size_t>(len), 'a');
  for (char& c : s) c = static_cast<char>('a' + rng() % alphabet);
  return s;
}

// Applies `edits` random single-byte edits.
inline std::string mutate(std::mt19937_64& rng, std::string s, int edits, int alphabet) {
  for (int e = 0; e < edits; ++e) {
    const auto kind = rng() % 3;
    const char c = static_cast<char>('a' + rng() % alphabet);
    if (kind == 0 && !s.empty()) {
      s[rng() % s.size()] = c;
    } else if (kind == 1 || s.empty()) {
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(rng() % (s.size() + 1)), c);
    } else {
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(rng() % s.size()));
    }
  }
  return s;
}

inline std::vector<Record> make_records(const std::vector<std::string>& strings) {
  std::vector<Record> out;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    out.push_back({static_cast<RecordId>(i), strings[i]});
  }
  return out;
}

// All pairs by the reference distance, (a < b).
inline std::vector<MatchPair> reference_self_join(const std::vector<Record>& records, int tau) {
  std::vector<MatchPair> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      const int d = reference_distance(records[i].content, records[j].content);
      if (d <= tau) {
        out.push_back({std::min(records[i].id, records[j].id),
                       std::max(records[i].id, records[j].id), d});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline const std::vector<std::string>& sample_names() {
  static const std::vector<std::string> kStrings = {
      "avataresha", "caushik chakrabar", "kaushic chaduri",
      "kaushik chakrab", "kaushuk chadhui", "vankatesh"};
  return kStrings;
}

}  // namespace segjoin::testing
