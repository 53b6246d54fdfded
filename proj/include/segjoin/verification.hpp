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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "segjoin/core.hpp"
#include "segjoin/partition.hpp"
#include "segjoin/segment_index.hpp"

namespace segjoin {

/// Which cells of a row are computed and when a row stops the run.
enum class BandShape {
  /// Cells that can still lie on a path of cost <= bound once the length
  /// difference of the remaining suffixes is accounted for; stop when every
  /// expected distance E(i, j) = M(i, j) + |(n - j) - (m - i)| in a row
  /// exceeds the bound.
  LengthAware,
  /// The classic |i - j| <= bound strip; stop when every M(i, j) in a row
  /// exceeds the bound.
  Classic,
};

/// Work counters of a BandedDp, accumulated over runs.
struct DpTrace {
  std::uint64_t runs = 0;
  std::uint64_t rows_computed = 0;
  std::uint64_t rows_reused = 0;
  std::uint64_t cells = 0;
  int max_row_cells = 0;
  /// Row at which the latest run stopped early, or -1 if it did not.
  int terminated_row = -1;

  void merge(const DpTrace& other);
};

/// Thresholded edit-distance DP over a diagonal band.
///
/// The column sequence, the number of rows and the bound are fixed by
/// reset(). Each run() keeps its rows, so the next run() only recomputes
/// rows past the longest common prefix with the previous row sequence.
/// Values above the bound are stored as bound + 1.
class BandedDp {
 public:
  explicit BandedDp(BandShape shape = BandShape::LengthAware) : shape_(shape) {}

  void reset(std::string_view columns, int row_count, int bound);
  /// `rows` must have exactly row_count bytes.
  Verdict run(std::string_view rows);

  int bound() const noexcept { return bound_; }
  /// Band columns per row relative to the diagonal, as [lo, hi] offsets.
  int band_lo() const noexcept { return lo_; }
  int band_hi() const noexcept { return hi_; }

  const DpTrace& trace() const noexcept { return trace_; }
  void clear_trace() noexcept { trace_ = {}; }

 private:
  BandShape shape_;
  std::string columns_;
  std::string last_rows_;
  int rows_ = 0;
  int bound_ = 0;
  int lo_ = 0;
  int hi_ = 0;
  int width_ = 0;
  bool feasible_ = false;
  int valid_rows_ = 0;
  int terminated_at_ = -1;
  std::vector<int> cells_;
  DpTrace trace_;
};

/// Length-aware banded check of ED(a, b) <= bound with expected-distance
/// early termination. Orients the shorter input along the rows. Throws
/// std::invalid_argument for a negative bound.
Verdict banded_verify(std::string_view a, std::string_view b, int bound,
                      DpTrace* trace = nullptr);

/// The |i - j| <= bound strip with row-minimum pruning; the baseline the
/// length-aware method improves on.
Verdict classic_verify(std::string_view a, std::string_view b, int bound,
                       DpTrace* trace = nullptr);

/// Bounds for the parts left and right of a matched i-th segment.
struct SplitBudget {
  int left = 0;
  int right = 0;
};

/// left = min(i - 1, tau - right_length_gap), right = tau + 1 - i, where
/// right_length_gap = ||r_r| - |s_r||. `left` may be negative, meaning no
/// alignment on this segment fits in tau.
SplitBudget split_budget(int ordinal, Threshold tau, int right_length_gap);

/// Verifies one candidate by anchoring on the matched segment: the i-th
/// segment of `r` (at `segment_pos`, `segment_len` bytes) equals the
/// substring of `s` starting at `probe_pos`.
///
/// Within(d_l + d_r) when both parts fit their budgets. This is a check of
/// one alignment, not of ED(s, r): a similar pair can be rejected here and
/// still be found through another matched segment.
class ExtensionVerifier {
 public:
  Verdict verify(std::string_view s, std::string_view r, int ordinal, int probe_pos,
                 const Segment& segment, Threshold tau);

  const DpTrace& trace() const noexcept { return dp_.trace(); }
  void clear_trace() noexcept { dp_.clear_trace(); }

 private:
  BandedDp dp_;
};

/// Free-standing form of ExtensionVerifier::verify. Throws
/// std::invalid_argument when the segment does not actually match.
Verdict extension_verify(std::string_view s, std::string_view r, int ordinal, int probe_pos,
                         int segment_pos, int segment_len, Threshold tau,
                         DpTrace* trace = nullptr);

/// Extension verification of every string on one inverted list against a
/// fixed probe, reusing DP rows across candidates that share a prefix in
/// their left (and right) parts. Results equal per-candidate
/// ExtensionVerifier results.
class PostingListVerifier {
 public:
  void begin(std::string_view probe, int ordinal, int probe_pos, const Segment& segment,
             int indexed_length, Threshold tau);
  /// `candidate` is the whole indexed string.
  Verdict verify(std::string_view candidate);

  const DpTrace& left_trace() const noexcept { return left_.trace(); }
  const DpTrace& right_trace() const noexcept { return right_.trace(); }
  void clear_trace() noexcept {
    left_.clear_trace();
    right_.clear_trace();
  }

 private:
  BandedDp left_;
  BandedDp right_;
  int tau_ = 0;
  int left_len_ = 0;
  int right_start_ = 0;
  int left_bound_ = 0;
  int right_cap_ = 0;
};

struct VerifiedCandidate {
  RecordId id = 0;
  int distance = 0;

  friend bool operator==(const VerifiedCandidate&, const VerifiedCandidate&) = default;
};

/// Verifies the probe `s` against every candidate of the list `key`, where
/// `s` matches key.content at `probe_pos`. `contents[id]` is the indexed
/// string with that id. Returns the candidates that pass, in list order.
std::vector<VerifiedCandidate> verify_posting_list(std::string_view s, const SegmentKey& key,
                                                   std::span<const RecordId> candidates,
                                                   int probe_pos, Threshold tau,
                                                   std::span<const std::string_view> contents,
                                                   DpTrace* trace = nullptr);

}  // namespace segjoin
