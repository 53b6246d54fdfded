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

#include "segjoin/verification.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace segjoin {
namespace {

int common_prefix(std::string_view a, std::string_view b) {
  const auto limit = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < limit && a[i] == b[i]) ++i;
  return static_cast<int>(i);
}

Verdict run_oriented(BandShape shape, std::string_view a, std::string_view b, int bound,
                     DpTrace* trace) {
  if (bound < 0) throw std::invalid_argument("verification bound must be non-negative");
  if (a.size() > b.size()) std::swap(a, b);
  BandedDp dp(shape);
  dp.reset(b, static_cast<int>(a.size()), bound);
  const Verdict v = dp.run(a);
  if (trace != nullptr) trace->merge(dp.trace());
  return v;
}

}  // namespace

void DpTrace::merge(const DpTrace& other) {
  runs += other.runs;
  rows_computed += other.rows_computed;
  rows_reused += other.rows_reused;
  cells += other.cells;
  max_row_cells = std::max(max_row_cells, other.max_row_cells);
  terminated_row = other.terminated_row;
}

void BandedDp::reset(std::string_view columns, int row_count, int bound) {
  columns_.assign(columns);
  last_rows_.clear();
  rows_ = row_count;
  bound_ = bound;
  valid_rows_ = 0;
  terminated_at_ = -1;
  const int n = static_cast<int>(columns.size());
  const int delta = n - row_count;
  feasible_ = bound >= 0 && std::abs(delta) <= bound;
  if (!feasible_) return;

  if (shape_ == BandShape::LengthAware) {
    const int slack = (bound - std::abs(delta)) / 2;
    lo_ = std::min(0, delta) - slack;
    hi_ = std::max(0, delta) + slack;
  } else {
    lo_ = -bound;
    hi_ = bound;
  }
  width_ = hi_ - lo_ + 1;
  const int inf = bound + 1;
  cells_.assign(static_cast<std::size_t>(rows_ + 1) * width_, inf);
  for (int k = std::max(lo_, 0); k <= std::min(hi_, n); ++k) {
    cells_[k - lo_] = std::min(k, inf);
  }
}

Verdict BandedDp::run(std::string_view rows) {
  if (static_cast<int>(rows.size()) != rows_) {
    throw std::invalid_argument("row sequence length does not match the prepared DP");
  }
  ++trace_.runs;
  trace_.terminated_row = -1;
  if (!feasible_) return Verdict::exceeds(bound_);

  const int shared = std::min(common_prefix(rows, last_rows_), valid_rows_);
  last_rows_.assign(rows);
  if (terminated_at_ >= 0 && terminated_at_ <= shared) {
    // Same prefix up to the row that already failed.
    trace_.rows_reused += terminated_at_;
    valid_rows_ = terminated_at_;
    trace_.terminated_row = terminated_at_;
    return Verdict::exceeds(bound_);
  }
  trace_.rows_reused += shared;
  valid_rows_ = shared;
  terminated_at_ = -1;

  const int n = static_cast<int>(columns_.size());
  const int m = rows_;
  const int inf = bound_ + 1;
  for (int i = shared + 1; i <= m; ++i) {
    int* cur = cells_.data() + static_cast<std::size_t>(i) * width_;
    const int* prev = cur - width_;
    std::fill(cur, cur + width_, inf);
    const int jlo = std::max(0, i + lo_);
    const int jhi = std::min(n, i + hi_);
    const char row_byte = rows[i - 1];
    bool alive = false;
    for (int j = jlo; j <= jhi; ++j) {
      const int idx = j - i - lo_;
      int v;
      if (j == 0) {
        v = i;
      } else {
        v = prev[idx] + (row_byte == columns_[j - 1] ? 0 : 1);
        if (idx + 1 < width_) v = std::min(v, prev[idx + 1] + 1);
        if (idx > 0) v = std::min(v, cur[idx - 1] + 1);
      }
      v = std::min(v, inf);
      cur[idx] = v;
      if (shape_ == BandShape::LengthAware) {
        alive = alive || v + std::abs((n - j) - (m - i)) <= bound_;
      } else {
        alive = alive || v <= bound_;
      }
    }
    const int computed = std::max(0, jhi - jlo + 1);
    trace_.cells += computed;
    trace_.max_row_cells = std::max(trace_.max_row_cells, computed);
    ++trace_.rows_computed;
    valid_rows_ = i;
    if (!alive) {
      terminated_at_ = i;
      trace_.terminated_row = i;
      return Verdict::exceeds(bound_);
    }
  }
  const int last = cells_[static_cast<std::size_t>(m) * width_ + (n - m) - lo_];
  return last <= bound_ ? Verdict::within(last) : Verdict::exceeds(bound_);
}

Verdict banded_verify(std::string_view a, std::string_view b, int bound, DpTrace* trace) {
  return run_oriented(BandShape::LengthAware, a, b, bound, trace);
}

Verdict classic_verify(std::string_view a, std::string_view b, int bound, DpTrace* trace) {
  return run_oriented(BandShape::Classic, a, b, bound, trace);
}

SplitBudget split_budget(int ordinal, Threshold tau, int right_length_gap) {
  return {std::min(ordinal - 1, tau.value() - right_length_gap), tau.value() + 1 - ordinal};
}

Verdict ExtensionVerifier::verify(std::string_view s, std::string_view r, int ordinal,
                                  int probe_pos, const Segment& segment, Threshold tau) {
  const int t = tau.value();
  const std::string_view s_left = s.substr(0, probe_pos - 1);
  const std::string_view s_right = s.substr(probe_pos - 1 + segment.length);
  const std::string_view r_left = r.substr(0, segment.start - 1);
  const std::string_view r_right = r.substr(segment.end() - 1);
  const int right_gap =
      std::abs(static_cast<int>(r_right.size()) - static_cast<int>(s_right.size()));
  const SplitBudget budget = split_budget(ordinal, tau, right_gap);
  if (budget.left < 0) return Verdict::exceeds(t);

  dp_.reset(s_left, static_cast<int>(r_left.size()), budget.left);
  const Verdict left = dp_.run(r_left);
  if (!left) return Verdict::exceeds(t);

  const int right_bound = std::min(budget.right, t - left.distance());
  if (right_bound < 0) return Verdict::exceeds(t);
  dp_.reset(s_right, static_cast<int>(r_right.size()), right_bound);
  const Verdict right = dp_.run(r_right);
  if (!right) return Verdict::exceeds(t);
  return Verdict::within(left.distance() + right.distance());
}

Verdict extension_verify(std::string_view s, std::string_view r, int ordinal, int probe_pos,
                         int segment_pos, int segment_len, Threshold tau, DpTrace* trace) {
  const auto probe_end = static_cast<std::size_t>(probe_pos - 1 + segment_len);
  const auto segment_end = static_cast<std::size_t>(segment_pos - 1 + segment_len);
  if (probe_pos < 1 || segment_pos < 1 || segment_len < 1 || ordinal < 1 ||
      ordinal > tau.segments() || probe_end > s.size() || segment_end > r.size() ||
      s.substr(probe_pos - 1, segment_len) != r.substr(segment_pos - 1, segment_len)) {
    throw std::invalid_argument("extension_verify requires a matched segment");
  }
  ExtensionVerifier verifier;
  const Verdict v =
      verifier.verify(s, r, ordinal, probe_pos, Segment{segment_pos, segment_len}, tau);
  if (trace != nullptr) trace->merge(verifier.trace());
  return v;
}

void PostingListVerifier::begin(std::string_view probe, int ordinal, int probe_pos,
                                const Segment& segment, int indexed_length, Threshold tau) {
  tau_ = tau.value();
  left_len_ = segment.start - 1;
  right_start_ = segment.end() - 1;
  const std::string_view s_left = probe.substr(0, probe_pos - 1);
  const std::string_view s_right = probe.substr(probe_pos - 1 + segment.length);
  const int right_len = indexed_length - right_start_;
  const int right_gap = std::abs(right_len - static_cast<int>(s_right.size()));
  const SplitBudget budget = split_budget(ordinal, tau, right_gap);
  left_bound_ = budget.left;
  right_cap_ = budget.right;
  // Every candidate's right bound min(cap, tau - d_l) is at most this, and
  // rows computed under a larger bound stay exact below it.
  const int left_gap = std::abs(left_len_ - static_cast<int>(s_left.size()));
  const int right_kernel_bound = std::min(right_cap_, tau_ - left_gap);
  left_.reset(s_left, left_len_, left_bound_);
  right_.reset(s_right, right_len, right_kernel_bound);
}

Verdict PostingListVerifier::verify(std::string_view candidate) {
  if (left_bound_ < 0) return Verdict::exceeds(tau_);
  const Verdict left = left_.run(candidate.substr(0, left_len_));
  if (!left) return Verdict::exceeds(tau_);
  const int right_bound = std::min(right_cap_, tau_ - left.distance());
  if (right_bound < 0) return Verdict::exceeds(tau_);
  const Verdict right = right_.run(candidate.substr(right_start_));
  if (!right || right.distance() > right_bound) return Verdict::exceeds(tau_);
  return Verdict::within(left.distance() + right.distance());
}

std::vector<VerifiedCandidate> verify_posting_list(std::string_view s, const SegmentKey& key,
                                                   std::span<const RecordId> candidates,
                                                   int probe_pos, Threshold tau,
                                                   std::span<const std::string_view> contents,
                                                   DpTrace* trace) {
  const Partition layout(key.length, tau);
  const Segment& seg = layout.segment(key.ordinal);
  if (probe_pos < 1 || static_cast<std::size_t>(probe_pos - 1 + seg.length) > s.size() ||
      s.substr(probe_pos - 1, seg.length) != key.content) {
    throw std::invalid_argument("probe substring does not match the list's segment");
  }
  PostingListVerifier verifier;
  verifier.begin(s, key.ordinal, probe_pos, seg, key.length, tau);
  std::vector<VerifiedCandidate> out;
  for (const RecordId id : candidates) {
    const Verdict v = verifier.verify(contents[id]);
    if (v) out.push_back({id, v.distance()});
  }
  if (trace != nullptr) {
    trace->merge(verifier.left_trace());
    trace->merge(verifier.right_trace());
  }
  return out;
}

}  // namespace segjoin
