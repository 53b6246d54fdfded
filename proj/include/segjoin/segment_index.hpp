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

#include <cstddef>
#include <map>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "segjoin/core.hpp"
#include "segjoin/partition.hpp"

namespace segjoin {

/// Ids of indexed strings sharing one segment, in insertion order. The join
/// inserts in (length, byte-lexicographic) order, so lists come out sorted.
using PostingList = std::vector<RecordId>;

/// Identifies one inverted list: the i-th segment `content` of strings of
/// length `length`.
struct SegmentKey {
  int length = 0;
  int ordinal = 1;
  std::string_view content;
};

/// Inverted lists for all strings of one length: one hash map per ordinal.
class LengthBucket {
 public:
  LengthBucket(int length, Threshold tau);

  const Partition& layout() const noexcept { return layout_; }
  int length() const noexcept { return layout_.string_length(); }
  std::size_t record_count() const noexcept { return records_; }

  /// Returns nullptr when the segment is absent.
  const PostingList* find(int ordinal, std::string_view content) const;

  void insert(RecordId id, std::string_view content);

 private:
  Partition layout_;
  std::vector<std::unordered_map<std::string_view, PostingList>> lists_;
  std::size_t records_ = 0;
};

/// The family of segment inverted lists, bucketed by string length.
///
/// Keys are views into the inserted contents: the caller keeps every
/// inserted string alive and unmodified for the lifetime of the index.
/// Single writer; a fully built index can be read concurrently.
class SegmentIndex {
 public:
  explicit SegmentIndex(Threshold tau) : tau_(tau) {}

  Threshold threshold() const noexcept { return tau_; }

  /// Appends all tau+1 segments of `content` to their lists. Throws
  /// std::invalid_argument if the content is shorter than tau+1.
  void insert(RecordId id, std::string_view content);
  void insert(const Record& rec) { insert(rec.id, rec.content); }

  /// Exact-match lookup; an empty list when the key is absent.
  const PostingList& lookup(const SegmentKey& key) const;

  const LengthBucket* bucket(int length) const;

  /// Drops every length bucket below `min_length`. Returns the number of
  /// segments released.
  std::size_t evict_below(int min_length);

  std::vector<int> live_lengths() const;
  std::size_t live_length_count() const noexcept { return buckets_.size(); }

  /// Segments currently retained: (tau+1) x retained strings.
  std::size_t segment_count() const noexcept { return retained_segments_; }
  /// Segments ever inserted, unaffected by eviction.
  std::size_t segments_inserted() const noexcept { return inserted_segments_; }
  std::size_t record_count() const noexcept {
    return retained_segments_ / static_cast<std::size_t>(tau_.segments());
  }

 private:
  Threshold tau_;
  std::map<int, LengthBucket> buckets_;
  std::size_t retained_segments_ = 0;
  std::size_t inserted_segments_ = 0;
};

}  // namespace segjoin
