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

#include "segjoin/segment_index.hpp"

#include <stdexcept>
#include <string>

namespace segjoin {

LengthBucket::LengthBucket(int length, Threshold tau)
    : layout_(length, tau), lists_(tau.segments()) {}

const PostingList* LengthBucket::find(int ordinal, std::string_view content) const {
  const auto& lists = lists_[ordinal - 1];
  const auto it = lists.find(content);
  return it == lists.end() ? nullptr : &it->second;
}

void LengthBucket::insert(RecordId id, std::string_view content) {
  for (int i = 1; i <= layout_.ordinals(); ++i) {
    lists_[i - 1][layout_.slice(content, i)].push_back(id);
  }
  ++records_;
}

void SegmentIndex::insert(RecordId id, std::string_view content) {
  const int length = static_cast<int>(content.size());
  if (length < tau_.segments()) {
    throw std::invalid_argument("cannot index a string of length " + std::to_string(length) +
                                " at threshold " + std::to_string(tau_.value()));
  }
  auto it = buckets_.find(length);
  if (it == buckets_.end()) it = buckets_.try_emplace(length, length, tau_).first;
  it->second.insert(id, content);
  retained_segments_ += tau_.segments();
  inserted_segments_ += tau_.segments();
}

const PostingList& SegmentIndex::lookup(const SegmentKey& key) const {
  static const PostingList kEmpty;
  if (key.ordinal < 1 || key.ordinal > tau_.segments()) return kEmpty;
  const LengthBucket* b = bucket(key.length);
  if (b == nullptr) return kEmpty;
  const PostingList* list = b->find(key.ordinal, key.content);
  return list == nullptr ? kEmpty : *list;
}

const LengthBucket* SegmentIndex::bucket(int length) const {
  const auto it = buckets_.find(length);
  return it == buckets_.end() ? nullptr : &it->second;
}

std::size_t SegmentIndex::evict_below(int min_length) {
  std::size_t released = 0;
  const auto stop = buckets_.lower_bound(min_length);
  for (auto it = buckets_.begin(); it != stop; ++it) {
    released += it->second.record_count() * static_cast<std::size_t>(tau_.segments());
  }
  buckets_.erase(buckets_.begin(), stop);
  retained_segments_ -= released;
  return released;
}

std::vector<int> SegmentIndex::live_lengths() const {
  std::vector<int> out;
  out.reserve(buckets_.size());
  for (const auto& [length, unused] : buckets_) out.push_back(length);
  return out;
}

}  // namespace segjoin
