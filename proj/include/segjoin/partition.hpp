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

#include <span>
#include <string_view>
#include <vector>

#include "segjoin/core.hpp"

namespace segjoin {

/// A contiguous piece of a string. Positions are 1-based.
struct Segment {
  int start = 1;
  int length = 0;

  /// One past the last position covered.
  int end() const noexcept { return start + length; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Even partition of a string length into tau+1 segments whose lengths
/// differ by at most one; the longer segments come last. The layout depends
/// only on the length, so every indexed string of length l shares it.
class Partition {
 public:
  /// Throws std::invalid_argument when length < tau + 1; such strings have
  /// no valid partition and go through the short-string fallback instead.
  Partition(int length, Threshold tau);

  int string_length() const noexcept { return length_; }
  int ordinals() const noexcept { return static_cast<int>(segments_.size()); }
  std::span<const Segment> segments() const noexcept { return segments_; }

  /// `ordinal` is 1-based, in [1, tau+1].
  const Segment& segment(int ordinal) const { return segments_[ordinal - 1]; }

  /// Bytes of the given segment of `s`; `s` must have string_length() bytes.
  std::string_view slice(std::string_view s, int ordinal) const {
    const Segment& seg = segment(ordinal);
    return s.substr(seg.start - 1, seg.length);
  }

 private:
  int length_;
  std::vector<Segment> segments_;
};

inline Partition partition(int length, Threshold tau) { return Partition(length, tau); }

/// The tau+1 segment views of `s` under its even partition.
std::vector<std::string_view> split_segments(std::string_view s, Threshold tau);

}  // namespace segjoin
