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

#include "segjoin/partition.hpp"

#include <stdexcept>
#include <string>

namespace segjoin {

Partition::Partition(int length, Threshold tau) : length_(length) {
  const int count = tau.segments();
  if (length < count) {
    throw std::invalid_argument("string of length " + std::to_string(length) +
                                " cannot be split into " + std::to_string(count) +
                                " non-empty segments");
  }
  const int base = length / count;
  // The last `longer` segments get one extra byte.
  const int longer = length - base * count;
  segments_.reserve(count);
  int start = 1;
  for (int i = 0; i < count; ++i) {
    const int len = i < count - longer ? base : base + 1;
    segments_.push_back({start, len});
    start += len;
  }
}

std::vector<std::string_view> split_segments(std::string_view s, Threshold tau) {
  const Partition layout(static_cast<int>(s.size()), tau);
  std::vector<std::string_view> out;
  out.reserve(layout.ordinals());
  for (int i = 1; i <= layout.ordinals(); ++i) out.push_back(layout.slice(s, i));
  return out;
}

}  // namespace segjoin
