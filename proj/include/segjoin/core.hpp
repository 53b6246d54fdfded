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
#include <string>
#include <string_view>

namespace segjoin {

using RecordId = std::uint32_t;

/// One input string. The content is an opaque byte sequence: no
/// normalization is applied and an edit operation acts on a single byte.
struct Record {
  RecordId id = 0;
  std::string content;
};

/// Edit-distance threshold: the largest number of edit operations that
/// still makes two strings similar. Always non-negative.
class Threshold {
 public:
  Threshold() = default;
  explicit Threshold(int tau);

  int value() const noexcept { return tau_; }
  /// Number of segments an indexed string is split into.
  int segments() const noexcept { return tau_ + 1; }

  friend bool operator==(Threshold, Threshold) = default;

 private:
  int tau_ = 0;
};

/// Outcome of a bounded distance check. Within carries the exact distance,
/// which never exceeds the bound the check ran with. Exceeds carries that
/// bound and means the true distance is strictly larger.
class Verdict {
 public:
  static Verdict within(int distance) { return Verdict(true, distance); }
  static Verdict exceeds(int bound) { return Verdict(false, bound); }

  bool is_within() const noexcept { return within_; }
  explicit operator bool() const noexcept { return within_; }

  // Only meaningful for the matching state.
  int distance() const noexcept { return value_; }
  int bound() const noexcept { return value_; }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  Verdict(bool within, int value) : within_(within), value_(value) {}

  bool within_ = false;
  int value_ = 0;
};

/// Unit-cost Levenshtein distance by the unrestricted dynamic program.
/// O(|a|·|b|) time, O(min(|a|,|b|)) space. This is the ground truth every
/// bounded verifier is checked against.
int edit_distance(std::string_view a, std::string_view b);

}  // namespace segjoin
