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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "segjoin/core.hpp"
#include "segjoin/join.hpp"

namespace segjoin {

/// Raised when a dataset file cannot be read or written. what() names the
/// path and the cause.
class DatasetError : public std::runtime_error {
 public:
  DatasetError(const std::filesystem::path& path, const std::string& cause);

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

/// One record per line; id = 0-based line number. Lines end at '\n'; a
/// '\r' directly before it is stripped too, so CRLF files load the same
/// as LF files. A final line without terminator is still a record, and
/// empty lines are empty records. Nothing else is trimmed.
std::vector<Record> load_dataset(const std::filesystem::path& path);

/// Parses in-memory text with the same rules as load_dataset.
std::vector<Record> parse_dataset(std::string_view text);

void write_dataset(const std::filesystem::path& path, std::span<const Record> records);

struct GeneratorOptions {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  int min_length = 8;
  int max_length = 40;
  /// Bytes are drawn from the first `alphabet` lowercase letters.
  int alphabet = 26;
  /// Probability that a string is a mutation of an earlier one instead of
  /// a fresh draw.
  double near_duplicate_rate = 0.25;
  /// A mutation applies between 1 and this many random edits.
  int max_edits = 3;
};

/// Seeded synthetic dataset. A fresh string has a uniform length in
/// [min_length, max_length] and uniform bytes; a near duplicate copies a
/// uniformly chosen earlier string and applies 1..max_edits random
/// substitutions, insertions or deletions, skipping any edit that would
/// leave the length range. Deterministic for a given option set.
std::vector<Record> generate_dataset(const GeneratorOptions& options);

/// All-pairs oracle: full DP on every pair passing the length filter.
/// Pairs are (a < b), sorted.
std::vector<MatchPair> brute_force_join(std::span<const Record> records, Threshold tau);

/// Oracle for R x S joins: (left id, right id), sorted.
std::vector<MatchPair> brute_force_rs_join(std::span<const Record> left,
                                           std::span<const Record> right, Threshold tau);

/// TSV `a<TAB>b<TAB>distance`, one pair per line.
void write_pairs(std::ostream& out, std::span<const MatchPair> pairs);

}  // namespace segjoin
