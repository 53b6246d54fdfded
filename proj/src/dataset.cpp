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

#include "segjoin/dataset.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace segjoin {

DatasetError::DatasetError(const std::filesystem::path& path, const std::string& cause)
    : std::runtime_error(path.string() + ": " + cause), path_(path) {}

std::vector<Record> parse_dataset(std::string_view text) {
  std::vector<Record> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    const bool terminated = eol != std::string_view::npos;
    if (!terminated) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (terminated && !line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back({static_cast<RecordId>(out.size()), std::string(line)});
    pos = eol + 1;
  }
  return out;
}

std::vector<Record> load_dataset(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) throw DatasetError(path, "no such file");
  if (std::filesystem::is_directory(path, ec)) throw DatasetError(path, "is a directory");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError(path, std::strerror(errno));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw DatasetError(path, "read failed");
  return parse_dataset(buffer.view());
}

void write_dataset(const std::filesystem::path& path, std::span<const Record> records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DatasetError(path, std::strerror(errno));
  for (const Record& r : records) out << r.content << '\n';
  out.flush();
  if (!out) throw DatasetError(path, "write failed");
}

std::vector<Record> generate_dataset(const GeneratorOptions& options) {
  if (options.min_length < 0 || options.max_length < options.min_length ||
      options.alphabet < 1 || options.alphabet > 26) {
    throw std::invalid_argument("invalid generator options");
  }
  // Modulo reduction instead of std::uniform_int_distribution keeps the
  // output identical across standard libraries.
  std::mt19937_64 rng(options.seed);
  auto below = [&](std::uint64_t n) { return rng() % n; };
  auto letter = [&] { return static_cast<char>('a' + below(options.alphabet)); };
  const auto span = static_cast<std::uint64_t>(options.max_length - options.min_length + 1);
  const auto per_mille = static_cast<std::uint64_t>(options.near_duplicate_rate * 1000.0);

  std::vector<Record> out;
  out.reserve(options.count);
  for (std::size_t n = 0; n < options.count; ++n) {
    std::string s;
    if (!out.empty() && below(1000) < per_mille) {
      s = out[below(out.size())].content;
      const int edits = 1 + static_cast<int>(below(std::max(options.max_edits, 1)));
      for (int e = 0; e < edits; ++e) {
        const auto kind = below(3);
        const int len = static_cast<int>(s.size());
        if (kind == 0 && len > 0) {
          s[below(len)] = letter();
        } else if (kind == 1 && len < options.max_length) {
          s.insert(s.begin() + static_cast<std::ptrdiff_t>(below(len + 1)), letter());
        } else if (kind == 2 && len > options.min_length) {
          s.erase(s.begin() + static_cast<std::ptrdiff_t>(below(len)));
        }
      }
    } else {
      const auto len = static_cast<std::size_t>(options.min_length) + below(span);
      s.resize(len);
      for (char& c : s) c = letter();
    }
    out.push_back({static_cast<RecordId>(n), std::move(s)});
  }
  return out;
}

std::vector<MatchPair> brute_force_join(std::span<const Record> records, Threshold tau) {
  const int t = tau.value();
  std::vector<MatchPair> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      const Record& a = records[i];
      const Record& b = records[j];
      const auto gap = std::abs(static_cast<long>(a.content.size()) -
                                static_cast<long>(b.content.size()));
      if (gap > t) continue;
      const int d = edit_distance(a.content, b.content);
      if (d <= t) out.push_back({std::min(a.id, b.id), std::max(a.id, b.id), d});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MatchPair> brute_force_rs_join(std::span<const Record> left,
                                           std::span<const Record> right, Threshold tau) {
  const int t = tau.value();
  std::vector<MatchPair> out;
  for (const Record& a : left) {
    for (const Record& b : right) {
      const auto gap = std::abs(static_cast<long>(a.content.size()) -
                                static_cast<long>(b.content.size()));
      if (gap > t) continue;
      const int d = edit_distance(a.content, b.content);
      if (d <= t) out.push_back({a.id, b.id, d});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void write_pairs(std::ostream& out, std::span<const MatchPair> pairs) {
  for (const MatchPair& p : pairs) out << p.a << '\t' << p.b << '\t' << p.distance << '\n';
}

}  // namespace segjoin
