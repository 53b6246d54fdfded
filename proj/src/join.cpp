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

#include "segjoin/join.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "segjoin/partition.hpp"
#include "segjoin/segment_index.hpp"
#include "segjoin/verification.hpp"

namespace segjoin {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int length_of(std::string_view s) { return static_cast<int>(s.size()); }

// Records in join order. Internal ordinals index both vectors.
struct SortedView {
  std::vector<std::string_view> contents;
  std::vector<RecordId> ids;

  std::size_t size() const { return contents.size(); }

  // First ordinal whose length is >= `length`.
  std::size_t lower_length(int length) const {
    return static_cast<std::size_t>(
        std::partition_point(contents.begin(), contents.end(),
                             [&](std::string_view s) { return length_of(s) < length; }) -
        contents.begin());
  }
};

std::vector<std::size_t> sort_order(std::span<const Record> records) {
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const std::string& a = records[x].content;
    const std::string& b = records[y].content;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return order;
}

SortedView make_sorted(std::span<const Record> records) {
  SortedView view;
  view.contents.reserve(records.size());
  view.ids.reserve(records.size());
  for (const std::size_t i : sort_order(records)) {
    view.contents.emplace_back(records[i].content);
    view.ids.push_back(records[i].id);
  }
  return view;
}

void require_unique_ids(std::span<const Record> records) {
  std::unordered_set<RecordId> seen;
  seen.reserve(records.size());
  for (const Record& r : records) {
    if (!seen.insert(r.id).second) {
      throw std::invalid_argument("duplicate record id " + std::to_string(r.id));
    }
  }
}

// Probes one string at a time against the length buckets of an index and
// verifies what it finds. Scratch state is per instance; one per worker.
class Prober {
 public:
  Prober(const JoinConfig& config, const SortedView& indexed)
      : config_(config),
        indexed_(indexed),
        whole_(config.verifier == VerifierKind::FullDP ? BandShape::Classic
                                                       : BandShape::LengthAware),
        matched_(indexed.size(), 0),
        verified_(indexed.size(), 0) {}

  void next_probe() {
    if (++stamp_ == 0) {
      std::fill(matched_.begin(), matched_.end(), 0);
      std::fill(verified_.begin(), verified_.end(), 0);
      stamp_ = 1;
    }
  }

  // `emit(indexed_ordinal, distance)` is called once per similar partner.
  template <class Emit>
  void probe_bucket(std::string_view s, const LengthBucket& bucket, Emit&& emit) {
    const Partition& layout = bucket.layout();
    const int probe_length = length_of(s);
    const Threshold tau = config_.tau;
    for (int i = 1; i <= layout.ordinals(); ++i) {
      const Segment& seg = layout.segment(i);
      const PositionRange range = window(config_.strategy, probe_length, layout, i, tau);
      for (int p = range.lo; p <= range.hi; ++p) {
        ++stats_.probes_generated;
        const PostingList* list = bucket.find(i, s.substr(p - 1, seg.length));
        if (list == nullptr) continue;
        stats_.candidates_seen += list->size();
        switch (config_.verifier) {
          case VerifierKind::FullDP:
          case VerifierKind::Banded:
            verify_whole(s, *list, emit);
            break;
          case VerifierKind::Extension:
            for (const RecordId id : *list) {
              if (matched_[id] == stamp_) continue;
              ++stats_.pairs_verified;
              const Verdict v = extension_.verify(s, indexed_.contents[id], i, p, seg, tau);
              if (v) accept(s, id, v.distance(), emit);
            }
            break;
          case VerifierKind::ExtensionSharePrefix:
            shared_.begin(s, i, p, seg, layout.string_length(), tau);
            for (const RecordId id : *list) {
              if (matched_[id] == stamp_) continue;
              ++stats_.pairs_verified;
              const Verdict v = shared_.verify(indexed_.contents[id]);
              if (v) accept(s, id, v.distance(), emit);
            }
            break;
        }
      }
    }
  }

  JoinStats finish() {
    DpTrace total = whole_.trace();
    total.merge(exact_.trace());
    total.merge(extension_.trace());
    total.merge(shared_.left_trace());
    total.merge(shared_.right_trace());
    stats_.dp_cells_computed = total.cells;
    return stats_;
  }

 private:
  template <class Emit>
  void verify_whole(std::string_view s, const PostingList& list, Emit& emit) {
    const int tau = config_.tau.value();
    for (const RecordId id : list) {
      // A whole-string verdict is final, so any repeat is skipped.
      if (verified_[id] == stamp_) continue;
      verified_[id] = stamp_;
      ++stats_.pairs_verified;
      std::string_view a = s;
      std::string_view b = indexed_.contents[id];
      if (a.size() > b.size()) std::swap(a, b);
      whole_.reset(b, length_of(a), tau);
      const Verdict v = whole_.run(a);
      if (v) {
        ++stats_.pairs_matched;
        emit(id, v.distance());
      }
    }
  }

  // An extension verdict bounds one alignment only; tighten it to the exact
  // distance before reporting, unless it already equals the length gap.
  template <class Emit>
  void accept(std::string_view s, RecordId id, int distance, Emit& emit) {
    matched_[id] = stamp_;
    ++stats_.pairs_matched;
    std::string_view a = s;
    std::string_view b = indexed_.contents[id];
    if (a.size() > b.size()) std::swap(a, b);
    if (distance > length_of(b) - length_of(a)) {
      exact_.reset(b, length_of(a), distance - 1);
      const Verdict v = exact_.run(a);
      if (v) distance = v.distance();
    }
    emit(id, distance);
  }

  const JoinConfig& config_;
  const SortedView& indexed_;
  BandedDp whole_;
  BandedDp exact_;
  ExtensionVerifier extension_;
  PostingListVerifier shared_;
  std::vector<std::uint32_t> matched_;
  std::vector<std::uint32_t> verified_;
  std::uint32_t stamp_ = 0;
  JoinStats stats_;
};

// Pairs (probe ordinal, indexed ordinal) where either string is short, with
// the probe side drawn from [probe_lo, probe_hi). For a self-join pass the
// same view, shorts only, and partners after the probe.
template <class Emit>
void fallback_pairs(const SortedView& probes, std::size_t probe_lo, std::size_t probe_hi,
                    const SortedView& partners, bool self, Threshold tau, DpTrace& trace,
                    Emit&& emit) {
  const int t = tau.value();
  const int short_limit = tau.segments();  // lengths below this are short
  for (std::size_t o = probe_lo; o < probe_hi; ++o) {
    const std::string_view s = probes.contents[o];
    const int len = length_of(s);
    const bool probe_short = len < short_limit;
    const int hi_len = probe_short ? len + t : std::min(len + t, short_limit - 1);
    std::size_t q = self ? o + 1 : partners.lower_length(len - t);
    const std::size_t end = partners.lower_length(hi_len + 1);
    for (; q < end; ++q) {
      const Verdict v = banded_verify(s, partners.contents[q], t, &trace);
      if (v) emit(o, q, v.distance());
    }
  }
}

}  // namespace

std::string_view to_string(VerifierKind kind) {
  switch (kind) {
    case VerifierKind::FullDP: return "dp";
    case VerifierKind::Banded: return "banded";
    case VerifierKind::Extension: return "extension";
    case VerifierKind::ExtensionSharePrefix: return "extension-share";
  }
  return "unknown";
}

std::optional<VerifierKind> parse_verifier(std::string_view name) {
  for (VerifierKind v : kAllVerifiers) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

void JoinStats::merge_counters(const JoinStats& other) {
  probes_generated += other.probes_generated;
  candidates_seen += other.candidates_seen;
  pairs_verified += other.pairs_verified;
  pairs_matched += other.pairs_matched;
  dp_cells_computed += other.dp_cells_computed;
}

std::vector<Record> sort_dataset(std::span<const Record> records) {
  std::vector<Record> out;
  out.reserve(records.size());
  for (const std::size_t i : sort_order(records)) out.push_back(records[i]);
  return out;
}

JoinResult self_join(std::span<const Record> records, const JoinConfig& config) {
  const auto start = Clock::now();
  require_unique_ids(records);
  JoinResult result;
  JoinStats& stats = result.stats;

  const SortedView view = make_sorted(records);
  stats.sort_seconds = seconds_since(start);

  const Threshold tau = config.tau;
  const int t = tau.value();
  const std::size_t first_long = view.lower_length(tau.segments());
  stats.short_strings = first_long;

  const auto probe_start = Clock::now();
  SegmentIndex index(tau);
  Prober prober(config, view);
  double index_seconds = 0;
  int current_length = -1;
  for (std::size_t o = first_long; o < view.size(); ++o) {
    const std::string_view s = view.contents[o];
    const int len = length_of(s);
    if (len != current_length) {
      index.evict_below(len - t);
      current_length = len;
    }
    prober.next_probe();
    for (int l = std::max(tau.segments(), len - t); l <= len; ++l) {
      const LengthBucket* bucket = index.bucket(l);
      if (bucket == nullptr) continue;
      prober.probe_bucket(s, *bucket, [&](RecordId partner, int distance) {
        const RecordId x = view.ids[o];
        const RecordId y = view.ids[partner];
        result.pairs.push_back({std::min(x, y), std::max(x, y), distance});
      });
    }
    const auto insert_start = Clock::now();
    index.insert(static_cast<RecordId>(o), s);
    index_seconds += seconds_since(insert_start);
    stats.max_live_lengths =
        std::max<std::uint64_t>(stats.max_live_lengths, index.live_length_count());
  }
  stats.merge_counters(prober.finish());
  stats.segments_indexed = index.segments_inserted();
  stats.index_seconds = index_seconds;
  stats.probe_seconds = seconds_since(probe_start) - index_seconds;

  const auto fallback_start = Clock::now();
  DpTrace fallback_trace;
  const std::size_t before = result.pairs.size();
  fallback_pairs(view, 0, first_long, view, true, tau, fallback_trace,
                 [&](std::size_t o, std::size_t q, int distance) {
                   const RecordId x = view.ids[o];
                   const RecordId y = view.ids[q];
                   result.pairs.push_back({std::min(x, y), std::max(x, y), distance});
                 });
  stats.pairs_matched += result.pairs.size() - before;
  stats.dp_cells_computed += fallback_trace.cells;
  stats.fallback_seconds = seconds_since(fallback_start);

  std::sort(result.pairs.begin(), result.pairs.end());
  stats.total_seconds = seconds_since(start);
  return result;
}

JoinResult rs_join(std::span<const Record> left, std::span<const Record> right,
                   const JoinConfig& config) {
  const auto start = Clock::now();
  JoinResult result;
  JoinStats& stats = result.stats;

  bool index_left = false;
  switch (config.index_side) {
    case IndexSide::Auto: index_left = left.size() > right.size(); break;
    case IndexSide::Left: index_left = true; break;
    case IndexSide::Right: index_left = false; break;
  }
  const SortedView indexed = make_sorted(index_left ? left : right);
  const SortedView probes = make_sorted(index_left ? right : left);
  stats.sort_seconds = seconds_since(start);

  auto oriented = [&](std::size_t probe_ord, std::size_t indexed_ord, int distance) {
    const RecordId p = probes.ids[probe_ord];
    const RecordId x = indexed.ids[indexed_ord];
    return index_left ? MatchPair{x, p, distance} : MatchPair{p, x, distance};
  };

  const Threshold tau = config.tau;
  const int t = tau.value();
  const auto index_start = Clock::now();
  SegmentIndex index(tau);
  const std::size_t indexed_first_long = indexed.lower_length(tau.segments());
  for (std::size_t o = indexed_first_long; o < indexed.size(); ++o) {
    index.insert(static_cast<RecordId>(o), indexed.contents[o]);
  }
  stats.segments_indexed = index.segments_inserted();
  stats.short_strings = indexed_first_long;
  stats.index_seconds = seconds_since(index_start);

  const auto probe_start = Clock::now();
  const std::size_t probe_first_long = probes.lower_length(tau.segments());
  stats.short_strings += probe_first_long;
  const std::size_t long_count = probes.size() - probe_first_long;
  const int workers = static_cast<int>(
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(config.threads, 1)), 1,
                              std::max<std::size_t>(long_count, 1)));
  // Eviction mutates the index, so only a single worker may do it.
  const bool evict = workers == 1;

  std::vector<std::vector<MatchPair>> found(workers);
  std::vector<JoinStats> worker_stats(workers);
  auto run_worker = [&](int w) {
    const std::size_t lo = probe_first_long + long_count * w / workers;
    const std::size_t hi = probe_first_long + long_count * (w + 1) / workers;
    Prober prober(config, indexed);
    int current_length = -1;
    std::uint64_t live = 0;
    for (std::size_t o = lo; o < hi; ++o) {
      const std::string_view s = probes.contents[o];
      const int len = length_of(s);
      if (evict && len != current_length) {
        index.evict_below(len - t);
        current_length = len;
      }
      live = std::max<std::uint64_t>(live, index.live_length_count());
      prober.next_probe();
      for (int l = std::max(tau.segments(), len - t); l <= len + t; ++l) {
        const LengthBucket* bucket = index.bucket(l);
        if (bucket == nullptr) continue;
        prober.probe_bucket(s, *bucket, [&](RecordId partner, int distance) {
          found[w].push_back(oriented(o, partner, distance));
        });
      }
    }
    worker_stats[w] = prober.finish();
    worker_stats[w].max_live_lengths = live;
  };
  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
  }
  for (int w = 0; w < workers; ++w) {
    stats.merge_counters(worker_stats[w]);
    stats.max_live_lengths = std::max(stats.max_live_lengths, worker_stats[w].max_live_lengths);
    result.pairs.insert(result.pairs.end(), found[w].begin(), found[w].end());
  }
  stats.probe_seconds = seconds_since(probe_start);

  const auto fallback_start = Clock::now();
  DpTrace fallback_trace;
  const std::size_t before = result.pairs.size();
  fallback_pairs(probes, 0, probes.size(), indexed, false, tau, fallback_trace,
                 [&](std::size_t o, std::size_t q, int distance) {
                   result.pairs.push_back(oriented(o, q, distance));
                 });
  stats.pairs_matched += result.pairs.size() - before;
  stats.dp_cells_computed += fallback_trace.cells;
  stats.fallback_seconds = seconds_since(fallback_start);

  std::sort(result.pairs.begin(), result.pairs.end());
  stats.total_seconds = seconds_since(start);
  return result;
}

std::vector<MatchPair> short_string_fallback(std::span<const Record> shorts,
                                             std::span<const Record> all, Threshold tau) {
  const int t = tau.value();
  const SortedView partners = make_sorted(all);
  std::unordered_set<RecordId> short_ids;
  for (const Record& r : shorts) short_ids.insert(r.id);

  std::vector<MatchPair> out;
  for (const Record& a : shorts) {
    const int len = length_of(a.content);
    const std::size_t end = partners.lower_length(len + t + 1);
    for (std::size_t q = partners.lower_length(len - t); q < end; ++q) {
      const RecordId b = partners.ids[q];
      if (b == a.id) continue;
      // A short-short pair is seen from both ends; keep one.
      if (short_ids.contains(b) && b < a.id) continue;
      const Verdict v = banded_verify(a.content, partners.contents[q], t);
      if (v) out.push_back({std::min(a.id, b), std::max(a.id, b), v.distance()});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace segjoin
