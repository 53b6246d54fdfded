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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "reference.hpp"
#include "segjoin/dataset.hpp"
#include "segjoin/join.hpp"
#include "segjoin/partition.hpp"
#include "segjoin/selection.hpp"
#include "segjoin/verification.hpp"

namespace segjoin {
namespace {

using S = SelectionStrategy;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

JoinConfig make_config(int tau, S s, VerifierKind v) {
  JoinConfig c;
  c.tau = Threshold(tau);
  c.strategy = s;
  c.verifier = v;
  return c;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double median_join_seconds(const std::vector<Record>& records, const JoinConfig& c, int runs) {
  std::vector<double> t;
  for (int i = 0; i < runs; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    const JoinResult r = self_join(records, c);
    t.push_back(seconds_since(t0));
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

Outcome oracle_equivalence() {
  Outcome o;
  int joins = 0;
  for (int d = 0; d < 20; ++d) {
    GeneratorOptions g;
    g.seed = 1000 + d;
    g.count = 2000;
    g.min_length = 8;
    g.max_length = 40;
    g.alphabet = d % 2 == 0 ? 4 : 26;
    const std::vector<Record> records = generate_dataset(g);
    const std::vector<MatchPair> widest = brute_force_join(records, Threshold(4));
    for (int tau = 0; tau <= 4; ++tau) {
      std::vector<MatchPair> truth;
      for (const MatchPair& p : widest) {
        if (p.distance <= tau) truth.push_back(p);
      }
      for (S s : kAllStrategies) {
        for (VerifierKind v : kAllVerifiers) {
          ++joins;
          if (self_join(records, make_config(tau, s, v)).pairs != truth) {
            o.fail("dataset " + std::to_string(d) + " tau " + std::to_string(tau) + " " +
                   std::string(to_string(s)) + "/" + std::string(to_string(v)));
          }
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(joins) + " joins equal to brute force";
  return o;
}

Outcome worked_examples() {
  Outcome o;
  using V = std::vector<std::string_view>;
  if (split_segments("vankatesh", Threshold(3)) != V{"va", "nk", "at", "esh"}) {
    o.fail("(a) partition of vankatesh");
  }
  const Threshold t3(3);
  const std::vector<PositionRange> mm_windows = {{1, 1}, {2, 4}, {5, 7}, {8, 8}};
  for (int i = 1; i <= 4; ++i) {
    if (window(S::MultiMatch, 10, 9, i, t3) != mm_windows[i - 1]) o.fail("(b) window " + std::to_string(i));
  }
  V probes;
  for (const Probe& p : enumerate_probes("avataresha", 9, t3, S::MultiMatch)) {
    probes.push_back(p.content);
  }
  if (probes != V{"av", "va", "at", "ta", "ar", "re", "es", "sha"}) o.fail("(b) probes");
  if (selection_count(S::Position, 10, 9, t3) != 14) o.fail("(c) position total");
  if (closed_form_count(S::Shift, 10, 9, t3) != 28) o.fail("(c) shift total");
  if (edit_distance("kaushic chaduri", "kaushuk chadhui") != 4 ||
      testing::reference_distance("kaushic chaduri", "kaushuk chadhui") != 4) {
    o.fail("(d) edit distance");
  }
  const auto names = testing::make_records(testing::sample_names());
  for (S s : kAllStrategies) {
    for (VerifierKind v : kAllVerifiers) {
      const JoinResult r = self_join(names, make_config(3, s, v));
      if (r.pairs.size() != 1 || names[r.pairs[0].a].content != "caushik chakrabar" ||
          names[r.pairs[0].b].content != "kaushik chakrab" ||
          r.pairs[0].distance != testing::reference_distance(names[1].content, names[3].content)) {
        o.fail("(e) names self-join " + std::string(to_string(s)) + "/" +
               std::string(to_string(v)));
      }
    }
  }
  if (o.ok) o.detail = "(a)-(e) exact";
  return o;
}

Outcome count_formulas() {
  Outcome o;
  const Threshold t1(1);
  const std::int64_t expect[] = {17, 6, 4, 2};
  for (std::size_t k = 0; k < kAllStrategies.size(); ++k) {
    const S s = kAllStrategies[k];
    if (closed_form_count(s, 15, 15, t1) != expect[k]) {
      o.fail(std::string(to_string(s)) + " closed form");
    }
    if (selection_count(s, 15, 15, t1) > expect[k]) {
      o.fail(std::string(to_string(s)) + " exceeds closed form");
    }
  }
  std::int64_t cases = 0;
  for (int tau = 0; tau <= 8; ++tau) {
    for (int s_len = tau + 1; s_len <= 64; ++s_len) {
      for (int l = std::max(tau + 1, s_len - tau); l <= s_len; ++l) {
        const int delta = s_len - l;
        const std::int64_t formula = (tau * tau - delta * delta) / 2 + tau + 1;
        const Partition layout(l, Threshold(tau));
        std::int64_t brute = 0;
        for (int i = 1; i <= tau + 1; ++i) {
          brute += static_cast<std::int64_t>(
              testing::reference_positions(S::MultiMatch, s_len, l, i, tau).size());
          if (raw_window(S::MultiMatch, s_len, layout, i, Threshold(tau)) !=
              window(S::MultiMatch, s_len, layout, i, Threshold(tau))) {
            o.fail("multimatch window clamped");
          }
        }
        ++cases;
        if (selection_count(S::MultiMatch, s_len, l, Threshold(tau)) != formula || brute != formula) {
          o.fail("multimatch total s_len=" + std::to_string(s_len) + " l=" + std::to_string(l) +
                 " tau=" + std::to_string(tau));
        }
      }
    }
  }
  if (o.ok) o.detail = "17/6/4/2 and " + std::to_string(cases) + " multimatch totals";
  return o;
}

Outcome subset_chain() {
  Outcome o;
  std::int64_t checked = 0;
  for (int tau = 0; tau <= 8; ++tau) {
    for (int s_len = tau + 1; s_len <= 64; ++s_len) {
      for (int l = std::max(tau + 1, s_len - tau); l <= s_len; ++l) {
        for (int i = 1; i <= tau + 1; ++i) {
          const auto w = [&](S s) { return window(s, s_len, l, i, Threshold(tau)); };
          const PositionRange mm = w(S::MultiMatch), pos = w(S::Position), sh = w(S::Shift),
                              len = w(S::Length);
          ++checked;
          if (!pos.contains(mm) || !sh.contains(pos) || !len.contains(sh)) {
            o.fail("s_len=" + std::to_string(s_len) + " l=" + std::to_string(l) +
                   " tau=" + std::to_string(tau) + " i=" + std::to_string(i));
          }
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " windows";
  return o;
}

struct PairCase {
  std::string a;
  std::string b;
  int bound;
};

std::vector<PairCase> verification_pairs() {
  std::mt19937_64 rng(2024);
  std::vector<PairCase> out;
  out.reserve(100000);
  for (int n = 0; n < 100000; ++n) {
    const int alphabet = 2 + static_cast<int>(rng() % 25);
    std::string a = testing::random_bytes(rng, 1 + static_cast<int>(rng() % 60), alphabet);
    std::string b;
    if (rng() % 4 != 0) {
      b = testing::mutate(rng, a, static_cast<int>(rng() % 11), alphabet);
      if (b.empty()) b = a;
    } else {
      b = testing::random_bytes(rng, 1 + static_cast<int>(rng() % 60), alphabet);
    }
    out.push_back({std::move(a), std::move(b), static_cast<int>(rng() % 9)});
  }
  return out;
}

Outcome verification_equivalence(const std::vector<PairCase>& pairs) {
  Outcome o;
  std::int64_t within = 0, stopped = 0;
  for (const PairCase& c : pairs) {
    const int truth = testing::reference_distance(c.a, c.b);
    DpTrace trace;
    const Verdict v = banded_verify(c.a, c.b, c.bound, &trace);
    const Verdict expect = truth <= c.bound ? Verdict::within(truth) : Verdict::exceeds(c.bound);
    if (trace.terminated_row >= 0) ++stopped;
    if (v != expect) o.fail(c.a + " / " + c.b + " bound " + std::to_string(c.bound));
    if (expect) ++within;
  }
  if (o.ok) {
    o.detail = std::to_string(pairs.size()) + " pairs, " + std::to_string(within) + " within, " +
               std::to_string(stopped) + " stopped early";
  }
  return o;
}

Outcome cell_budget(const std::vector<PairCase>& pairs) {
  Outcome o;
  int widest = 0;
  for (const PairCase& c : pairs) {
    DpTrace trace;
    banded_verify(c.a, c.b, c.bound, &trace);
    widest = std::max(widest, trace.max_row_cells - c.bound);
    if (trace.max_row_cells > c.bound + 1) {
      o.fail(std::to_string(trace.max_row_cells) + " cells at bound " + std::to_string(c.bound));
    }
  }
  if (o.ok) o.detail = "max row cells - bound = " + std::to_string(widest);
  return o;
}

Outcome prefix_sharing() {
  Outcome o;
  std::mt19937_64 rng(77);
  int lists = 0;
  std::int64_t candidates = 0;
  while (lists < 1000) {
    const int tau = 1 + static_cast<int>(rng() % 4);
    const int alphabet = 2 + static_cast<int>(rng() % 3);
    const int len = tau + 1 + static_cast<int>(rng() % 30);
    const std::string base = testing::random_bytes(rng, len, alphabet);
    const Partition layout(len, Threshold(tau));
    const int ordinal = 1 + static_cast<int>(rng() % (tau + 1));
    const Segment& seg = layout.segment(ordinal);
    const std::string content(layout.slice(base, ordinal));
    std::vector<std::string> owned;
    const int size = 1 + static_cast<int>(rng() % 40);
    for (int n = 0; n < size; ++n) {
      std::string c = base;
      const int edits = static_cast<int>(rng() % (tau + 2));
      for (int e = 0; e < edits; ++e) {
        const int pos = static_cast<int>(rng() % len);
        if (pos + 1 < seg.start || pos + 1 >= seg.end()) {
          c[pos] = static_cast<char>('a' + rng() % alphabet);
        }
      }
      owned.push_back(std::move(c));
    }
    std::sort(owned.begin(), owned.end());
    const std::vector<std::string_view> contents(owned.begin(), owned.end());
    std::vector<RecordId> list(owned.size());
    for (RecordId i = 0; i < list.size(); ++i) list[i] = i;
    const std::string probe =
        testing::mutate(rng, base, static_cast<int>(rng() % (tau + 1)), alphabet);
    std::vector<int> positions;
    for (std::size_t p = 0; p + seg.length <= probe.size(); ++p) {
      if (std::string_view(probe).substr(p, seg.length) == content) positions.push_back(static_cast<int>(p) + 1);
    }
    if (positions.empty()) continue;
    const int probe_pos = positions[rng() % positions.size()];
    ++lists;
    candidates += static_cast<std::int64_t>(list.size());
    const auto shared = verify_posting_list(probe, {len, ordinal, content}, list, probe_pos,
                                            Threshold(tau), contents);
    std::vector<VerifiedCandidate> single;
    for (const RecordId id : list) {
      const Verdict v = extension_verify(probe, contents[id], ordinal, probe_pos, seg.start,
                                         seg.length, Threshold(tau));
      if (v) single.push_back({id, v.distance()});
    }
    if (shared != single) o.fail("list " + std::to_string(lists));
  }
  if (o.ok) o.detail = "1000 lists, " + std::to_string(candidates) + " candidates";
  return o;
}

Outcome performance_ordering() {
  Outcome o;
  GeneratorOptions g;
  g.seed = 50000;
  g.count = 50000;
  const std::vector<Record> records = generate_dataset(g);
  const double fast = median_join_seconds(
      records, make_config(2, S::MultiMatch, VerifierKind::ExtensionSharePrefix), 3);
  const double slow =
      median_join_seconds(records, make_config(2, S::Length, VerifierKind::FullDP), 3);
  if (!(fast < slow)) o.fail("multimatch+extension-share not faster");
  std::vector<std::uint64_t> seen;
  for (S s : kAllStrategies) {
    seen.push_back(
        self_join(records, make_config(2, s, VerifierKind::ExtensionSharePrefix)).stats.candidates_seen);
  }
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i] > seen[i - 1]) o.fail("candidates_seen not monotone");
  }
  if (o.ok) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "%.3fs vs %.3fs; candidates %llu >= %llu >= %llu >= %llu",
                  fast, slow, static_cast<unsigned long long>(seen[0]),
                  static_cast<unsigned long long>(seen[1]),
                  static_cast<unsigned long long>(seen[2]),
                  static_cast<unsigned long long>(seen[3]));
    o.detail = buf;
  }
  return o;
}

Outcome scalability() {
  Outcome o;
  std::vector<double> t;
  for (std::size_t n : {10000u, 20000u, 40000u}) {
    GeneratorOptions g;
    g.seed = 9;
    g.count = n;
    const std::vector<Record> records = generate_dataset(g);
    t.push_back(median_join_seconds(
        records, make_config(2, S::MultiMatch, VerifierKind::ExtensionSharePrefix), 7));
  }
  const double r1 = t[1] / t[0], r2 = t[2] / t[1];
  if (r1 > 3.0 || r2 > 3.0) o.fail("");
  char buf[200];
  std::snprintf(buf, sizeof buf, "%.4fs %.4fs %.4fs, ratios %.2f %.2f", t[0], t[1], t[2], r1, r2);
  o.detail = buf;
  return o;
}

Outcome segment_accounting() {
  Outcome o;
  GeneratorOptions g;
  g.seed = 10;
  g.count = 3000;
  g.min_length = 1;
  g.max_length = 30;
  const std::vector<Record> records = generate_dataset(g);
  for (int tau = 0; tau <= 6; ++tau) {
    std::uint64_t long_strings = 0;
    for (const Record& r : records) {
      if (static_cast<int>(r.content.size()) >= tau + 1) ++long_strings;
    }
    for (VerifierKind v : kAllVerifiers) {
      const JoinResult r = self_join(records, make_config(tau, S::MultiMatch, v));
      if (r.stats.segments_indexed != static_cast<std::uint64_t>(tau + 1) * long_strings) {
        o.fail("tau " + std::to_string(tau));
      }
    }
  }
  if (o.ok) o.detail = "tau 0-6 on lengths 1-30";
  return o;
}

}  // namespace
}  // namespace segjoin

int main() {
  using namespace segjoin;
  const std::vector<PairCase> pairs = verification_pairs();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"worked examples", worked_examples},
      {"selection count formulas", count_formulas},
      {"window subset chain", subset_chain},
      {"banded verification equivalence", [&] { return verification_equivalence(pairs); }},
      {"banded cell budget", [&] { return cell_budget(pairs); }},
      {"prefix-sharing transparency", prefix_sharing},
      {"relative performance ordering", performance_ordering},
      {"scalability shape", scalability},
      {"segment accounting", segment_accounting},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome o = criteria[k].second();
    std::printf("%s %zu %s: %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first,
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
