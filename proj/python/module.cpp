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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "segjoin/core.hpp"
#include "segjoin/dataset.hpp"
#include "segjoin/join.hpp"
#include "segjoin/partition.hpp"
#include "segjoin/selection.hpp"
#include "segjoin/verification.hpp"

namespace py = pybind11;

namespace segjoin {
namespace {

using PairTuple = std::tuple<RecordId, RecordId, int>;

SelectionStrategy strategy_arg(const std::string& name) {
  if (const auto s = parse_strategy(name)) return *s;
  throw py::value_error("unknown selector: " + name);
}

VerifierKind verifier_arg(const std::string& name) {
  if (const auto v = parse_verifier(name)) return *v;
  throw py::value_error("unknown verifier: " + name);
}

IndexSide side_arg(const std::string& name) {
  if (name == "auto") return IndexSide::Auto;
  if (name == "left") return IndexSide::Left;
  if (name == "right") return IndexSide::Right;
  throw py::value_error("unknown index side: " + name);
}

std::vector<Record> to_records(const std::vector<std::string>& strings) {
  std::vector<Record> out;
  out.reserve(strings.size());
  for (std::size_t i = 0; i < strings.size(); ++i) {
    out.push_back({static_cast<RecordId>(i), strings[i]});
  }
  return out;
}

std::vector<PairTuple> to_tuples(const std::vector<MatchPair>& pairs) {
  std::vector<PairTuple> out;
  out.reserve(pairs.size());
  for (const MatchPair& p : pairs) out.emplace_back(p.a, p.b, p.distance);
  return out;
}

py::dict stats_dict(const JoinStats& s) {
  py::dict d;
  d["probes_generated"] = s.probes_generated;
  d["candidates_seen"] = s.candidates_seen;
  d["pairs_verified"] = s.pairs_verified;
  d["pairs_matched"] = s.pairs_matched;
  d["segments_indexed"] = s.segments_indexed;
  d["dp_cells_computed"] = s.dp_cells_computed;
  d["short_strings"] = s.short_strings;
  d["max_live_lengths"] = s.max_live_lengths;
  d["sort_seconds"] = s.sort_seconds;
  d["index_seconds"] = s.index_seconds;
  d["probe_seconds"] = s.probe_seconds;
  d["fallback_seconds"] = s.fallback_seconds;
  d["total_seconds"] = s.total_seconds;
  return d;
}

py::object join_output(const JoinResult& r, bool with_stats) {
  py::list pairs = py::cast(to_tuples(r.pairs));
  if (!with_stats) return std::move(pairs);
  return py::make_tuple(pairs, stats_dict(r.stats));
}

}  // namespace
}  // namespace segjoin

PYBIND11_MODULE(_segjoin, m) {
  using namespace segjoin;
  m.doc() = "Edit-distance similarity joins over a segment index";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DatasetError& e) {
      PyErr_SetString(PyExc_OSError, e.what());
    }
  });

  m.def("edit_distance", [](const std::string& a, const std::string& b) {
    return edit_distance(a, b);
  }, py::arg("a"), py::arg("b"));

  m.def("partition", [](int length, int tau) {
    const Partition layout(length, Threshold(tau));
    std::vector<std::pair<int, int>> out;
    for (const Segment& s : layout.segments()) {
      out.emplace_back(s.start, s.length);
    }
    return out;
  }, py::arg("length"), py::arg("tau"),
     "(start, length) of each segment, 1-based.");

  m.def("split_segments", [](const std::string& s, int tau) {
    std::vector<py::bytes> out;
    for (const std::string_view v : split_segments(s, Threshold(tau))) {
      out.emplace_back(std::string(v));
    }
    return out;
  }, py::arg("s"), py::arg("tau"));

  m.def("window", [](const std::string& strategy, int probe_length, int indexed_length,
                     int ordinal, int tau) {
    const PositionRange r =
        window(strategy_arg(strategy), probe_length, indexed_length, ordinal, Threshold(tau));
    return std::make_pair(r.lo, r.hi);
  }, py::arg("strategy"), py::arg("probe_length"), py::arg("indexed_length"),
     py::arg("ordinal"), py::arg("tau"));

  m.def("selection_count", [](const std::string& strategy, int probe_length,
                              int indexed_length, int tau) {
    return selection_count(strategy_arg(strategy), probe_length, indexed_length, Threshold(tau));
  }, py::arg("strategy"), py::arg("probe_length"), py::arg("indexed_length"), py::arg("tau"));

  m.def("closed_form_count", [](const std::string& strategy, int probe_length,
                                int indexed_length, int tau) {
    return closed_form_count(strategy_arg(strategy), probe_length, indexed_length,
                             Threshold(tau));
  }, py::arg("strategy"), py::arg("probe_length"), py::arg("indexed_length"), py::arg("tau"));

  m.def("banded_verify", [](const std::string& a, const std::string& b,
                            int bound) -> std::optional<int> {
    const Verdict v = banded_verify(a, b, bound);
    if (v) return v.distance();
    return std::nullopt;
  }, py::arg("a"), py::arg("b"), py::arg("bound"),
     "Edit distance if it is at most bound, else None.");

  m.def("self_join", [](const std::vector<std::string>& strings, int tau,
                        const std::string& selector, const std::string& verifier,
                        bool with_stats) {
    JoinConfig c;
    c.tau = Threshold(tau);
    c.strategy = strategy_arg(selector);
    c.verifier = verifier_arg(verifier);
    const std::vector<Record> records = to_records(strings);
    JoinResult r;
    {
      py::gil_scoped_release release;
      r = self_join(records, c);
    }
    return join_output(r, with_stats);
  }, py::arg("strings"), py::arg("tau"), py::arg("selector") = "multimatch",
     py::arg("verifier") = "extension-share", py::arg("with_stats") = false,
     "Pairs (i, j, distance) with i < j indexing `strings`.");

  m.def("rs_join", [](const std::vector<std::string>& left,
                      const std::vector<std::string>& right, int tau,
                      const std::string& selector, const std::string& verifier,
                      const std::string& index_side, int threads, bool with_stats) {
    JoinConfig c;
    c.tau = Threshold(tau);
    c.strategy = strategy_arg(selector);
    c.verifier = verifier_arg(verifier);
    c.mode = JoinMode::RSJoin;
    c.index_side = side_arg(index_side);
    c.threads = threads;
    const std::vector<Record> l = to_records(left);
    const std::vector<Record> r = to_records(right);
    JoinResult result;
    {
      py::gil_scoped_release release;
      result = rs_join(l, r, c);
    }
    return join_output(result, with_stats);
  }, py::arg("left"), py::arg("right"), py::arg("tau"), py::arg("selector") = "multimatch",
     py::arg("verifier") = "extension-share", py::arg("index_side") = "auto",
     py::arg("threads") = 1, py::arg("with_stats") = false);

  m.def("brute_force_join", [](const std::vector<std::string>& strings, int tau) {
    const std::vector<Record> records = to_records(strings);
    return to_tuples(brute_force_join(records, Threshold(tau)));
  }, py::arg("strings"), py::arg("tau"));

  m.def("load_dataset", [](const std::string& path) {
    std::vector<py::bytes> out;
    for (const Record& r : load_dataset(path)) out.emplace_back(r.content);
    return out;
  }, py::arg("path"), "One bytes object per line.");

  m.def("generate", [](std::size_t count, std::uint64_t seed, int min_length, int max_length,
                       int alphabet, double near_duplicate_rate) {
    GeneratorOptions g;
    g.count = count;
    g.seed = seed;
    g.min_length = min_length;
    g.max_length = max_length;
    g.alphabet = alphabet;
    g.near_duplicate_rate = near_duplicate_rate;
    std::vector<std::string> out;
    for (Record& r : generate_dataset(g)) out.push_back(std::move(r.content));
    return out;
  }, py::arg("count"), py::arg("seed") = 1, py::arg("min_length") = 8,
     py::arg("max_length") = 40, py::arg("alphabet") = 26,
     py::arg("near_duplicate_rate") = 0.25);
}
