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

#include "segjoin/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <vector>

#include <CLI11.hpp>

#include "segjoin/dataset.hpp"
#include "segjoin/experiment.hpp"
#include "segjoin/join.hpp"

namespace segjoin {
namespace {

struct Options {
  std::string mode = "self";
  std::string input;
  std::string left;
  std::string right;
  int tau = -1;
  int tau_min = -1;
  std::string selector = "multimatch";
  std::string verifier = "extension-share";
  std::string index_side = "auto";
  std::string stats;
  std::string output;
  bool oracle_check = false;
  bool experiment = false;
  int threads = 1;
  GeneratorOptions gen;
  std::size_t gen_count = 0;
  std::string gen_output;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
std::map<std::string, T> name_map(auto all, auto namer) {
  std::map<std::string, T> m;
  for (const T v : all) m.emplace(std::string(namer(v)), v);
  return m;
}

std::vector<Record> input_records(const Options& opt) {
  if (opt.gen_count > 0) {
    GeneratorOptions g = opt.gen;
    g.count = opt.gen_count;
    std::vector<Record> records = generate_dataset(g);
    if (!opt.gen_output.empty()) write_dataset(opt.gen_output, records);
    return records;
  }
  if (opt.input.empty()) throw UsageError("--input PATH or --gen COUNT is required");
  return load_dataset(opt.input);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw DatasetError(path, "cannot open for writing");
  f << text;
  if (!f) throw DatasetError(path, "write failed");
}

int execute(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto strategies = name_map<SelectionStrategy>(
      kAllStrategies, [](SelectionStrategy s) { return to_string(s); });
  const auto verifiers =
      name_map<VerifierKind>(kAllVerifiers, [](VerifierKind v) { return to_string(v); });

  JoinConfig config;
  config.tau = Threshold(opt.tau);
  config.strategy = strategies.at(opt.selector);
  config.verifier = verifiers.at(opt.verifier);
  config.threads = opt.threads;
  config.index_side = opt.index_side == "left"    ? IndexSide::Left
                      : opt.index_side == "right" ? IndexSide::Right
                                                  : IndexSide::Auto;

  if (opt.experiment) {
    if (opt.mode != "self") throw UsageError("--experiment runs self-joins only");
    const std::vector<Record> records = input_records(opt);
    ExperimentOptions eo;
    eo.label = opt.gen_count > 0 ? "synthetic" : opt.input;
    eo.tau_min = opt.tau_min >= 0 ? opt.tau_min : opt.tau;
    eo.tau_max = opt.tau;
    if (eo.tau_min > eo.tau_max) throw UsageError("--tau-min must not exceed --tau");
    eo.oracle_check = opt.oracle_check;
    std::string lines;
    bool all_match = true;
    for (const ReportRecord& r : run_experiment(records, eo)) {
      lines += to_json(r) + '\n';
      all_match = all_match && r.oracle_match.value_or(true);
    }
    if (opt.stats.empty()) {
      out << lines;
    } else {
      write_text(opt.stats, lines);
    }
    if (!all_match) {
      err << "oracle mismatch in experiment sweep\n";
      return kExitOracleMismatch;
    }
    return kExitOk;
  }

  JoinResult result;
  std::optional<std::vector<MatchPair>> oracle;
  ReportRecord report;
  if (opt.mode == "self") {
    if (opt.threads > 1) throw UsageError("--threads applies to --mode rs only");
    config.mode = JoinMode::SelfJoin;
    const std::vector<Record> records = input_records(opt);
    result = self_join(records, config);
    if (opt.oracle_check) oracle = brute_force_join(records, config.tau);
    report.dataset = opt.gen_count > 0 ? "synthetic" : opt.input;
    report.records = records.size();
    if (!opt.stats.empty()) report.selection = selection_totals(records, config.tau);
  } else {
    if (opt.left.empty() || opt.right.empty()) {
      throw UsageError("--mode rs requires --left PATH and --right PATH");
    }
    config.mode = JoinMode::RSJoin;
    const std::vector<Record> left = load_dataset(opt.left);
    const std::vector<Record> right = load_dataset(opt.right);
    result = rs_join(left, right, config);
    if (opt.oracle_check) oracle = brute_force_rs_join(left, right, config.tau);
    report.dataset = opt.left + "," + opt.right;
    report.records = left.size() + right.size();
  }

  if (opt.output.empty()) {
    write_pairs(out, result.pairs);
  } else {
    std::ofstream f(opt.output, std::ios::binary | std::ios::trunc);
    if (!f) throw DatasetError(opt.output, "cannot open for writing");
    write_pairs(f, result.pairs);
    if (!f) throw DatasetError(opt.output, "write failed");
  }

  if (oracle) report.oracle_match = *oracle == result.pairs;
  if (!opt.stats.empty()) {
    report.tau = opt.tau;
    report.strategy = config.strategy;
    report.verifier = config.verifier;
    report.result_pairs = result.pairs.size();
    report.stats = result.stats;
    write_text(opt.stats, to_json(report) + '\n');
  }
  if (oracle && !*report.oracle_match) {
    err << "oracle mismatch: engine reported " << result.pairs.size() << " pairs, oracle "
        << oracle->size() << '\n';
    return kExitOracleMismatch;
  }
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Edit-distance similarity join over line-per-string datasets", "segjoin"};
  app.add_option("--mode", opt.mode, "self or rs")
      ->check(CLI::IsMember({"self", "rs"}))
      ->capture_default_str();
  app.add_option("--input", opt.input, "dataset for a self-join");
  app.add_option("--left", opt.left, "left dataset for an R x S join");
  app.add_option("--right", opt.right, "right dataset for an R x S join");
  app.add_option("--tau", opt.tau, "edit-distance threshold")
      ->required()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--selector", opt.selector, "substring selection strategy")
      ->check(CLI::IsMember({"length", "shift", "position", "multimatch"}))
      ->capture_default_str();
  app.add_option("--verifier", opt.verifier, "candidate verification method")
      ->check(CLI::IsMember({"dp", "banded", "extension", "extension-share"}))
      ->capture_default_str();
  app.add_option("--index-side", opt.index_side, "which side an R x S join indexes")
      ->check(CLI::IsMember({"auto", "left", "right"}))
      ->capture_default_str();
  app.add_option("--stats", opt.stats, "write the counters as JSON to this path");
  app.add_option("--output", opt.output, "write result pairs here instead of stdout");
  app.add_flag("--oracle-check", opt.oracle_check,
               "compare against the brute-force join; exit 3 on mismatch");
  app.add_option("--threads", opt.threads, "probe workers (rs mode)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--experiment", opt.experiment,
               "sweep all selectors and verifiers over [--tau-min, --tau]");
  app.add_option("--tau-min", opt.tau_min, "lowest threshold of an experiment sweep")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--gen", opt.gen_count, "generate this many synthetic strings as input");
  app.add_option("--seed", opt.gen.seed, "generator seed")->capture_default_str();
  app.add_option("--len-min", opt.gen.min_length, "generator minimum length")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--len-max", opt.gen.max_length, "generator maximum length")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--alphabet", opt.gen.alphabet, "generator alphabet size (1-26)")
      ->check(CLI::Range(1, 26))
      ->capture_default_str();
  app.add_option("--gen-output", opt.gen_output, "also write the generated dataset here");

  std::vector<const char*> argv{"segjoin"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "segjoin: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return execute(opt, out, err);
  } catch (const UsageError& e) {
    err << "segjoin: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "segjoin: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DatasetError& e) {
    err << "segjoin: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace segjoin
