// Copyright 2026 The Authors.
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

#include "stack/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>

#include "stack/attack.hpp"
#include "stack/cli/report.hpp"
#include "stack/edge_list_io.hpp"
#include "stack/eigen_tracker.hpp"
#include "stack/errors.hpp"
#include "stack/evaluate.hpp"
#include "stack/metrics.hpp"
#include "stack/rng.hpp"
#include "stack/table_io.hpp"

namespace stack::cli {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void finish(nlohmann::json& report, Clock::time_point start, const std::optional<std::filesystem::path>& path) {
  report["wall_ms"] = elapsed_ms(start);
  if (path) write_report(report, *path);
}

std::vector<std::uint64_t> seed_range(std::uint64_t first, int count) {
  if (count < 1) throw ValidationError("need at least one evaluation seed");
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < count; ++i) seeds.push_back(first + static_cast<std::uint64_t>(i));
  return seeds;
}

VictimSpec load_victim(const std::string& name, const std::optional<std::filesystem::path>& features,
                       std::size_t n, int k) {
  VictimSpec victim;
  victim.kind = parse_victim(name);
  victim.k = k;
  if (features) {
    victim.features = load_features_csv(*features);
    if (static_cast<std::size_t>(victim.features->rows()) != n) {
      throw ValidationError("feature rows differ from node count");
    }
  } else if (victim.kind == VictimKind::Surrogate) {
    throw ValidationError("victim 'surrogate' requires --features");
  }
  return victim;
}

void print_eval(const EvalReport& e, std::ostream& log) {
  auto line = [&](const char* name, double clean, double clean_sd, double att, double att_sd, double drop,
                  double drop_sd) {
    log << "  " << std::left << std::setw(10) << name << std::right << std::fixed << std::setprecision(4)
        << " clean " << clean << " +/- " << clean_sd << "  attacked " << att << " +/- " << att_sd
        << std::setprecision(2) << "  drop " << drop << " +/- " << drop_sd << " pp\n";
  };
  log << "victim " << e.victim << " over " << e.seeds.size() << " seeds\n";
  line("macro-F1", e.clean.mean.f1, e.clean.std.f1, e.attacked.mean.f1, e.attacked.std.f1, e.drop_pp.f1,
       e.drop_std_pp.f1);
  line("precision", e.clean.mean.precision, e.clean.std.precision, e.attacked.mean.precision,
       e.attacked.std.precision, e.drop_pp.precision, e.drop_std_pp.precision);
  line("recall", e.clean.mean.recall, e.clean.std.recall, e.attacked.mean.recall, e.attacked.std.recall,
       e.drop_pp.recall, e.drop_std_pp.recall);
  log.unsetf(std::ios::floatfield);
}

OrthoMode parse_ortho(const std::string& name, std::size_t n, std::uint64_t seed) {
  if (name == "auto") return OrthoMode::automatic(n, seed);
  if (name == "exact") return OrthoMode::exact();
  if (name == "sampled") return OrthoMode::sampled(4096, seed);
  throw ValidationError("unknown ortho mode '" + name + "' (expected auto, exact or sampled)");
}

std::vector<double> sorted_desc(const Vector& v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

nlohmann::json GeneratorSpec::to_json() const {
  nlohmann::json j = {{"kind", kind}, {"n", n}, {"seed", seed}};
  if (p) j["p"] = *p;
  if (m) j["m"] = *m;
  if (ring_k) j["ring_k"] = *ring_k;
  if (kind == "planted") {
    j["blocks"] = blocks;
    j["p_in"] = p_in;
    j["p_out"] = p_out;
  }
  return j;
}

LabeledGraph generate(const GeneratorSpec& spec) {
  if (spec.kind == "er") return {gen_erdos_renyi(spec.n, spec.p.value_or(0.01), spec.seed), {}};
  if (spec.kind == "ba") return {gen_barabasi_albert(spec.n, spec.m.value_or(5), spec.seed), {}};
  if (spec.kind == "ws") {
    return {gen_watts_strogatz(spec.n, spec.ring_k.value_or(10), spec.p.value_or(0.1), spec.seed), {}};
  }
  if (spec.kind == "plc") {
    return {gen_powerlaw_cluster(spec.n, spec.m.value_or(5), spec.p.value_or(0.1), spec.seed), {}};
  }
  if (spec.kind == "planted") return gen_planted_partition(spec.n, spec.blocks, spec.p_in, spec.p_out, spec.seed);
  throw ValidationError("unknown generator '" + spec.kind + "' (expected er, ba, ws, plc or planted)");
}

nlohmann::json cmd_generate(const GenerateOptions& opts, std::ostream& log) {
  const auto start = Clock::now();
  const LabeledGraph lg = generate(opts.spec);
  save_edge_list(lg.graph, opts.out);
  if (opts.labels_out || opts.features_out) {
    if (lg.labels.empty()) throw ValidationError("labels/features are only produced by the planted generator");
  }
  if (opts.labels_out) save_labels_csv(lg.labels, *opts.labels_out);
  if (opts.features_out) {
    const int classes = *std::max_element(lg.labels.begin(), lg.labels.end()) + 1;
    Matrix x = Matrix::Zero(static_cast<Eigen::Index>(lg.labels.size()), classes);
    Rng rng(opts.spec.seed ^ 0xfeedULL);
    for (std::size_t i = 0; i < lg.labels.size(); ++i) {
      for (int c = 0; c < classes; ++c) {
        x(static_cast<Eigen::Index>(i), c) = (c == lg.labels[i] ? 1.0 : 0.0) + opts.feature_noise * rng.normal();
      }
    }
    save_features_csv(x, *opts.features_out);
  }
  log << "generated " << opts.spec.kind << " graph: " << lg.graph.num_nodes() << " nodes, "
      << lg.graph.num_edges() << " edges -> " << opts.out.string() << "\n";

  nlohmann::json report = make_report("generate", opts.spec.to_json());
  report["config"]["feature_noise"] = opts.feature_noise;
  report["result"] = {{"nodes", lg.graph.num_nodes()},
                      {"edges", lg.graph.num_edges()},
                      {"output_hash", git_blob_hash(to_edge_list_string(lg.graph))}};
  finish(report, start, opts.report);
  return report;
}

int default_budget(std::size_t edges, double rate) {
  if (!(rate > 0.0)) throw ValidationError("budget rate must be positive");
  // The epsilon keeps exact products such as 0.1 * 70 from rounding up.
  const double raw = std::ceil(rate * static_cast<double>(edges) - 1e-9);
  return std::max(1, static_cast<int>(raw));
}

nlohmann::json cmd_attack(const AttackOptions& opts, std::ostream& log) {
  const auto start = Clock::now();
  const Graph g = load_edge_list(opts.graph);
  if (opts.budget && *opts.budget < 1) throw ValidationError("budget must be >= 1");

  AttackConfig cfg;
  cfg.budget = opts.budget.value_or(default_budget(g.num_edges(), opts.rate));
  cfg.k = opts.k;
  cfg.tau = opts.tau;
  cfg.candidate_size = std::min(opts.candidates, pair_count(g.num_nodes()));
  cfg.seed = opts.seed;
  cfg.ortho = parse_ortho(opts.ortho, g.num_nodes(), opts.seed);

  AttackResult result;
  if (opts.attacker == "stack") result = run_stack(g, cfg);
  else if (opts.attacker == "stack-r") result = run_stack_no_restart(g, cfg);
  else if (opts.attacker == "stack-r-d") result = run_stack_independent(g, cfg);
  else result = run_baseline(g, cfg, parse_baseline(opts.attacker));

  save_edge_list(result.perturbed, opts.out);
  log << "attack " << result.attacker << ": " << result.flips.size() << " flips (budget " << cfg.budget
      << "), restarts " << result.restarts << ", l1 " << result.final_l1 << ", l2 " << result.final_l2_exact
      << " -> " << opts.out.string() << "\n";

  nlohmann::json config = {{"graph", opts.graph.filename().string()},
                           {"attacker", opts.attacker},
                           {"budget", cfg.budget},
                           {"rate", opts.rate},
                           {"k", cfg.k},
                           {"tau", cfg.tau},
                           {"candidates", cfg.candidate_size},
                           {"seed", cfg.seed},
                           {"ortho", opts.ortho}};
  nlohmann::json report = make_report("attack", std::move(config));
  report["input_hash"] = git_blob_hash_of_file(opts.graph);
  report["attack"] = to_json(result);
  report["output_hash"] = git_blob_hash(to_edge_list_string(result.perturbed));

  if (opts.labels) {
    const std::vector<int> labels = load_labels_csv(*opts.labels);
    const VictimSpec victim = load_victim(opts.victim, opts.features, g.num_nodes(), opts.k);
    const EvalReport eval = evaluate_attack(g, result.perturbed, victim, labels, seed_range(opts.seed, opts.eval_seeds));
    print_eval(eval, log);
    report["eval"] = to_json(eval);
  }
  finish(report, start, opts.report);
  return report;
}

nlohmann::json cmd_evaluate(const EvaluateOptions& opts, std::ostream& log) {
  const auto start = Clock::now();
  const Graph clean = load_edge_list(opts.clean);
  const Graph perturbed = load_edge_list(opts.perturbed);
  if (clean.num_nodes() != perturbed.num_nodes()) throw ValidationError("clean and perturbed node counts differ");
  const std::vector<int> labels = load_labels_csv(opts.labels);
  if (labels.size() != clean.num_nodes()) throw ValidationError("label rows differ from node count");
  const VictimSpec victim = load_victim(opts.victim, opts.features, clean.num_nodes(), opts.k);
  const EvalReport eval = evaluate_attack(clean, perturbed, victim, labels, seed_range(opts.seed, opts.seeds));
  print_eval(eval, log);

  nlohmann::json report = make_report(
      "evaluate", {{"victim", opts.victim}, {"seeds", opts.seeds}, {"seed", opts.seed}, {"k", opts.k}});
  report["input_hash"] = git_blob_hash_of_file(opts.clean);
  report["perturbed_hash"] = git_blob_hash_of_file(opts.perturbed);
  report["eval"] = to_json(eval);
  finish(report, start, opts.report);
  return report;
}

nlohmann::json cmd_approx_quality(const ApproxQualityOptions& opts, std::ostream& log) {
  const auto start = Clock::now();
  if (opts.flips < 0) throw ValidationError("flip count must be non-negative");
  if (opts.repeats < 1) throw ValidationError("need at least one repeat");
  if (!(opts.tau > 0.0)) throw ValidationError("tau must be positive");

  std::ofstream csv;
  if (opts.out_csv) {
    csv.open(*opts.out_csv, std::ios::binary);
    if (!csv) throw IoError("cannot open " + opts.out_csv->string() + " for writing");
    csv << "repeat,eigen_index,true_value,approx_with_restart,approx_without_restart\n" << std::setprecision(17);
  }

  std::vector<double> truth_all, with_all, without_all;
  int restarts_total = 0;
  for (int r = 0; r < opts.repeats; ++r) {
    GeneratorSpec spec = opts.spec;
    spec.seed = opts.spec.seed + static_cast<std::uint64_t>(r);
    const Graph g = generate(spec).graph;
    const EigenSystem exact = generalized_eigh(g);

    TrackerOptions with_restart;
    with_restart.tau = opts.tau;
    with_restart.ortho = OrthoMode::automatic(g.num_nodes(), spec.seed);
    TrackerOptions no_restart = with_restart;
    no_restart.restart_on_error = false;
    EigenTracker with(g, exact, with_restart);
    EigenTracker without(g, exact, no_restart);
    if (opts.flips > 0) {
      for (const EdgeFlip& f : sample_candidates(g, static_cast<std::size_t>(opts.flips), spec.seed ^ 0xf11bULL)) {
        with.apply(f);
        without.apply(f);
      }
    }
    restarts_total += with.restarts();
    const std::vector<double> truth = sorted_desc(generalized_eigenvalues(with.graph()));
    const std::vector<double> approx_with = sorted_desc(with.system().lambdas);
    const std::vector<double> approx_without = sorted_desc(without.system().lambdas);
    for (std::size_t i = 0; i < truth.size(); ++i) {
      if (csv.is_open()) {
        csv << r << ',' << i << ',' << truth[i] << ',' << approx_with[i] << ',' << approx_without[i] << '\n';
      }
    }
    truth_all.insert(truth_all.end(), truth.begin(), truth.end());
    with_all.insert(with_all.end(), approx_with.begin(), approx_with.end());
    without_all.insert(without_all.end(), approx_without.begin(), approx_without.end());
  }

  double err_with = 0.0, err_without = 0.0, max_with = 0.0, max_without = 0.0;
  for (std::size_t i = 0; i < truth_all.size(); ++i) {
    err_with += std::abs(with_all[i] - truth_all[i]);
    err_without += std::abs(without_all[i] - truth_all[i]);
    max_with = std::max(max_with, std::abs(with_all[i] - truth_all[i]));
    max_without = std::max(max_without, std::abs(without_all[i] - truth_all[i]));
  }
  err_with /= static_cast<double>(truth_all.size());
  err_without /= static_cast<double>(truth_all.size());
  const double corr_with = pearson(with_all, truth_all);
  const double corr_without = pearson(without_all, truth_all);

  log << "approx-quality " << opts.spec.kind << " n=" << opts.spec.n << " flips=" << opts.flips
      << " repeats=" << opts.repeats << "\n  mean |error| with restart " << err_with << ", without "
      << err_without << "\n  pearson(approx, true) with restart " << corr_with << ", without " << corr_without
      << "\n  restarts " << restarts_total << "\n";

  nlohmann::json config = opts.spec.to_json();
  config["flips"] = opts.flips;
  config["repeats"] = opts.repeats;
  config["tau"] = opts.tau;
  nlohmann::json report = make_report("approx-quality", std::move(config));
  report["result"] = {{"mean_abs_error_with_restart", err_with},
                      {"mean_abs_error_without_restart", err_without},
                      {"max_abs_error_with_restart", max_with},
                      {"max_abs_error_without_restart", max_without},
                      {"pearson_with_restart", corr_with},
                      {"pearson_without_restart", corr_without},
                      {"restarts", restarts_total}};
  finish(report, start, opts.report);
  return report;
}

nlohmann::json cmd_correlation(const CorrelationOptions& opts, std::ostream& log) {
  const auto start = Clock::now();
  if (opts.samples < 3) throw ValidationError("correlation needs at least 3 samples");
  if (opts.flips_per_sample < 1) throw ValidationError("need at least one flip per sample");
  if (opts.k < 1) throw ValidationError("k must be >= 1");
  const Graph g = load_edge_list(opts.graph);
  const EigenSystem exact = generalized_eigh(g);

  TrackerOptions chain;
  chain.restart_on_error = false;
  std::vector<double> l1s, l2s;
  for (int s = 0; s < opts.samples; ++s) {
    EigenTracker tracker(g, exact, chain);
    const auto flips = sample_candidates(g, static_cast<std::size_t>(opts.flips_per_sample),
                                         opts.seed + static_cast<std::uint64_t>(s));
    for (const EdgeFlip& f : flips) tracker.apply(f);
    l1s.push_back(l1_objective(g, tracker.graph(), opts.k));
    l2s.push_back(l2_lower_bound(exact.lambdas, tracker.system().lambdas, opts.k));
  }
  if (opts.out_csv) {
    std::ofstream csv(*opts.out_csv, std::ios::binary);
    if (!csv) throw IoError("cannot open " + opts.out_csv->string() + " for writing");
    csv << "sample,l1_exact,l2_approx\n" << std::setprecision(17);
    for (std::size_t i = 0; i < l1s.size(); ++i) csv << i << ',' << l1s[i] << ',' << l2s[i] << '\n';
  }
  const double rho_p = pearson(l1s, l2s);
  const double rho_s = spearman(l1s, l2s);
  log << "correlation over " << opts.samples << " samples (" << opts.flips_per_sample
      << " flips each): pearson " << rho_p << ", spearman " << rho_s << "\n";

  nlohmann::json report = make_report("correlation", {{"graph", opts.graph.filename().string()},
                                                      {"samples", opts.samples},
                                                      {"flips_per_sample", opts.flips_per_sample},
                                                      {"k", opts.k},
                                                      {"seed", opts.seed}});
  report["input_hash"] = git_blob_hash_of_file(opts.graph);
  report["result"] = {{"pearson", rho_p}, {"spearman", rho_s}};
  finish(report, start, opts.report);
  return report;
}

}  // namespace stack::cli
