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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "stack/generators.hpp"

namespace stack::cli {

// Each command writes its files, prints a human summary to `log`, and
// returns the report_v1 JSON document (already written when a report path
// is given).

/// Generator selection. Unset parameters take the per-kind defaults that
/// give an average degree near 10 at n = 1000.
struct GeneratorSpec {
  std::string kind = "er";  // er | ba | ws | plc | planted
  std::size_t n = 1000;
  std::optional<double> p;             // er: edge prob, ws: rewiring prob, plc: triangle prob
  std::optional<std::size_t> m;        // ba / plc attachment count
  std::optional<std::size_t> ring_k;   // ws lattice degree
  std::size_t blocks = 2;              // planted
  double p_in = 0.05;
  double p_out = 0.005;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
};

/// Builds the graph (labels only for "planted").
LabeledGraph generate(const GeneratorSpec& spec);

struct GenerateOptions {
  GeneratorSpec spec;
  std::filesystem::path out;
  std::optional<std::filesystem::path> labels_out;
  std::optional<std::filesystem::path> features_out;  // planted: block indicators
  double feature_noise = 0.0;
  std::optional<std::filesystem::path> report;
};
nlohmann::json cmd_generate(const GenerateOptions& opts, std::ostream& log);

struct AttackOptions {
  std::filesystem::path graph;
  std::string attacker = "stack";
  std::optional<int> budget;  // default ceil(rate * |E|)
  double rate = 0.10;
  int k = 1;
  double tau = 0.03;
  std::size_t candidates = 20000;  // capped at n(n-1)/2
  std::uint64_t seed = 0;
  std::string ortho = "auto";  // auto | exact | sampled
  std::filesystem::path out;
  std::optional<std::filesystem::path> report;
  // Optional damage evaluation of the perturbed graph.
  std::optional<std::filesystem::path> labels;
  std::optional<std::filesystem::path> features;
  std::string victim = "labelprop";
  int eval_seeds = 10;
};
nlohmann::json cmd_attack(const AttackOptions& opts, std::ostream& log);

/// ceil(rate * edges), at least 1.
int default_budget(std::size_t edges, double rate);

struct EvaluateOptions {
  std::filesystem::path clean;
  std::filesystem::path perturbed;
  std::string victim = "labelprop";
  std::filesystem::path labels;
  std::optional<std::filesystem::path> features;
  int seeds = 10;
  std::uint64_t seed = 0;  // first seed; runs use seed, seed+1, ...
  int k = 1;
  std::optional<std::filesystem::path> report;
};
nlohmann::json cmd_evaluate(const EvaluateOptions& opts, std::ostream& log);

struct ApproxQualityOptions {
  GeneratorSpec spec;
  int flips = 10;
  int repeats = 100;
  double tau = 0.03;
  std::optional<std::filesystem::path> out_csv;
  std::optional<std::filesystem::path> report;
};
nlohmann::json cmd_approx_quality(const ApproxQualityOptions& opts, std::ostream& log);

struct CorrelationOptions {
  std::filesystem::path graph;
  int samples = 200;
  int flips_per_sample = 1;
  int k = 1;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> out_csv;
  std::optional<std::filesystem::path> report;
};
nlohmann::json cmd_correlation(const CorrelationOptions& opts, std::ostream& log);

}  // namespace stack::cli
