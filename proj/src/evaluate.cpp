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

#include "stack/evaluate.hpp"

#include <cmath>

#include "stack/errors.hpp"

namespace stack {
namespace {

struct Accumulator {
  std::vector<MacroScores> samples;

  ScoreSummary summary() const {
    ScoreSummary s;
    const auto n = static_cast<double>(samples.size());
    for (const auto& x : samples) {
      s.mean.f1 += x.f1 / n;
      s.mean.precision += x.precision / n;
      s.mean.recall += x.recall / n;
    }
    for (const auto& x : samples) {
      s.std.f1 += (x.f1 - s.mean.f1) * (x.f1 - s.mean.f1) / n;
      s.std.precision += (x.precision - s.mean.precision) * (x.precision - s.mean.precision) / n;
      s.std.recall += (x.recall - s.mean.recall) * (x.recall - s.mean.recall) / n;
    }
    s.std.f1 = std::sqrt(s.std.f1);
    s.std.precision = std::sqrt(s.std.precision);
    s.std.recall = std::sqrt(s.std.recall);
    return s;
  }
};

}  // namespace

VictimKind parse_victim(const std::string& name) {
  if (name == "labelprop") return VictimKind::LabelPropagation;
  if (name == "surrogate") return VictimKind::Surrogate;
  throw ValidationError("unknown victim '" + name + "' (expected labelprop or surrogate)");
}

std::string victim_name(VictimKind kind) {
  return kind == VictimKind::LabelPropagation ? "labelprop" : "surrogate";
}

MacroScores run_victim(const Graph& g, const VictimSpec& victim, const LabeledSplit& split) {
  std::vector<int> pred;
  if (victim.kind == VictimKind::LabelPropagation) {
    pred = label_propagation(g, split);
  } else {
    if (!victim.features) throw ValidationError("surrogate victim requires node features");
    const Matrix w = train_linear_surrogate(g, *victim.features, split, victim.k);
    pred = surrogate_predict(g, *victim.features, w, victim.k);
  }
  std::vector<int> truth_test;
  std::vector<int> pred_test;
  for (std::size_t i = 0; i < split.labels.size(); ++i) {
    if (!split.test_mask[i]) continue;
    truth_test.push_back(split.labels[i]);
    pred_test.push_back(pred[i]);
  }
  return macro_scores(truth_test, pred_test, split.num_classes());
}

EvalReport evaluate_attack(const Graph& clean, const Graph& perturbed, const VictimSpec& victim,
                           const std::vector<int>& labels, const std::vector<std::uint64_t>& seeds) {
  if (clean.num_nodes() != perturbed.num_nodes()) throw ValidationError("clean and perturbed node counts differ");
  if (labels.size() != clean.num_nodes()) throw ValidationError("label count differs from node count");
  if (seeds.empty()) throw ValidationError("evaluation needs at least one seed");
  if (victim.kind == VictimKind::Surrogate && !victim.features) {
    throw ValidationError("surrogate victim requires node features");
  }
  Accumulator clean_acc;
  Accumulator attacked_acc;
  Accumulator drop_acc;
  for (std::uint64_t seed : seeds) {
    const LabeledSplit split = make_split(labels, seed);
    const MacroScores c = run_victim(clean, victim, split);
    const MacroScores a = run_victim(perturbed, victim, split);
    clean_acc.samples.push_back(c);
    attacked_acc.samples.push_back(a);
    drop_acc.samples.push_back({100.0 * (c.f1 - a.f1), 100.0 * (c.precision - a.precision),
                                100.0 * (c.recall - a.recall)});
  }
  EvalReport report;
  report.victim = victim_name(victim.kind);
  report.seeds = seeds;
  report.clean = clean_acc.summary();
  report.attacked = attacked_acc.summary();
  report.drop_pp = {100.0 * (report.clean.mean.f1 - report.attacked.mean.f1),
                    100.0 * (report.clean.mean.precision - report.attacked.mean.precision),
                    100.0 * (report.clean.mean.recall - report.attacked.mean.recall)};
  report.drop_std_pp = drop_acc.summary().std;
  return report;
}

}  // namespace stack
