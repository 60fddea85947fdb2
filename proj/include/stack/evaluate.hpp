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
#include <optional>
#include <string>
#include <vector>

#include "stack/graph.hpp"
#include "stack/metrics.hpp"
#include "stack/victim.hpp"

namespace stack {

enum class VictimKind { LabelPropagation, Surrogate };

VictimKind parse_victim(const std::string& name);  // "labelprop" | "surrogate"
std::string victim_name(VictimKind kind);

struct VictimSpec {
  VictimKind kind = VictimKind::LabelPropagation;
  std::optional<Matrix> features;  // required by the surrogate
  int k = 1;
};

struct ScoreSummary {
  MacroScores mean;
  MacroScores std;  // population standard deviation over seeds
};

/// Clean vs attacked test-set scores. Drops are in percentage points and
/// equal 100 * (clean.mean - attacked.mean) exactly.
struct EvalReport {
  std::string victim;
  std::vector<std::uint64_t> seeds;
  ScoreSummary clean;
  ScoreSummary attacked;
  MacroScores drop_pp;
  MacroScores drop_std_pp;
};

/// Test-set scores of one victim run on g under the given split.
MacroScores run_victim(const Graph& g, const VictimSpec& victim, const LabeledSplit& split);

/// For every seed: draw a split, run the victim on both graphs, score the
/// test nodes. Throws ValidationError on node-count mismatches.
EvalReport evaluate_attack(const Graph& clean, const Graph& perturbed, const VictimSpec& victim,
                           const std::vector<int>& labels, const std::vector<std::uint64_t>& seeds);

}  // namespace stack
