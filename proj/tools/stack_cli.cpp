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

#include <CLI11.hpp>

#include <iostream>

#include "stack/cli/commands.hpp"
#include "stack/errors.hpp"

namespace {

using stack::cli::GeneratorSpec;

void add_generator_flags(CLI::App* cmd, GeneratorSpec& spec) {
  cmd->add_option("kind", spec.kind, "Generator: er, ba, ws, plc or planted")
      ->required()
      ->check(CLI::IsMember({"er", "ba", "ws", "plc", "planted"}));
  cmd->add_option("--n", spec.n, "Number of nodes")->capture_default_str();
  cmd->add_option("--p", spec.p, "Edge probability (er), rewiring probability (ws) or triangle probability (plc)");
  cmd->add_option("--m", spec.m, "Edges per new node (ba, plc)");
  cmd->add_option("--ring-k", spec.ring_k, "Lattice degree (ws)");
  cmd->add_option("--blocks", spec.blocks, "Number of blocks (planted)")->capture_default_str();
  cmd->add_option("--p-in", spec.p_in, "Within-block edge probability (planted)")->capture_default_str();
  cmd->add_option("--p-out", spec.p_out, "Between-block edge probability (planted)")->capture_default_str();
  cmd->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Black-box spectral structure attacks on graphs"};
  app.require_subcommand(1);

  stack::cli::GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate a synthetic graph");
  add_generator_flags(generate, gen.spec);
  generate->add_option("--out", gen.out, "Edge-list output path")->required();
  generate->add_option("--labels-out", gen.labels_out, "Labels CSV output (planted only)");
  generate->add_option("--features-out", gen.features_out, "Block-indicator features CSV output (planted only)");
  generate->add_option("--feature-noise", gen.feature_noise, "Gaussian noise added to the features")
      ->capture_default_str();
  generate->add_option("--report", gen.report, "JSON report path");

  stack::cli::AttackOptions att;
  auto* attack = app.add_subcommand("attack", "Perturb a graph with an attacker");
  attack->add_option("--graph", att.graph, "Input edge list")->required();
  attack->add_option("--attacker", att.attacker,
                     "stack, stack-r, stack-r-d, random, deg, betw, eigen, small-deg, small-betw or small-eigen")
      ->capture_default_str();
  attack->add_option("--budget", att.budget, "Number of flips (overrides --rate)");
  attack->add_option("--rate", att.rate, "Budget as a fraction of the edge count")->capture_default_str();
  attack->add_option("--k", att.k, "Filter power")->capture_default_str();
  attack->add_option("--tau", att.tau, "Restart threshold on the orthogonality error")->capture_default_str();
  attack->add_option("--candidates", att.candidates, "Candidate pool size")->capture_default_str();
  attack->add_option("--seed", att.seed, "Random seed")->capture_default_str();
  attack->add_option("--ortho", att.ortho, "Orthogonality error mode: auto, exact or sampled")->capture_default_str();
  attack->add_option("--out", att.out, "Perturbed edge-list output path")->required();
  attack->add_option("--report", att.report, "JSON report path");
  attack->add_option("--labels", att.labels, "Labels CSV; enables damage evaluation");
  attack->add_option("--features", att.features, "Features CSV for the surrogate victim");
  attack->add_option("--victim", att.victim, "labelprop or surrogate")->capture_default_str();
  attack->add_option("--seeds", att.eval_seeds, "Evaluation seeds")->capture_default_str();

  stack::cli::EvaluateOptions ev;
  auto* evaluate = app.add_subcommand("evaluate", "Score a victim on clean and perturbed graphs");
  evaluate->add_option("--clean", ev.clean, "Clean edge list")->required();
  evaluate->add_option("--perturbed", ev.perturbed, "Perturbed edge list")->required();
  evaluate->add_option("--labels", ev.labels, "Labels CSV")->required();
  evaluate->add_option("--features", ev.features, "Features CSV for the surrogate victim");
  evaluate->add_option("--victim", ev.victim, "labelprop or surrogate")->capture_default_str();
  evaluate->add_option("--seeds", ev.seeds, "Number of split seeds")->capture_default_str();
  evaluate->add_option("--seed", ev.seed, "First split seed")->capture_default_str();
  evaluate->add_option("--k", ev.k, "Surrogate propagation order")->capture_default_str();
  evaluate->add_option("--report", ev.report, "JSON report path");

  stack::cli::ApproxQualityOptions aq;
  auto* approx = app.add_subcommand("approx-quality", "Eigenvalue tracking error with and without restart");
  add_generator_flags(approx, aq.spec);
  approx->add_option("--flips", aq.flips, "Random flips per repeat")->capture_default_str();
  approx->add_option("--repeats", aq.repeats, "Number of repeats")->capture_default_str();
  approx->add_option("--tau", aq.tau, "Restart threshold")->capture_default_str();
  approx->add_option("--out", aq.out_csv, "CSV output path");
  approx->add_option("--report", aq.report, "JSON report path");

  stack::cli::CorrelationOptions co;
  auto* correlation = app.add_subcommand("correlation", "Correlation of exact l1 and approximate l2 objectives");
  correlation->add_option("--graph", co.graph, "Input edge list")->required();
  correlation->add_option("--samples", co.samples, "Number of samples")->capture_default_str();
  correlation->add_option("--flips-per-sample", co.flips_per_sample, "Random flips per sample")
      ->capture_default_str();
  correlation->add_option("--k", co.k, "Filter power")->capture_default_str();
  correlation->add_option("--seed", co.seed, "Random seed")->capture_default_str();
  correlation->add_option("--out", co.out_csv, "CSV output path");
  correlation->add_option("--report", co.report, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*generate) stack::cli::cmd_generate(gen, std::cout);
    else if (*attack) stack::cli::cmd_attack(att, std::cout);
    else if (*evaluate) stack::cli::cmd_evaluate(ev, std::cout);
    else if (*approx) stack::cli::cmd_approx_quality(aq, std::cout);
    else if (*correlation) stack::cli::cmd_correlation(co, std::cout);
  } catch (const stack::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const stack::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const stack::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
