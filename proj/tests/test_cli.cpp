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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include "stack/cli/commands.hpp"
#include "stack/cli/report.hpp"
#include "stack/edge_list_io.hpp"
#include "stack/errors.hpp"
#include "stack/generators.hpp"

using namespace stack;
using namespace stack::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("stack_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path scratch(const std::string& name) { return scratch_dir() / name; }

int run_cli(const std::string& args) {
  const std::string cmd = std::string(STACK_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

json load_json(const fs::path& path) { return json::parse(slurp(path)); }

// Minimal draft-07 subset: type, enum, required, properties,
// additionalProperties=false, items, minItems/maxItems, minimum, pattern, $ref.
class SchemaValidator {
 public:
  explicit SchemaValidator(json root) : root_(std::move(root)) {}

  std::vector<std::string> validate(const json& doc) const {
    std::vector<std::string> errors;
    check(root_, doc, "$", errors);
    return errors;
  }

 private:
  const json& resolve(const json& schema) const {
    if (!schema.contains("$ref")) return schema;
    const std::string ref = schema["$ref"];
    const std::string prefix = "#/definitions/";
    REQUIRE(ref.rfind(prefix, 0) == 0);
    return root_["definitions"][ref.substr(prefix.size())];
  }

  static bool type_matches(const std::string& type, const json& v) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "boolean") return v.is_boolean();
    if (type == "integer") return v.is_number_integer();
    if (type == "number") return v.is_number();
    if (type == "null") return v.is_null();
    return false;
  }

  void check(const json& raw, const json& v, const std::string& at, std::vector<std::string>& errors) const {
    const json& s = resolve(raw);
    if (s.contains("type") && !type_matches(s["type"], v)) {
      errors.push_back(at + ": expected " + s["type"].get<std::string>());
      return;
    }
    if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end()) {
      errors.push_back(at + ": value not in enum");
    }
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) {
      errors.push_back(at + ": below minimum");
    }
    if (s.contains("pattern") && v.is_string() &&
        !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>()))) {
      errors.push_back(at + ": pattern mismatch");
    }
    if (v.is_object()) {
      for (const auto& key : s.value("required", json::array())) {
        if (!v.contains(key.get<std::string>())) errors.push_back(at + ": missing " + key.get<std::string>());
      }
      const json props = s.value("properties", json::object());
      for (const auto& [key, value] : v.items()) {
        if (props.contains(key)) {
          check(props[key], value, at + "." + key, errors);
        } else if (s.contains("additionalProperties") && s["additionalProperties"] == false) {
          errors.push_back(at + ": unexpected key " + key);
        }
      }
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) errors.push_back(at + ": too short");
      if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) errors.push_back(at + ": too long");
      if (s.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i) check(s["items"], v[i], at + "[" + std::to_string(i) + "]", errors);
      }
    }
  }

  json root_;
};

const SchemaValidator& schema() {
  static const SchemaValidator validator(load_json(STACK_SCHEMA_PATH));
  return validator;
}

void check_schema(const json& report) {
  const auto errors = schema().validate(report);
  for (const auto& e : errors) INFO(e);
  CHECK(errors.empty());
}

GeneratorSpec planted_spec(std::size_t n, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.kind = "planted";
  spec.n = n;
  spec.blocks = 2;
  spec.p_in = 0.1;
  spec.p_out = 0.01;
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_CASE("git blob hashes") {
  CHECK(git_blob_hash("") == "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
  CHECK(git_blob_hash("hello\n") == "ce013625030ba8dba906f756967f9e9ca394464a");
}

TEST_CASE("default budget") {
  CHECK(default_budget(7981, 0.10) == 799);
  CHECK(default_budget(70, 0.10) == 7);
  CHECK(default_budget(71, 0.10) == 8);
  CHECK(default_budget(3, 0.10) == 1);
  CHECK_THROWS_AS(default_budget(100, 0.0), ValidationError);
}

TEST_CASE("generate command") {
  std::ostringstream log;
  GenerateOptions er;
  er.spec.kind = "er";
  er.spec.n = 1000;
  er.spec.p = 0.01;
  er.spec.seed = 1;
  er.out = scratch("er.txt");
  er.report = scratch("er.json");
  const json report = cmd_generate(er, log);
  CHECK(load_edge_list(er.out).num_nodes() == 1000);
  CHECK(log.str().find("1000 nodes") != std::string::npos);
  check_schema(load_json(*er.report));
  CHECK(report["result"]["output_hash"] == git_blob_hash_of_file(er.out));

  GenerateOptions complete;
  complete.spec.kind = "er";
  complete.spec.n = 10;
  complete.spec.p = 1.0;
  complete.out = scratch("k10.txt");
  cmd_generate(complete, log);
  CHECK(load_edge_list(complete.out).num_edges() == 45);

  GenerateOptions ws;
  ws.spec.kind = "ws";
  ws.spec.n = 1000;
  ws.spec.ring_k = 10;
  ws.spec.p = 0.1;
  ws.out = scratch("ws.txt");
  cmd_generate(ws, log);
  const Graph w = load_edge_list(ws.out);
  CHECK(w.num_edges() == 5000);
  CHECK(w == gen_watts_strogatz(1000, 10, 0.1, 0));

  for (const char* kind : {"ba", "plc"}) {
    GenerateOptions opts;
    opts.spec.kind = kind;
    opts.out = scratch(std::string(kind) + ".txt");
    cmd_generate(opts, log);
    const double mean_degree = 2.0 * static_cast<double>(load_edge_list(opts.out).num_edges()) / 1000.0;
    CHECK(mean_degree > 9.0);
    CHECK(mean_degree < 11.0);
  }

  GenerateOptions planted;
  planted.spec = planted_spec(100, 2);
  planted.out = scratch("planted.txt");
  planted.labels_out = scratch("planted_labels.csv");
  planted.features_out = scratch("planted_features.csv");
  cmd_generate(planted, log);
  CHECK(fs::exists(*planted.labels_out));
  CHECK(fs::exists(*planted.features_out));

  GenerateOptions bad = complete;
  bad.spec.kind = "grid";
  CHECK_THROWS_AS(cmd_generate(bad, log), ValidationError);
  bad = complete;
  bad.labels_out = scratch("nope.csv");
  CHECK_THROWS_AS(cmd_generate(bad, log), ValidationError);
  bad = complete;
  bad.out = "/nonexistent/dir/graph.txt";
  CHECK_THROWS_AS(cmd_generate(bad, log), IoError);
}

TEST_CASE("attack command") {
  std::ostringstream log;
  GenerateOptions gen;
  gen.spec = planted_spec(120, 4);
  gen.out = scratch("victim.txt");
  gen.labels_out = scratch("victim_labels.csv");
  cmd_generate(gen, log);
  const Graph g = load_edge_list(gen.out);

  AttackOptions opts;
  opts.graph = gen.out;
  opts.out = scratch("victim_stack.txt");
  opts.report = scratch("victim_stack.json");
  opts.labels = gen.labels_out;
  opts.eval_seeds = 3;
  const json report = cmd_attack(opts, log);
  check_schema(load_json(*opts.report));
  CHECK(report["config"]["budget"] == default_budget(g.num_edges(), 0.10));
  CHECK(report["config"]["candidates"] == pair_count(120));
  CHECK(report["attack"]["flips"].size() == static_cast<std::size_t>(default_budget(g.num_edges(), 0.10)));
  CHECK(report["input_hash"] == git_blob_hash_of_file(gen.out));
  CHECK(report["eval"]["seeds"].size() == 3);
  CHECK(report.contains("wall_ms"));
  CHECK(report["attack"]["final_l2_exact"].get<double>() <= report["attack"]["final_l1"].get<double>() + 1e-9);

  for (const char* attacker : {"stack-r", "stack-r-d", "random", "deg", "betw", "eigen", "small-deg", "small-betw",
                               "small-eigen"}) {
    AttackOptions other = opts;
    other.attacker = attacker;
    other.budget = 5;
    other.labels.reset();
    other.report = scratch(std::string(attacker) + ".json");
    other.out = scratch(std::string(attacker) + ".txt");
    const json r = cmd_attack(other, log);
    CHECK(r["attack"]["attacker"] == attacker);
    CHECK(r["attack"]["flips"].size() == 5);
    check_schema(load_json(*other.report));
  }

  AttackOptions bad = opts;
  bad.budget = 0;
  CHECK_THROWS_AS(cmd_attack(bad, log), ValidationError);
  bad = opts;
  bad.attacker = "gpgd";
  CHECK_THROWS_AS(cmd_attack(bad, log), ValidationError);
  bad = opts;
  bad.ortho = "fast";
  CHECK_THROWS_AS(cmd_attack(bad, log), ValidationError);
  bad = opts;
  bad.graph = scratch("missing.txt");
  CHECK_THROWS_AS(cmd_attack(bad, log), IoError);
}

TEST_CASE("evaluate command") {
  std::ostringstream log;
  GenerateOptions gen;
  gen.spec = planted_spec(100, 8);
  gen.out = scratch("eval.txt");
  gen.labels_out = scratch("eval_labels.csv");
  gen.features_out = scratch("eval_features.csv");
  gen.feature_noise = 0.3;
  cmd_generate(gen, log);

  EvaluateOptions opts;
  opts.clean = gen.out;
  opts.perturbed = gen.out;
  opts.labels = *gen.labels_out;
  opts.report = scratch("eval.json");
  const json same = cmd_evaluate(opts, log);
  CHECK(same["eval"]["drop_pp"]["f1"] == 0.0);
  CHECK(same["eval"]["drop_pp"]["precision"] == 0.0);
  CHECK(same["eval"]["seeds"].size() == 10);
  CHECK(same["eval"]["drop_std_pp"].contains("f1"));
  CHECK(same["eval"]["clean"]["std"].contains("recall"));
  CHECK(log.str().find("drop 0.00") != std::string::npos);
  check_schema(load_json(*opts.report));

  EvaluateOptions surrogate = opts;
  surrogate.victim = "surrogate";
  CHECK_THROWS_AS(cmd_evaluate(surrogate, log), ValidationError);
  surrogate.features = gen.features_out;
  CHECK(cmd_evaluate(surrogate, log)["eval"]["victim"] == "surrogate");

  GenerateOptions other;
  other.spec.kind = "er";
  other.spec.n = 50;
  other.out = scratch("eval_other.txt");
  cmd_generate(other, log);
  EvaluateOptions mismatch = opts;
  mismatch.perturbed = other.out;
  CHECK_THROWS_AS(cmd_evaluate(mismatch, log), ValidationError);
}

TEST_CASE("approx-quality command") {
  std::ostringstream log;
  ApproxQualityOptions none;
  none.spec.kind = "er";
  none.spec.n = 120;
  none.spec.p = 0.08;
  none.flips = 0;
  none.repeats = 2;
  none.out_csv = scratch("aq0.csv");
  const json unchanged = cmd_approx_quality(none, log);
  CHECK(unchanged["result"]["max_abs_error_with_restart"].get<double>() <= 1e-10);
  CHECK(unchanged["result"]["max_abs_error_without_restart"].get<double>() <= 1e-10);

  std::istringstream rows(slurp(*none.out_csv));
  std::string header;
  std::getline(rows, header);
  CHECK(header == "repeat,eigen_index,true_value,approx_with_restart,approx_without_restart");
  std::size_t lines = 0;
  for (std::string line; std::getline(rows, line);) ++lines;
  CHECK(lines == 2 * 120);

  ApproxQualityOptions flipped = none;
  flipped.flips = 10;
  flipped.report = scratch("aq.json");
  const json r = cmd_approx_quality(flipped, log);
  CHECK(r["result"]["mean_abs_error_with_restart"].get<double>() <=
        r["result"]["mean_abs_error_without_restart"].get<double>());
  check_schema(load_json(*flipped.report));

  ApproxQualityOptions bad = none;
  bad.repeats = 0;
  CHECK_THROWS_AS(cmd_approx_quality(bad, log), ValidationError);
  bad = none;
  bad.flips = -1;
  CHECK_THROWS_AS(cmd_approx_quality(bad, log), ValidationError);
}

TEST_CASE("correlation command") {
  std::ostringstream log;
  GenerateOptions gen;
  gen.spec.kind = "er";
  gen.spec.n = 80;
  gen.spec.p = 0.1;
  gen.out = scratch("corr.txt");
  cmd_generate(gen, log);

  CorrelationOptions opts;
  opts.graph = gen.out;
  opts.samples = 40;
  opts.flips_per_sample = 2;
  opts.out_csv = scratch("corr.csv");
  opts.report = scratch("corr.json");
  const json r = cmd_correlation(opts, log);
  CHECK(std::abs(r["result"]["pearson"].get<double>()) <= 1.0);
  CHECK(r["result"]["spearman"].get<double>() > 0.0);
  check_schema(load_json(*opts.report));
  CHECK(cmd_correlation(opts, log)["result"] == r["result"]);

  CorrelationOptions bad = opts;
  bad.samples = 2;
  CHECK_THROWS_AS(cmd_correlation(bad, log), ValidationError);
}

TEST_CASE("schema validator rejects malformed reports") {
  json report = make_report("attack", json::object());
  report["wall_ms"] = 1.0;
  check_schema(report);
  json broken = report;
  broken.erase("config");
  CHECK_FALSE(schema().validate(broken).empty());
  broken = report;
  broken["schema"] = "report_v2";
  CHECK_FALSE(schema().validate(broken).empty());
  broken = report;
  broken["input_hash"] = "xyz";
  CHECK_FALSE(schema().validate(broken).empty());
  broken = report;
  broken["extra"] = 1;
  CHECK_FALSE(schema().validate(broken).empty());
}

TEST_CASE("command line exit codes and reproducibility") {
  const std::string graph = scratch("cli_graph.txt").string();
  CHECK(run_cli("generate er --n 60 --p 0.1 --seed 3 --out " + graph) == 0);
  CHECK(run_cli("generate er --n 60 --p 1.5 --out " + graph + "_bad") == 2);
  CHECK(run_cli("generate grid --out " + graph + "_bad") == 2);
  CHECK(run_cli("bogus") == 2);
  CHECK(run_cli("attack --graph " + graph) == 2);

  const std::string base = "attack --graph " + graph + " --attacker stack --seed 5 ";
  const fs::path out_a = scratch("cli_a.txt");
  const fs::path out_b = scratch("cli_b.txt");
  const fs::path rep_a = scratch("cli_a.json");
  const fs::path rep_b = scratch("cli_b.json");
  REQUIRE(run_cli(base + "--out " + out_a.string() + " --report " + rep_a.string()) == 0);
  REQUIRE(run_cli(base + "--out " + out_b.string() + " --report " + rep_b.string()) == 0);
  CHECK(slurp(out_a) == slurp(out_b));
  CHECK(without_timing(load_json(rep_a)).dump() == without_timing(load_json(rep_b)).dump());
  check_schema(load_json(rep_a));

  CHECK(run_cli(base + "--budget 0 --out " + out_a.string()) == 2);
  CHECK(run_cli("attack --graph " + scratch("absent.txt").string() + " --out " + out_a.string()) == 3);
  {
    std::ofstream bad(scratch("malformed.txt"));
    bad << "3\n0 0\n";
  }
  CHECK(run_cli("attack --graph " + scratch("malformed.txt").string() + " --out " + out_a.string()) == 3);
  CHECK(run_cli("correlation --graph " + graph + " --samples 2") == 2);

  {
    std::ofstream empty(scratch("empty.txt"));
    empty << "5\n";
  }
  CHECK(run_cli("correlation --graph " + scratch("empty.txt").string() + " --samples 5") == 4);
}
