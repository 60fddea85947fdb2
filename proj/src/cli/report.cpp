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

#include "stack/cli/report.hpp"

#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>

#include <openssl/evp.h>

#include "stack/errors.hpp"

namespace stack::cli {

std::string git_blob_hash(std::string_view bytes) {
  const std::string header = "blob " + std::to_string(bytes.size()) + '\0';
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) throw NumericalError("cannot allocate hash context");
  const bool ok = EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) == 1 &&
                  EVP_DigestUpdate(ctx, header.data(), header.size()) == 1 &&
                  EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) == 1 &&
                  EVP_DigestFinal_ex(ctx, digest, &length) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw NumericalError("sha1 digest failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::string git_blob_hash_of_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return git_blob_hash(bytes);
}

nlohmann::json to_json(const MacroScores& s) {
  return {{"f1", s.f1}, {"precision", s.precision}, {"recall", s.recall}};
}

nlohmann::json to_json(const AttackResult& r) {
  nlohmann::json flips = nlohmann::json::array();
  for (const EdgeFlip& f : r.flips) flips.push_back({f.p, f.q, f.delta});
  nlohmann::json out = {
      {"attacker", r.attacker},
      {"flips", flips},
      {"scores", r.scores},
      {"restarts", r.restarts},
      {"final_l1", r.final_l1},
      {"final_l2_exact", r.final_l2_exact},
      {"exhausted", r.exhausted},
  };
  if (!r.objectives.empty()) out["objectives"] = r.objectives;
  return out;
}

nlohmann::json to_json(const EvalReport& e) {
  return {
      {"victim", e.victim},
      {"seeds", e.seeds},
      {"clean", {{"mean", to_json(e.clean.mean)}, {"std", to_json(e.clean.std)}}},
      {"attacked", {{"mean", to_json(e.attacked.mean)}, {"std", to_json(e.attacked.std)}}},
      {"drop_pp", to_json(e.drop_pp)},
      {"drop_std_pp", to_json(e.drop_std_pp)},
  };
}

nlohmann::json make_report(std::string_view command, nlohmann::json config) {
  return {{"schema", std::string(kReportSchema)}, {"command", std::string(command)}, {"config", std::move(config)}};
}

void write_report(const nlohmann::json& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << report.dump(2) << '\n';
  if (!out) throw IoError("failed writing " + path.string());
}

nlohmann::json without_timing(nlohmann::json report) {
  report.erase("wall_ms");
  return report;
}

}  // namespace stack::cli
