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

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "stack/attack.hpp"
#include "stack/evaluate.hpp"

namespace stack::cli {

inline constexpr std::string_view kReportSchema = "report_v1";

/// Git blob id of the bytes: sha1("blob <size>\0" + bytes), lowercase hex.
std::string git_blob_hash(std::string_view bytes);
std::string git_blob_hash_of_file(const std::filesystem::path& path);

nlohmann::json to_json(const AttackResult& result);
nlohmann::json to_json(const EvalReport& report);
nlohmann::json to_json(const MacroScores& scores);

/// Skeleton {schema, command, config}; callers fill the rest.
nlohmann::json make_report(std::string_view command, nlohmann::json config);

/// Writes the report with sorted keys, two-space indent and a trailing newline.
void write_report(const nlohmann::json& report, const std::filesystem::path& path);

/// Copy without timing fields, for reproducibility comparisons.
nlohmann::json without_timing(nlohmann::json report);

}  // namespace stack::cli
