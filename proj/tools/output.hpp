// Copyright 2026 The unop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace unop::cli {

enum class Format { json, csv, table };

/// One output document: the JSON form is authoritative, the CSV and table
/// forms render `rows` under `header` followed by summary lines.
struct Report {
    nlohmann::json document;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> summary;
};

std::string render(const Report &report, Format format);

/// Shortest round-trippable text for a double.
std::string format_double(double v);

} // namespace unop::cli
