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

#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace unop::cli {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string render_csv(const Report &r) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "," : "") << cells[i];
        }
        os << '\n';
    };
    line(r.header);
    for (const auto &row : r.rows) {
        line(row);
    }
    return os.str();
}

std::string render_table(const Report &r) {
    std::vector<std::size_t> width(r.header.size(), 0);
    auto widen = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) {
            width[i] = std::max(width[i], cells[i].size());
        }
    };
    widen(r.header);
    for (const auto &row : r.rows) {
        widen(row);
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "  " : "") << cells[i];
            if (i + 1 < cells.size() && i < width.size()) {
                os << std::string(width[i] - cells[i].size(), ' ');
            }
        }
        os << '\n';
    };
    line(r.header);
    std::vector<std::string> rule;
    for (std::size_t w : width) {
        rule.emplace_back(w, '-');
    }
    line(rule);
    for (const auto &row : r.rows) {
        line(row);
    }
    for (const auto &s : r.summary) {
        os << s << '\n';
    }
    return os.str();
}

} // namespace

std::string render(const Report &report, Format format) {
    switch (format) {
    case Format::json:
        return report.document.dump(2) + "\n";
    case Format::csv:
        return render_csv(report);
    case Format::table:
        return render_table(report);
    }
    return {};
}

} // namespace unop::cli
