// Copyright 2026 The tisched Authors
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

#include "tisched/bench.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "tisched/instance_io.hpp"

namespace tisched {

std::string Gap::to_string() const {
  if (thousandths == 0) return "0";
  std::ostringstream out;
  const std::int64_t magnitude = thousandths < 0 ? -thousandths : thousandths;
  if (thousandths < 0) out << '-';
  out << magnitude / 1000 << '.' << std::setw(3) << std::setfill('0') << magnitude % 1000;
  return out.str();
}

std::optional<Gap> compute_gap(Time best, Time obj) {
  if (obj == best) return Gap{0};
  if (obj == 0) return std::nullopt;
  // Integer division truncates toward zero.
  return Gap{(obj - best) * 1000 / obj};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::map<std::string, Time> parse_reference_csv(std::string_view text) {
  std::map<std::string, Time> reference;
  std::size_t pos = 0;
  int line_number = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_number;
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::kParse,
                  "reference line " + std::to_string(line_number) + ": expected 'instance,best'");
    }
    const auto name = trim(line.substr(0, comma));
    const auto value = trim(line.substr(comma + 1));
    Time best = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), best);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      if (reference.empty() && line_number == 1) continue;  // header
      throw Error(ErrorCode::kParse, "reference line " + std::to_string(line_number) +
                                         ": best value is not an integer");
    }
    reference[std::string(name)] = best;
  }
  return reference;
}

std::vector<BenchRow> run_bench(const std::filesystem::path& dir,
                                const std::map<std::string, Time>& reference,
                                const SearchConfig& config) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<BenchRow> rows;
  for (const auto& file : files) {
    const Instance instance = load_instance(file);
    BenchRow row;
    row.instance = file.stem().string();
    row.interventions = static_cast<int>(instance.interventions.size());
    row.technicians = static_cast<int>(instance.technicians.size());
    row.domains = instance.domains;
    row.levels = instance.levels;
    row.obj = solve(instance, config).solution.objective.z;
    if (auto it = reference.find(row.instance); it != reference.end()) {
      row.best = it->second;
      row.gap = compute_gap(it->second, row.obj);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_table(const std::vector<BenchRow>& rows) {
  const std::vector<std::string> header{"instance", "int.", "tec.", "dom.",
                                        "lev.",     "best obj", "obj.", "gap"};
  std::vector<std::vector<std::string>> cells{header};
  for (const auto& row : rows) {
    cells.push_back({row.instance, std::to_string(row.interventions),
                     std::to_string(row.technicians), std::to_string(row.domains),
                     std::to_string(row.levels), row.best ? std::to_string(*row.best) : "",
                     std::to_string(row.obj), row.gap ? row.gap->to_string() : ""});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c == 0) {
        out << std::left << std::setw(static_cast<int>(width[c])) << line[c];
      } else {
        out << "  " << std::right << std::setw(static_cast<int>(width[c])) << line[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tisched
