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

#include "tisched/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace tisched {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = eol + 1;
  }
  return lines;
}

[[noreturn]] void syntax(int line, const std::string& message) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + message);
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool at_end() const { return next_ >= lines_.size(); }
  const Line& peek() const { return lines_[next_]; }
  const Line& take(std::string_view what) {
    if (at_end()) {
      const int last = lines_.empty() ? 0 : lines_.back().number;
      syntax(last + 1, "unexpected end of document, expected " + std::string(what));
    }
    return lines_[next_++];
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

std::int64_t to_int(std::string_view token, int line) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    syntax(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

int to_int32(std::string_view token, int line) {
  const std::int64_t v = to_int(token, line);
  if (v < INT32_MIN || v > INT32_MAX) syntax(line, "integer out of range");
  return static_cast<int>(v);
}

std::int64_t header(Cursor& cursor, std::string_view keyword) {
  const Line& line = cursor.take(keyword);
  if (line.tokens.size() != 2 || line.tokens[0] != keyword) {
    syntax(line.number, "expected '" + std::string(keyword) + " <int>'");
  }
  return to_int(line.tokens[1], line.number);
}

[[noreturn]] void semantic(const std::string& message) {
  throw Error(ErrorCode::kSemantic, message);
}

template <typename Record>
std::vector<Record> place_by_id(std::vector<Record> records, const char* what) {
  const int n = static_cast<int>(records.size());
  std::vector<Record> placed(n);
  std::vector<char> seen(n, 0);
  for (auto& r : records) {
    if (r.id < 0 || r.id >= n) {
      semantic(std::string(what) + " id " + std::to_string(r.id) +
               " outside dense range 0.." + std::to_string(n - 1));
    }
    if (seen[r.id]) semantic(std::string("duplicate ") + what + " id " + std::to_string(r.id));
    seen[r.id] = 1;
    const int id = r.id;
    placed[id] = std::move(r);
  }
  return placed;
}

}  // namespace

Instance parse_instance(std::string_view text, const ParseOptions& options) {
  Cursor cursor(tokenize(text));
  Instance instance;
  const std::int64_t hmax = header(cursor, "HMAX");
  instance.budget = header(cursor, "BUDGET");
  const std::int64_t domains = header(cursor, "DOMAINS");
  const std::int64_t levels = header(cursor, "LEVELS");
  if (hmax <= 0 || hmax > INT32_MAX) semantic("HMAX must be a positive int");
  if (domains < 0 || domains > 10000) semantic("DOMAINS out of range");
  if (levels < 0 || levels > 10000) semantic("LEVELS out of range");
  instance.hmax = static_cast<int>(hmax);
  instance.domains = static_cast<int>(domains);
  instance.levels = static_cast<int>(levels);
  const int D = instance.domains;
  const int L = instance.levels;

  const std::int64_t n_tech = header(cursor, "TECHNICIANS");
  if (n_tech < 0) semantic("TECHNICIANS count must be non-negative");
  std::vector<Technician> techs;
  for (std::int64_t k = 0; k < n_tech; ++k) {
    const Line& line = cursor.take("a technician record");
    const auto& tok = line.tokens;
    if (static_cast<int>(tok.size()) < 1 + D) {
      syntax(line.number, "technician record needs an id and " +
                              std::to_string(D) + " skill levels");
    }
    Technician tech;
    tech.id = to_int32(tok[0], line.number);
    for (int d = 0; d < D; ++d) tech.skills.push_back(to_int32(tok[1 + d], line.number));
    std::size_t i = 1 + D;
    if (i < tok.size()) {
      if (tok[i] != "U") syntax(line.number, "expected 'U' before unavailable days");
      for (++i; i < tok.size(); ++i) {
        tech.unavailable_days.push_back(to_int32(tok[i], line.number));
      }
    }
    techs.push_back(std::move(tech));
  }
  instance.technicians = place_by_id(std::move(techs), "technician");

  const std::int64_t n_jobs = header(cursor, "INTERVENTIONS");
  if (n_jobs < 0) semantic("INTERVENTIONS count must be non-negative");
  std::vector<Intervention> jobs;
  for (std::int64_t k = 0; k < n_jobs; ++k) {
    const Line& line = cursor.take("an intervention record");
    const auto& tok = line.tokens;
    if (tok.size() < 6 || tok[4] != "P") {
      syntax(line.number,
             "intervention record must read '<id> <duration> <priority> <cost> P ... R ...'");
    }
    Intervention job;
    job.id = to_int32(tok[0], line.number);
    job.duration = to_int32(tok[1], line.number);
    job.priority = to_int32(tok[2], line.number);
    job.cost = to_int(tok[3], line.number);
    std::size_t i = 5;
    for (; i < tok.size() && tok[i] != "R"; ++i) {
      job.predecessors.push_back(to_int32(tok[i], line.number));
    }
    if (i == tok.size()) syntax(line.number, "missing 'R' requirement section");
    ++i;
    if (tok.size() - i != static_cast<std::size_t>(D) * static_cast<std::size_t>(L)) {
      syntax(line.number, "requirement section needs " + std::to_string(D * L) +
                              " integers, got " + std::to_string(tok.size() - i));
    }
    job.requirements.assign(D, std::vector<int>(L, 0));
    for (int d = 0; d < D; ++d) {
      for (int l = 0; l < L; ++l) job.requirements[d][l] = to_int32(tok[i++], line.number);
      if (options.per_level_requirements) {
        for (int l = L - 2; l >= 0; --l) job.requirements[d][l] += job.requirements[d][l + 1];
      }
    }
    jobs.push_back(std::move(job));
  }
  instance.interventions = place_by_id(std::move(jobs), "intervention");

  if (!cursor.at_end()) syntax(cursor.peek().number, "trailing content after interventions");
  validate(instance);
  return instance;
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "HMAX " << instance.hmax << '\n'
      << "BUDGET " << instance.budget << '\n'
      << "DOMAINS " << instance.domains << '\n'
      << "LEVELS " << instance.levels << '\n'
      << "TECHNICIANS " << instance.technicians.size() << '\n';
  for (const auto& tech : instance.technicians) {
    out << tech.id;
    for (int s : tech.skills) out << ' ' << s;
    if (!tech.unavailable_days.empty()) {
      out << " U";
      for (int d : tech.unavailable_days) out << ' ' << d;
    }
    out << '\n';
  }
  out << "INTERVENTIONS " << instance.interventions.size() << '\n';
  for (const auto& job : instance.interventions) {
    out << job.id << ' ' << job.duration << ' ' << job.priority << ' ' << job.cost << " P";
    for (int p : job.predecessors) out << ' ' << p;
    out << " R";
    for (const auto& row : job.requirements) {
      for (int r : row) out << ' ' << r;
    }
    out << '\n';
  }
  return out.str();
}

Solution parse_solution(std::string_view text, const Instance& instance) {
  Cursor cursor(tokenize(text));
  Solution solution;
  const int n = static_cast<int>(instance.interventions.size());
  const int n_tech = static_cast<int>(instance.technicians.size());
  std::vector<char> seen(n, 0);

  auto intervention_id = [&](std::string_view token, int line) {
    const int id = to_int32(token, line);
    if (id < 0 || id >= n) {
      throw Error(ErrorCode::kUnknownId, "line " + std::to_string(line) +
                                             ": unknown intervention id " + std::to_string(id));
    }
    if (seen[id]) {
      throw Error(ErrorCode::kDuplicateAssignment,
                  "line " + std::to_string(line) + ": intervention " + std::to_string(id) +
                      " appears more than once");
    }
    seen[id] = 1;
    return id;
  };

  const Line& hired = cursor.take("HIRED");
  if (hired.tokens.empty() || hired.tokens[0] != "HIRED") {
    syntax(hired.number, "solution must start with 'HIRED <ids...>'");
  }
  for (std::size_t i = 1; i < hired.tokens.size(); ++i) {
    solution.hired.push_back(intervention_id(hired.tokens[i], hired.number));
  }

  bool has_objective = false;
  while (!cursor.at_end()) {
    const Line& line = cursor.take("an assignment");
    const auto& tok = line.tokens;
    if (tok[0] == "OBJ") {
      if (tok.size() != 2 + kPriorityCount) syntax(line.number, "OBJ needs t1 t2 t3 t4 z");
      for (int k = 0; k < kPriorityCount; ++k) {
        solution.objective.ending[k] = to_int(tok[1 + k], line.number);
      }
      solution.objective.z = to_int(tok[1 + kPriorityCount], line.number);
      has_objective = true;
      if (!cursor.at_end()) syntax(cursor.peek().number, "content after OBJ line");
      break;
    }
    if (tok.size() < 4 || tok[3] != "T") {
      syntax(line.number, "assignment must read '<id> <day> <start> T <technicians...>'");
    }
    Assignment a;
    a.intervention = intervention_id(tok[0], line.number);
    a.day = to_int32(tok[1], line.number);
    a.start = to_int(tok[2], line.number);
    for (std::size_t i = 4; i < tok.size(); ++i) {
      const int t = to_int32(tok[i], line.number);
      if (t < 0 || t >= n_tech) {
        throw Error(ErrorCode::kUnknownId, "line " + std::to_string(line.number) +
                                               ": unknown technician id " + std::to_string(t));
      }
      a.team.push_back(t);
    }
    solution.assignments.push_back(std::move(a));
  }
  if (!has_objective) solution.objective = evaluate(instance, solution);
  return solution;
}

std::string serialize_solution(const Solution& solution) {
  std::ostringstream out;
  out << "HIRED";
  for (int id : solution.hired) out << ' ' << id;
  out << '\n';
  for (const auto& a : solution.assignments) {
    out << a.intervention << ' ' << a.day << ' ' << a.start << " T";
    for (int t : a.team) out << ' ' << t;
    out << '\n';
  }
  out << "OBJ";
  for (Time t : solution.objective.ending) out << ' ' << t;
  out << ' ' << solution.objective.z << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kConfig, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kConfig, "failed writing " + path.string());
}

Instance load_instance(const std::filesystem::path& path, const ParseOptions& options) {
  return parse_instance(read_text_file(path), options);
}

Solution load_solution(const std::filesystem::path& path, const Instance& instance) {
  return parse_solution(read_text_file(path), instance);
}

}  // namespace tisched
