// Copyright 2026 The AttractorLab Authors
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

#include "attractorlab/profile.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "attractorlab/complexity.h"
#include "attractorlab/error.h"
#include "attractorlab/lz.h"
#include "json.hpp"

namespace attractorlab {
namespace {

struct MeasureName {
  Measure measure;
  std::string_view name;
};

constexpr MeasureName kMeasureNames[] = {
    {Measure::kS, "s"}, {Measure::kSpan, "span"}, {Measure::kLm, "lm"},
    {Measure::kP, "p"}, {Measure::kA, "A"},       {Measure::kZ, "z"},
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at == std::string_view::npos
                                         ? std::string_view::npos
                                         : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

std::size_t parse_size(std::string_view token, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParse, std::string(what) + ": bad number '" +
                                       std::string(token) + "'");
  }
  return v;
}

std::string cell(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::optional<std::size_t> read_cell(std::string_view token) {
  if (token.empty()) return std::nullopt;
  return parse_size(token, "csv");
}

}  // namespace

MeasureSet::MeasureSet(std::initializer_list<Measure> measures) {
  for (Measure m : measures) add(m);
}

MeasureSet MeasureSet::all() {
  MeasureSet s;
  for (const auto& [m, name] : kMeasureNames) s.add(m);
  return s;
}

MeasureSet MeasureSet::parse(std::string_view text) {
  MeasureSet s;
  for (std::string_view token : split(text, ',')) {
    auto it = std::find_if(std::begin(kMeasureNames), std::end(kMeasureNames),
                           [&](const MeasureName& m) { return m.name == token; });
    if (it == std::end(kMeasureNames)) {
      throw Error(ErrorCode::kParse,
                  "unknown measure '" + std::string(token) + "'");
    }
    s.add(it->measure);
  }
  return s;
}

std::string MeasureSet::str() const {
  std::string out;
  for (const auto& [m, name] : kMeasureNames) {
    if (!has(m)) continue;
    if (!out.empty()) out += ',';
    out += name;
  }
  return out;
}

SampleGrid SampleGrid::list(std::vector<std::size_t> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty() || points.front() == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "sample list needs positive lengths");
  }
  return SampleGrid(Kind::kList, std::move(points));
}

SampleGrid SampleGrid::parse(std::string_view text) {
  if (text == "all") return all();
  if (text == "pow2") return pow2();
  if (text == "default") return SampleGrid();
  if (text.substr(0, 5) == "list:") {
    std::vector<std::size_t> points;
    for (std::string_view t : split(text.substr(5), ','))
      points.push_back(parse_size(t, "grid"));
    try {
      return list(std::move(points));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, e.what());
    }
  }
  throw Error(ErrorCode::kParse, "unknown grid '" + std::string(text) + "'");
}

std::vector<std::size_t> SampleGrid::points(std::size_t n_max) const {
  std::vector<std::size_t> out;
  switch (kind_) {
    case Kind::kAll:
      for (std::size_t n = 1; n <= n_max; ++n) out.push_back(n);
      break;
    case Kind::kPow2:
      for (std::size_t n = 1; n <= n_max; n *= 2) out.push_back(n);
      break;
    case Kind::kList:
      for (std::size_t n : list_)
        if (n <= n_max) out.push_back(n);
      break;
    case Kind::kDefault:
      for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 256); ++n)
        out.push_back(n);
      for (std::size_t n = 512; n <= n_max; n *= 2) out.push_back(n);
      break;
  }
  return out;
}

std::string SampleGrid::str() const {
  switch (kind_) {
    case Kind::kAll: return "all";
    case Kind::kPow2: return "pow2";
    case Kind::kDefault: return "default";
    case Kind::kList: {
      std::string s = "list:";
      for (std::size_t i = 0; i < list_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(list_[i]);
      }
      return s;
    }
  }
  return "";
}

ProfileRow profile_row(const Word& prefix, const ProfileOptions& options) {
  ProfileRow row;
  row.n = prefix.size();
  const MeasureSet& ms = options.measures;
  bool want_attractor =
      ms.has(Measure::kS) || ms.has(Measure::kSpan) || ms.has(Measure::kLm);
  if (want_attractor) {
    if (row.n > options.guards.exact_max_length) {
      for (auto [m, flag] : {std::pair{Measure::kS, "s:guard"},
                             std::pair{Measure::kSpan, "span:guard"},
                             std::pair{Measure::kLm, "lm:guard"}}) {
        if (ms.has(m)) row.flags.push_back(flag);
      }
    } else {
      FactorIndex index(prefix);
      if (ms.has(Measure::kS)) row.s = gamma_star(index).size;
      if (ms.has(Measure::kSpan)) row.span = span(index).value;
      if (ms.has(Measure::kLm)) row.lm = lm(index);
    }
  }
  const std::size_t q = options.query_length;
  if (ms.has(Measure::kP)) {
    if (q >= 1 && q <= row.n) {
      row.p = factor_complexity(prefix, q);
    } else {
      row.flags.push_back("p:short");
    }
  }
  if (ms.has(Measure::kA)) {
    if (q >= 1 && q <= row.n) {
      Appearance a = appearance(prefix, q);
      row.A = a.value;
      if (!a.saturated) row.flags.push_back("A:unsaturated");
    } else {
      row.flags.push_back("A:short");
    }
  }
  if (ms.has(Measure::kZ)) row.z = lz_parse(prefix).phrase_count();
  return row;
}

ProfileTable profile(const Word& word, std::string source, std::size_t n_max,
                     const ProfileOptions& options) {
  if (n_max == 0 || n_max > word.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "n_max must lie in [1, " + std::to_string(word.size()) + "]");
  }
  ProfileTable table;
  table.source = std::move(source);
  table.query_length = options.query_length;
  for (std::size_t n : options.grid.points(n_max))
    table.rows.push_back(profile_row(word.prefix(n), options));
  return table;
}

ProfileTable profile(const GeneratorSpec& spec, std::size_t n_max,
                     const ProfileOptions& options) {
  if (n_max == 0) throw Error(ErrorCode::kOutOfRange, "n_max must be positive");
  return profile(spec.prefix(n_max), spec.str(), n_max, options);
}

void write_csv(std::ostream& out, const ProfileTable& table,
               std::optional<std::uint64_t> seed) {
  out << "# source: " << table.source << '\n';
  out << "# query_length: " << table.query_length << '\n';
  if (seed) out << "# seed: " << *seed << '\n';
  out << "n,s,span,lm,p,A,z,flags\n";
  for (const ProfileRow& r : table.rows) {
    out << r.n << ',' << cell(r.s) << ',' << cell(r.span) << ','
        << cell(r.lm) << ',' << cell(r.p) << ',' << cell(r.A) << ','
        << cell(r.z) << ',';
    for (std::size_t i = 0; i < r.flags.size(); ++i) {
      if (i) out << ';';
      out << r.flags[i];
    }
    out << '\n';
  }
}

ProfileTable read_csv(std::istream& in) {
  ProfileTable table;
  std::string line;
  bool header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string_view body = std::string_view(line).substr(1);
      while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      std::size_t colon = body.find(':');
      if (colon == std::string_view::npos) continue;
      std::string_view key = body.substr(0, colon);
      std::string_view value = body.substr(colon + 1);
      while (!value.empty() && value.front() == ' ') value.remove_prefix(1);
      if (key == "source") table.source = std::string(value);
      if (key == "query_length")
        table.query_length = parse_size(value, "query_length");
      continue;
    }
    if (!header) {
      if (line != "n,s,span,lm,p,A,z,flags") {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                           ": unexpected header");
      }
      header = true;
      continue;
    }
    auto cells = split(line, ',');
    if (cells.size() != 8) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": expected 8 fields");
    }
    ProfileRow r;
    r.n = parse_size(cells[0], "csv");
    r.s = read_cell(cells[1]);
    r.span = read_cell(cells[2]);
    r.lm = read_cell(cells[3]);
    r.p = read_cell(cells[4]);
    r.A = read_cell(cells[5]);
    r.z = read_cell(cells[6]);
    if (!cells[7].empty())
      for (std::string_view f : split(cells[7], ';'))
        r.flags.emplace_back(f);
    table.rows.push_back(std::move(r));
  }
  if (!header) throw Error(ErrorCode::kParse, "missing csv header");
  return table;
}

void write_jsonl(std::ostream& out, const ProfileTable& table,
                 std::optional<std::uint64_t> seed) {
  for (const ProfileRow& r : table.rows) {
    nlohmann::ordered_json j;
    j["source"] = table.source;
    if (seed) j["seed"] = *seed;
    j["n"] = r.n;
    auto put = [&](const char* key, const std::optional<std::size_t>& v) {
      if (v) j[key] = *v;
      else j[key] = nullptr;
    };
    put("s", r.s);
    put("span", r.span);
    put("lm", r.lm);
    put("p", r.p);
    j["query_length"] = table.query_length;
    put("A", r.A);
    put("z", r.z);
    j["flags"] = r.flags;
    out << j.dump() << '\n';
  }
}

}  // namespace attractorlab
