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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "attractorlab/attractor.h"
#include "attractorlab/complexity.h"
#include "attractorlab/error.h"
#include "attractorlab/generator_spec.h"
#include "attractorlab/lz.h"
#include "attractorlab/profile.h"
#include "attractorlab/theorems.h"
#include "attractorlab/word_io.h"
#include "json.hpp"

namespace attractorlab::cli {
namespace {

struct Config {
  std::string spec;
  std::string input;
  std::string word;
  std::optional<std::size_t> len;
  std::optional<std::size_t> n_max;
  std::string grid = "default";
  std::string measures = "s,span,lm,z";
  std::string format;
  std::size_t guard_gamma = AttractorGuards{}.exact_max_length;
  std::size_t guard_oracle = AttractorGuards{}.oracle_max_length;
  std::uint64_t seed = 42;
  std::optional<std::size_t> count;
  std::size_t query_length = 4;
  std::string suite;
  std::string out;
  bool guards_given = false;
};

struct Input {
  std::string source;  // spec text, or file:<path> with its content hash
  std::vector<Word> words;
};

AttractorGuards guards_of(const Config& c) {
  return AttractorGuards{c.guard_gamma, c.guard_oracle};
}

Input load_input(const Config& c, bool need_length) {
  int given = !c.spec.empty() + !c.input.empty() + !c.word.empty();
  if (given != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "give exactly one of --spec, --input, --word");
  }
  Input in;
  if (!c.input.empty()) {
    std::ifstream f(c.input, std::ios::binary);
    if (!f) throw Error(ErrorCode::kIo, "cannot open " + c.input);
    std::ostringstream bytes;
    bytes << f.rdbuf();
    std::istringstream text(bytes.str());
    in.words = read_words(text);
    in.source = "file:" + c.input + "#fnv1a64=" + content_hash(bytes.str());
    if (in.words.empty()) {
      throw Error(ErrorCode::kParse, c.input + " holds no word");
    }
    return in;
  }
  if (!c.word.empty()) {
    in.source = "word:" + c.word;
    in.words.push_back(Word::from_string(c.word));
    return in;
  }
  GeneratorSpec spec = GeneratorSpec::parse(c.spec);
  in.source = spec.str();
  std::optional<std::size_t> len = c.len ? c.len : c.n_max;
  if (!len) len = spec.natural_length();
  if (!len) {
    if (need_length) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--len is required for " + spec.str());
    }
    return in;
  }
  in.words.push_back(spec.prefix(*len));
  return in;
}

// Writes to --out when given, else to `out`.
void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + c.out);
  f << text;
}

std::string opt_str(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

// ---------------------------------------------------------------------------

int cmd_gen(const Config& c, std::ostream& out) {
  if (c.spec.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "gen needs --spec");
  }
  Input in = load_input(c, true);
  std::ostringstream s;
  write_words(s, in.words, /*with_alphabet_line=*/false);
  emit(c, s.str(), out);
  return kExitOk;
}

int cmd_measure(const Config& c, std::ostream& out) {
  Input in = load_input(c, true);
  const AttractorGuards guards = guards_of(c);
  const std::string format = c.format.empty() ? "table" : c.format;
  if (format != "table" && format != "json") {
    throw Error(ErrorCode::kInvalidArgument,
                "measure supports --format table|json");
  }
  bool flagged = false;
  std::ostringstream s;
  for (std::size_t k = 0; k < in.words.size(); ++k) {
    const Word& w = in.words[k];
    if (w.empty()) throw Error(ErrorCode::kInvalidArgument, "empty word");
    AttractorReport r = analyze(w, guards);
    std::size_t z = lz_parse(w).phrase_count();
    std::size_t m = c.query_length;
    std::optional<std::size_t> p, a;
    bool saturated = false;
    if (m >= 1 && m <= w.size()) {
      p = factor_complexity(w, m);
      Appearance ap = appearance(w, m);
      a = ap.value;
      saturated = ap.saturated;
    }
    std::vector<std::string> flags;
    if (!r.gamma_exact) flags.push_back("s:guard");
    if (!r.span_exact) flags.push_back("span:guard");
    if (!r.lm_exact) flags.push_back("lm:guard");
    if (!p) flags.push_back("p:short");
    if (a && !saturated) flags.push_back("A:unsaturated");
    flagged |= !r.gamma_exact || !r.span_exact || !r.lm_exact;

    std::string source = in.source;
    if (in.words.size() > 1) source += "@" + std::to_string(k + 1);
    if (format == "json") {
      nlohmann::ordered_json j;
      j["source"] = source;
      j["seed"] = c.seed;
      j["n"] = w.size();
      if (r.gamma_exact) {
        j["gamma_star"] = r.gamma_star;
        j["witness"] = r.witness_min.positions();
      }
      if (r.span_exact) {
        j["span"] = r.span;
        j["span_witness"] = {r.span_witness.first, r.span_witness.last};
      }
      if (r.lm_exact) j["lm"] = r.lm;
      j["z"] = z;
      j["query_length"] = m;
      if (p) j["p"] = *p;
      if (a) j["A"] = *a;
      j["flags"] = flags;
      s << j.dump() << '\n';
    } else {
      s << "source: " << source << '\n' << "seed: " << c.seed << '\n'
        << "n: " << w.size() << '\n';
      if (r.gamma_exact) {
        s << "gamma_star: " << r.gamma_star << '\n'
          << "witness: " << r.witness_min.str() << '\n';
      } else {
        s << "gamma_star: - (guard " << guards.exact_max_length << ")\n";
      }
      if (r.span_exact) {
        s << "span: " << r.span << " [" << r.span_witness.first << ","
          << r.span_witness.last << "]\n";
      } else {
        s << "span: -\n";
      }
      s << "lm: " << (r.lm_exact ? std::to_string(r.lm) : "-") << '\n'
        << "z: " << z << '\n'
        << "p(" << m << "): " << opt_str(p) << '\n'
        << "A(" << m << "): " << opt_str(a) << '\n';
      s << "flags:";
      for (const std::string& f : flags) s << ' ' << f;
      s << '\n';
      if (k + 1 < in.words.size()) s << '\n';
    }
  }
  emit(c, s.str(), out);
  return flagged ? kExitVacuous : kExitOk;
}

void write_profile_table(std::ostream& s, const ProfileTable& t,
                         std::uint64_t seed) {
  s << "# source: " << t.source << "\n# query_length: " << t.query_length
    << "\n# seed: " << seed << '\n';
  s << std::setw(8) << "n" << std::setw(6) << "s" << std::setw(7) << "span"
    << std::setw(7) << "lm" << std::setw(7) << "p" << std::setw(8) << "A"
    << std::setw(7) << "z" << "  flags\n";
  for (const ProfileRow& r : t.rows) {
    s << std::setw(8) << r.n << std::setw(6) << opt_str(r.s) << std::setw(7)
      << opt_str(r.span) << std::setw(7) << opt_str(r.lm) << std::setw(7)
      << opt_str(r.p) << std::setw(8) << opt_str(r.A) << std::setw(7)
      << opt_str(r.z) << "  ";
    for (std::size_t i = 0; i < r.flags.size(); ++i)
      s << (i ? ";" : "") << r.flags[i];
    s << '\n';
  }
}

int cmd_profile(const Config& c, std::ostream& out) {
  ProfileOptions o;
  o.measures = MeasureSet::parse(c.measures);
  o.grid = SampleGrid::parse(c.grid);
  o.guards = guards_of(c);
  o.query_length = c.query_length;
  const std::string format = c.format.empty() ? "csv" : c.format;
  if (format != "csv" && format != "json" && format != "table") {
    throw Error(ErrorCode::kInvalidArgument,
                "profile supports --format csv|json|table");
  }
  ProfileTable table;
  if (!c.spec.empty()) {
    if (!c.input.empty() || !c.word.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "give exactly one of --spec, --input, --word");
    }
    GeneratorSpec spec = GeneratorSpec::parse(c.spec);
    std::optional<std::size_t> n_max = c.n_max ? c.n_max : c.len;
    if (!n_max) n_max = spec.natural_length();
    if (!n_max) {
      throw Error(ErrorCode::kInvalidArgument, "--nmax is required");
    }
    table = profile(spec, *n_max, o);
  } else {
    Input in = load_input(c, true);
    if (in.words.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "profile takes a file holding exactly one word");
    }
    std::size_t n_max = c.n_max.value_or(in.words[0].size());
    table = profile(in.words[0], in.source, n_max, o);
  }
  std::ostringstream s;
  if (format == "csv") write_csv(s, table, c.seed);
  else if (format == "json") write_jsonl(s, table, c.seed);
  else write_profile_table(s, table, c.seed);
  emit(c, s.str(), out);
  return kExitOk;
}

// Columns of the summary table next to the checked s-values.
const std::map<std::string, std::pair<std::string, std::string>>&
figure1_columns() {
  static const std::map<std::string, std::pair<std::string, std::string>> m = {
      {"Period-doubling word", {"Theta(n)", "Linearly recurrent"}},
      {"Thue-Morse word", {"Theta(n)", "Linearly recurrent"}},
      {"Holub word", {"Theta(n)", "Uniformly recurrent"}},
      {"Charact. Sturmian word", {"Theta(n)", "Uniformly recurrent"}},
      {"Char. seq. of powers of 2", {"Theta(n)", "Not recurrent"}},
      {"(5,3)-Toeplitz word", {"Theta(n^3.15)", "Uniformly recurrent"}},
  };
  return m;
}

void write_check_table(std::ostream& s, const CheckResult& r,
                       std::uint64_t seed) {
  s << "suite: " << r.name << "\nuniverse: " << r.universe
    << "\nseed: " << seed << "\nverdict: " << verdict_name(r.verdict)
    << "\n\n";
  bool fig1 = r.name == "figure1";
  std::size_t w = 5;
  for (const Cell& c : r.cells) w = std::max(w, c.label.size());
  s << std::left << std::setw(static_cast<int>(w)) << (fig1 ? "word" : "check");
  if (fig1) s << " | " << std::setw(13) << "p_x(n)" << " | "
              << std::setw(19) << "recurrence";
  s << " | expected | observed | verdict\n";
  for (const Cell& c : r.cells) {
    s << std::setw(static_cast<int>(w)) << c.label;
    if (fig1) {
      auto it = figure1_columns().find(c.label);
      std::pair<std::string, std::string> cols{"", ""};
      if (it != figure1_columns().end()) cols = it->second;
      s << " | " << std::setw(13) << cols.first << " | " << std::setw(19)
        << cols.second;
    }
    s << " | " << c.expected << " | " << c.observed << " | "
      << verdict_name(c.verdict) << '\n';
  }
  if (r.counterexample) {
    s << "\ncounterexample: " << r.counterexample->spec << " n="
      << r.counterexample->n << ": " << r.counterexample->detail << '\n';
  }
  s << std::right;
}

int cmd_verify(const Config& c, std::ostream& out) {
  SuiteOptions o;
  o.seed = c.seed;
  o.count = c.count;
  o.n_max = c.n_max;
  if (c.guards_given) o.guards = guards_of(c);
  const std::string format = c.format.empty() ? "json" : c.format;
  if (format != "json" && format != "table") {
    throw Error(ErrorCode::kInvalidArgument,
                "verify supports --format json|table");
  }
  CheckResult r = run_suite(c.suite, o);
  std::ostringstream s;
  if (format == "json") s << to_json(r, c.seed) << '\n';
  else write_check_table(s, r, c.seed);
  emit(c, s.str(), out);
  switch (r.verdict) {
    case Verdict::kPass: return kExitOk;
    case Verdict::kFail: return kExitFail;
    case Verdict::kVacuous: return kExitVacuous;
  }
  return kExitError;
}

void add_source_options(CLI::App* sub, Config& c) {
  sub->add_option("--spec", c.spec, "generator spec, e.g. sturmian:1,(1)");
  sub->add_option("--input", c.input, "word file");
  sub->add_option("--word", c.word, "literal word");
  sub->add_option("--len", c.len, "prefix length");
}

void add_guard_options(CLI::App* sub, Config& c) {
  sub->add_option("--guard-gamma", c.guard_gamma,
                  "longest word for exact gamma*, span, lm")
      ->check(CLI::PositiveNumber);
  sub->add_option("--guard-oracle", c.guard_oracle,
                  "longest word for the exhaustive oracle")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Config c;
  CLI::App app{"String attractor measures on prefixes of infinite words",
               "attractorlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  CLI::App* gen = app.add_subcommand("gen", "write a generated prefix");
  gen->add_option("--spec", c.spec, "generator spec")->required();
  gen->add_option("--len", c.len, "prefix length");
  gen->add_option("--out", c.out, "output path");

  CLI::App* measure = app.add_subcommand("measure", "measures of one word");
  add_source_options(measure, c);
  add_guard_options(measure, c);
  measure->add_option("--query-length", c.query_length,
                      "factor length for p and A");
  measure->add_option("--format", c.format, "table|json");
  measure->add_option("--seed", c.seed, "recorded in the report");
  measure->add_option("--out", c.out, "output path");

  CLI::App* prof = app.add_subcommand("profile", "per-prefix measure table");
  add_source_options(prof, c);
  add_guard_options(prof, c);
  prof->add_option("--nmax", c.n_max, "longest prefix");
  prof->add_option("--grid", c.grid, "all|pow2|default|list:1,2,3");
  prof->add_option("--measures", c.measures, "subset of s,span,lm,p,A,z");
  prof->add_option("--query-length", c.query_length,
                   "factor length for p and A");
  prof->add_option("--format", c.format, "csv|json|table");
  prof->add_option("--seed", c.seed, "recorded in the output");
  prof->add_option("--out", c.out, "output path");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suites;
  for (const std::string& s : suite_names()) suites += (suites.empty() ? "" : "|") + s;
  verify->add_option("--suite", c.suite, suites)->required();
  add_guard_options(verify, c);
  verify->add_option("--seed", c.seed, "seed of randomized suites");
  verify->add_option("--count", c.count, "sample count of randomized suites");
  verify->add_option("--nmax", c.n_max, "longest prefix");
  verify->add_option("--format", c.format, "json|table");
  verify->add_option("--out", c.out, "report path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  c.guards_given = verify->count("--guard-gamma") > 0 ||
                   verify->count("--guard-oracle") > 0;

  try {
    if (gen->parsed()) return cmd_gen(c, out);
    if (measure->parsed()) return cmd_measure(c, out);
    if (prof->parsed()) return cmd_profile(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace attractorlab::cli
