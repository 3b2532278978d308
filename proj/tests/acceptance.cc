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

// Acceptance run: one PASS/FAIL line per criterion with the measured time
// against its budget. Exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "attractorlab/attractor.h"
#include "attractorlab/complexity.h"
#include "attractorlab/factor_index.h"
#include "attractorlab/generator_spec.h"
#include "attractorlab/generators.h"
#include "attractorlab/lz.h"
#include "attractorlab/sequences.h"
#include "attractorlab/theorems.h"
#include "attractorlab/word.h"

namespace al = attractorlab;

namespace {

const al::AttractorGuards kGuards{2100, 16};

struct Row {
  std::size_t s = 0;
  std::size_t span = 0;
  std::size_t lm = 0;
  std::size_t z = 0;
};

// A word together with the prefixes some criterion measured.
struct Touched {
  std::string name;
  al::Word x;
  std::map<std::size_t, Row> rows;

  const Row& at(std::size_t n) {
    auto it = rows.find(n);
    if (it != rows.end()) return it->second;
    al::Word p = x.prefix(n);
    al::FactorIndex index(p);
    Row r;
    r.s = al::gamma_star(index).size;
    r.span = al::span(index).value;
    r.lm = al::lm(index);
    r.z = al::lz_parse(p).phrase_count();
    return rows.emplace(n, r).first->second;
  }
};

// deque: references handed out by touch() survive later insertions.
std::deque<Touched> touched;

Touched& touch(const std::string& name, const al::Word& x) {
  for (Touched& t : touched)
    if (t.name == name) return t;
  touched.push_back({name, x, {}});
  return touched.back();
}

Touched& touch_spec(const std::string& spec, std::size_t len) {
  return touch(spec, al::GeneratorSpec::parse(spec).prefix(len));
}

std::string str(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s,
               const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                           t0)
                 .count();
  if (o.ok && budget_s > 0 && s > budget_s) {
    o.ok = false;
    o.note = "over time budget";
  }
  if (!o.ok) ++failures;
  std::printf("%s  %2d  %-44s %8.2f s / %s", o.ok ? "PASS" : "FAIL", id,
              title, s,
              budget_s > 0 ? (std::to_string(static_cast<int>(budget_s)) +
                              " s")
                                 .c_str()
                           : "none");
  if (!o.note.empty()) std::printf("  [%s]", o.note.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

al::PositionSet P(std::vector<std::size_t> g, std::size_t n) {
  return al::PositionSet(std::move(g), n);
}

Outcome fixture_example1() {
  Outcome o;
  al::Word w = al::Word::from_string("adcbaadcbadc");
  Touched& t = touch("adcbaadcbadc", w);
  o.require(t.at(12).s == 4, "gamma* = " + std::to_string(t.at(12).s));
  o.require(al::is_attractor(w, P({4, 6, 8, 11}, 12)), "{4,6,8,11} rejected");
  o.require(!al::is_attractor(w, P({1, 2, 3, 4}, 12)), "{1,2,3,4} accepted");
  return o;
}

Outcome fixture_span_lm() {
  Outcome o;
  al::Word w = al::Word::from_string("abccabc");
  const Row& r = touch("abccabc", w).at(7);
  o.require(r.span == 2, "span = " + std::to_string(r.span));
  o.require(r.lm == 4, "lm = " + std::to_string(r.lm));
  o.require(!al::is_attractor(w, P({1, 2, 3}, 7)), "{1,2,3} accepted");
  o.require(!al::is_attractor(w, P({2, 3, 4}, 7)), "{2,3,4} accepted");
  return o;
}

Outcome fibonacci_figure() {
  Outcome o;
  const std::vector<std::vector<std::size_t>> gammas = {
      {1}, {1, 2}, {1, 2}, {2, 3}, {2, 3}, {2, 3}, {4, 5}, {4, 5}};
  const std::vector<std::size_t> lms = {1, 2, 2, 3, 3, 3, 5, 5};
  Touched& t = touch_spec("sturmian:(1)", 500);
  for (std::size_t n = 1; n <= 8; ++n) {
    o.require(t.at(n).lm == lms[n - 1],
              "lm(" + std::to_string(n) + ") = " + std::to_string(t.at(n).lm));
    o.require(al::is_attractor(t.x.prefix(n), P(gammas[n - 1], n)),
              str(gammas[n - 1]) + " rejected at n=" + std::to_string(n));
  }
  return o;
}

// Seeded directive: d_0 in [0,3], then 1-3 entries in [1,4], periodic tail.
std::string random_directive(std::mt19937_64& rng) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::string d = std::to_string(pick(0, 3));
  for (std::size_t k = pick(1, 3); k > 0; --k) d += "," + std::to_string(pick(1, 4));
  return d + ",(" + std::to_string(pick(1, 3)) + ")";
}

Outcome sturmian_theorem() {
  Outcome o;
  std::mt19937_64 rng(20240);
  std::vector<std::string> ds = {"(1)", "6,2,(1)", "2,1,3,(2)"};
  ds.push_back(random_directive(rng));
  ds.push_back(random_directive(rng));
  std::string listed;
  for (const std::string& d : ds) {
    listed += (listed.empty() ? "" : " ") + d;
    al::DirectiveSequence dir = al::DirectiveSequence::parse(d);
    Touched& t = touch_spec("sturmian:" + d, 500);
    for (std::size_t n = 1; n <= 500; ++n) {
      al::SturmianGammaWitness g = al::sturmian_gamma_formula(dir, n);
      if (n < g.n_bar) continue;
      std::string at = d + " n=" + std::to_string(n);
      const Row& r = t.at(n);
      o.require(al::is_attractor(t.x.prefix(n), g.gamma), "formula set " + at);
      o.require(r.s == 2, "gamma* " + at);
      o.require(r.span == 1, "span " + at);
      o.require(r.lm == g.gamma.rightmost(), "lm " + at);
    }
  }
  if (o.ok) o.note = listed;
  return o;
}

Outcome period_doubling() {
  Outcome o;
  Touched& t = touch_spec("morphic:a=ab;b=aa:seed=a", 192);
  for (std::size_t n = 2; n <= 192; ++n) {
    std::size_t want = 1;
    for (std::size_t i = 1; 3 * (std::size_t{1} << i) <= 192; ++i)
      if (3 * (std::size_t{1} << i) <= n) want = std::size_t{1} << i;
    const Row& r = t.at(n);
    o.require(r.s == 2, "s(" + std::to_string(n) + ") = " + std::to_string(r.s));
    o.require(r.span == want, "span(" + std::to_string(n) + ") = " +
                                  std::to_string(r.span));
  }
  return o;
}

Outcome thue_morse() {
  Outcome o;
  Touched& t = touch_spec("morphic:a=ab;b=ba:seed=a", 1024);
  std::size_t best = 0, where = 0;
  for (std::size_t n = 1; n <= 1024; ++n) {
    const Row& r = t.at(n);
    o.require(r.s <= 4, "s(" + std::to_string(n) + ") = " + std::to_string(r.s));
    if (r.s > best) best = r.s, where = n;
  }
  o.require(best == 4, "max s = " + std::to_string(best));
  if (o.ok) o.note = "s = 4 first at n=" + std::to_string(where);
  return o;
}

Outcome holub() {
  Outcome o;
  al::IntSequence seq = al::IntSequence::parse("2,3,4,5");
  std::vector<al::Word> u = al::holub_words(seq, 4);
  Touched& t = touch("holub:2,3,4,5", u[4]);
  for (std::size_t i = 1; i <= 3; ++i) {
    // {|u_i|+1, sum_{k<=i} (|u_k|+1), |u_{i+1}| - |u_i|}
    std::size_t sum = 0;
    for (std::size_t k = 0; k <= i; ++k) sum += u[k].size() + 1;
    std::set<std::size_t> g = {u[i].size() + 1, sum,
                               u[i + 1].size() - u[i].size()};
    std::vector<std::size_t> gv(g.begin(), g.end());
    const std::size_t n = u[i + 1].size();
    o.require(al::is_attractor(u[i + 1], P(gv, n)),
              str(gv) + " rejected for u_" + std::to_string(i + 1));
    o.require(t.at(n).s <= 3, "gamma*(u_" + std::to_string(i + 1) + ") = " +
                                  std::to_string(t.at(n).s));
  }
  return o;
}

Outcome powers_of_two() {
  Outcome o;
  Touched& t = touch_spec("pow2", 2049);
  std::vector<std::size_t> s;
  std::vector<std::pair<double, double>> samples;
  for (std::size_t j = 3; j <= 11; ++j) {
    std::size_t n = (std::size_t{1} << j) + 1;
    s.push_back(t.at(n).s);
    samples.emplace_back(n, s.back());
  }
  for (std::size_t k = 1; k < s.size(); ++k)
    o.require(s[k] >= s[k - 1], "decrease at j=" + std::to_string(k + 3));
  for (std::size_t k = 2; k < s.size(); ++k)
    o.require(s[k] > s[k - 2], "flat over j=" + std::to_string(k + 1) + ".." +
                                   std::to_string(k + 3));
  al::Growth g = al::growth_classify(samples);
  o.require(g == al::Growth::kLogarithmic,
            "classified " + std::string(al::growth_name(g)));
  std::string vals;
  for (std::size_t v : s) vals += (vals.empty() ? "" : ",") + std::to_string(v);
  if (o.ok) o.note = "s = " + vals;
  return o;
}

Outcome toeplitz() {
  Outcome o;
  Touched& t = touch_spec("toeplitz:12???", 512);
  std::vector<std::size_t> s;
  for (std::size_t n : {32, 64, 128, 256, 512}) s.push_back(t.at(n).s);
  // Longest strictly increasing subsequence.
  std::vector<std::size_t> tails;
  for (std::size_t v : s) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) tails.push_back(v);
    else *it = v;
  }
  std::string vals;
  for (std::size_t v : s) vals += (vals.empty() ? "" : ",") + std::to_string(v);
  o.require(tails.size() >= 4, "s = " + vals);
  if (o.ok) o.note = "s = " + vals;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  al::CheckResult r = al::check_oracle_agreement(42, 200, 12, 3);
  o.require(r.passed(), r.counterexample ? r.counterexample->detail
                                         : std::string(al::verdict_name(r.verdict)));
  return o;
}

Outcome inequality_battery() {
  Outcome o;
  std::size_t words = 0, violations = 0;
  std::string first;
  for (Touched& t : touched) {
    al::PrefixGamma s_at = [&t](std::size_t len) -> std::optional<std::size_t> {
      auto it = t.rows.find(len);
      if (it == t.rows.end()) return std::nullopt;
      return it->second.s;
    };
    for (const auto& [n, r] : std::map<std::size_t, Row>(t.rows)) {
      al::AttractorReport rep;
      rep.gamma_star = r.s;
      rep.span = r.span;
      rep.lm = r.lm;
      rep.gamma_exact = rep.span_exact = rep.lm_exact = true;
      std::vector<std::string> v = al::measure_inequality_violations(
          t.x.prefix(n), rep, r.z, s_at, kGuards);
      ++words;
      violations += v.size();
      if (!v.empty() && first.empty()) first = t.name + ": " + v.front();
    }
  }
  o.require(violations == 0, std::to_string(violations) + " violations, " + first);
  if (o.ok) o.note = std::to_string(words) + " words";
  return o;
}

Outcome morphism_images() {
  Outcome o;
  al::CheckResult r = al::check_morphism_bounds(42, 50, 3, 20);
  o.require(r.passed(), r.counterexample ? r.counterexample->detail
                                         : std::string(al::verdict_name(r.verdict)));
  if (o.ok) o.note = std::to_string(r.cells.size()) + " cells";
  return o;
}

Outcome noncharacteristic() {
  Outcome o;
  al::Word w = al::Word::from_string("aabaaaaaabaaaa");
  for (std::size_t i = 1; i < w.size(); ++i)
    o.require(!al::is_attractor(w, P({i, i + 1}, w.size())),
              "{" + std::to_string(i) + "," + std::to_string(i + 1) +
                  "} accepted");
  o.require(al::is_attractor(w, P({3, 9}, w.size())), "{3,9} rejected");
  o.require(touch("aabaaaaaabaaaa", w).at(14).s == 2, "gamma* != 2");
  return o;
}

}  // namespace

int main() {
  criterion(1, "example-1 fixture", 1, fixture_example1);
  criterion(2, "span/lm fixture", 1, fixture_span_lm);
  criterion(3, "Fibonacci leftmost attractors n=1..8", 1, fibonacci_figure);
  criterion(4, "Sturmian theorem, n-bar <= n <= 500", 60, sturmian_theorem);
  criterion(5, "period-doubling s and span, n <= 192", 60, period_doubling);
  criterion(6, "Thue-Morse s <= 4, n <= 1024", 300, thue_morse);
  criterion(7, "Holub 3-position sets, u_2..u_4", 30, holub);
  criterion(8, "powers of two, s(2^j+1) logarithmic", 120, powers_of_two);
  criterion(9, "Toeplitz (5,3) increasing s", 120, toeplitz);
  criterion(10, "oracle equivalence, 200 words", 120, oracle_equivalence);
  criterion(11, "inequality battery on touched words", 0, inequality_battery);
  criterion(12, "morphism image bounds, 50 triples", 120, morphism_images);
  criterion(13, "non-characteristic remark fixture", 1, noncharacteristic);
  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
