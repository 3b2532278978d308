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

#include "attractorlab/theorems.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "attractorlab/complexity.h"
#include "attractorlab/error.h"
#include "attractorlab/generators.h"
#include "attractorlab/lz.h"
#include "attractorlab/oracle.h"
#include "json.hpp"

namespace attractorlab {
namespace {

std::string num(std::size_t v) { return std::to_string(v); }

Cell make_cell(std::string label, std::string expected, std::string observed,
               bool ok) {
  return {std::move(label), std::move(expected), std::move(observed),
          ok ? Verdict::kPass : Verdict::kFail};
}

Cell vacuous_cell(std::string label, std::string expected,
                  std::string observed) {
  return {std::move(label), std::move(expected), std::move(observed),
          Verdict::kVacuous};
}

std::string sturmian_spec(const DirectiveSequence& d) {
  return "sturmian:" + d.str();
}

constexpr const char* kThueMorse = "morphic:a=ab;b=ba:seed=a";
constexpr const char* kPeriodDoubling = "morphic:a=ab;b=aa:seed=a";
constexpr const char* kFibonacci = "sturmian:1,(1)";

// Longest strictly increasing subsequence length.
std::size_t increasing_run(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> tails;
  for (std::size_t x : v) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) tails.push_back(x);
    else *it = x;
  }
  return tails.size();
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kVacuous: return "vacuous";
  }
  return "?";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::kFail || b == Verdict::kFail) return Verdict::kFail;
  if (a == Verdict::kVacuous || b == Verdict::kVacuous) {
    return Verdict::kVacuous;
  }
  return Verdict::kPass;
}

void CheckResult::add(Cell cell, std::string_view spec, std::size_t n) {
  verdict = combine(verdict, cell.verdict);
  if (cell.verdict == Verdict::kFail && !counterexample) {
    counterexample = Counterexample{
        std::string(spec), n,
        cell.label + ": expected " + cell.expected + ", observed " +
            cell.observed};
  }
  cells.push_back(std::move(cell));
}

void CheckResult::absorb(const CheckResult& other) {
  for (Cell c : other.cells) {
    c.label = other.name + "/" + c.label;
    cells.push_back(std::move(c));
  }
  verdict = combine(verdict, other.verdict);
  if (!counterexample && other.counterexample) {
    counterexample = other.counterexample;
  }
}

std::string to_json(const CheckResult& result,
                    std::optional<std::uint64_t> seed) {
  nlohmann::ordered_json j;
  j["suite"] = result.name;
  j["verdict"] = verdict_name(result.verdict);
  j["universe"] = result.universe;
  if (seed) j["seed"] = *seed;
  j["cells"] = nlohmann::ordered_json::array();
  for (const Cell& c : result.cells) {
    j["cells"].push_back({{"label", c.label},
                          {"expected", c.expected},
                          {"observed", c.observed},
                          {"verdict", verdict_name(c.verdict)}});
  }
  if (result.counterexample) {
    j["counterexample"] = {{"spec", result.counterexample->spec},
                           {"n", result.counterexample->n},
                           {"detail", result.counterexample->detail}};
  }
  return j.dump(2);
}

// ---------------------------------------------------------------------------

std::vector<std::string> measure_inequality_violations(
    const Word& w, const AttractorReport& report, std::size_t z,
    const PrefixGamma& s_at, const AttractorGuards& guards) {
  std::vector<std::string> out;
  const std::size_t n = w.size();
  const std::size_t g = report.gamma_star;
  const std::string at = " (n=" + num(n) + ")";
  if (report.gamma_exact) {
    if (w.letter_count() > g) {
      out.push_back("|alph| = " + num(w.letter_count()) + " > gamma* = " +
                    num(g) + at);
    }
    if (g > z) out.push_back("gamma* = " + num(g) + " > z = " + num(z) + at);
    if (report.span_exact && g > report.span + 1) {
      out.push_back("gamma* - 1 > span = " + num(report.span) + at);
    }
  }
  if (report.span_exact && report.lm_exact && report.span > report.lm) {
    out.push_back("span = " + num(report.span) + " > lm = " + num(report.lm) +
                  at);
  }
  if (n == 0) return out;

  FactorIndex index(w);
  std::map<std::size_t, std::optional<std::size_t>> s_cache;
  auto s_of = [&](std::size_t len) -> std::optional<std::size_t> {
    if (len == n && report.gamma_exact) return g;
    auto it = s_cache.find(len);
    if (it != s_cache.end()) return it->second;
    std::optional<std::size_t> v;
    if (s_at) v = s_at(len);
    if (!v && len <= guards.exact_max_length) {
      v = gamma_star(FactorIndex(w.prefix(len))).size;
    }
    s_cache[len] = v;
    return v;
  };
  const std::size_t slack = n / 4;
  for (std::size_t m = 1; m <= n; ++m) {
    std::size_t p = index.distinct_factors(m);
    std::size_t a = n;
    if (m <= index.longest_repeat() + 1) a = appearance(index, m).value;
    std::string tag = " at m=" + num(m) + at;
    if (report.span_exact && p > m + report.span) {
      out.push_back("p = " + num(p) + " > m + span" + tag);
    }
    if (a + 1 < p + m) {
      out.push_back("A = " + num(a) + " < p + m - 1" + tag);
    }
    bool saturated = slack < n && a < n - slack;
    if (saturated) {
      auto s = s_of(a);
      if (s && p > m * *s) {
        out.push_back("p = " + num(p) + " > m * s(A) = " + num(m * *s) + tag);
      }
    }
  }
  return out;
}

CheckResult check_profile_factor_bound(const GeneratorSpec& spec,
                                       std::size_t m_lo, std::size_t m_hi,
                                       std::size_t max_prefix,
                                       const AttractorGuards& guards) {
  CheckResult r;
  r.name = "profile-factor-bound";
  r.universe = spec.str() + ", m in [" + num(m_lo) + ", " + num(m_hi) + "]";
  if (m_lo == 0 || m_lo > m_hi) {
    throw Error(ErrorCode::kInvalidArgument, "empty m range");
  }
  std::size_t len = std::max<std::size_t>(64, 2 * m_hi);
  len = std::min(len, max_prefix);
  Word w = spec.prefix(len);
  while (!appearance(w, std::min(m_hi, w.size())).saturated &&
         len < max_prefix) {
    len = std::min(max_prefix, 2 * len);
    w = spec.prefix(len);
  }
  for (std::size_t m = m_lo; m <= m_hi; ++m) {
    std::string label = "m=" + num(m);
    if (m > w.size()) {
      r.add(vacuous_cell(label, "p(m) <= m*s(A(m))", "prefix too short"));
      continue;
    }
    Appearance a = appearance(w, m);
    std::size_t p = factor_complexity(w, m);
    if (!a.saturated) {
      r.add(vacuous_cell(label, "p(m) <= m*s(A(m))",
                         "A(m) = " + num(a.value) + " unsaturated in " +
                             num(w.size())));
      continue;
    }
    if (a.value > guards.exact_max_length) {
      r.add(vacuous_cell(label, "p(m) <= m*s(A(m))",
                         "A(m) = " + num(a.value) + " above guard"));
      continue;
    }
    std::size_t s = gamma_star(FactorIndex(w.prefix(a.value))).size;
    r.add(make_cell(label, "p(m) <= m*s(A(m))",
                    "p=" + num(p) + ", A=" + num(a.value) + ", s(A)=" +
                        num(s),
                    p <= m * s),
          spec.str(), a.value);
  }
  return r;
}

CheckResult check_span_factor_bound(const std::vector<Word>& words,
                                    std::size_t m_lo, std::size_t m_hi,
                                    const AttractorGuards& guards) {
  CheckResult r;
  r.name = "span-factor-bound";
  r.universe = num(words.size()) + " words, m in [" + num(m_lo) + ", " +
               num(m_hi) + "]";
  for (const Word& w : words) {
    if (w.empty()) continue;
    if (w.size() > guards.exact_max_length) {
      r.add(vacuous_cell(w.str(), "p(m) <= m + span", "guard"));
      continue;
    }
    FactorIndex index(w);
    std::size_t sp = span(index).value;
    std::size_t worst_slack = SIZE_MAX;
    bool ok = true;
    std::string detail;
    for (std::size_t m = m_lo; m <= std::min(m_hi, w.size()); ++m) {
      std::size_t p = index.distinct_factors(m);
      if (p > m + sp) {
        ok = false;
        detail = "m=" + num(m) + ": p=" + num(p) + " > " + num(m + sp);
        break;
      }
      worst_slack = std::min(worst_slack, m + sp - p);
    }
    if (ok) {
      detail = "span=" + num(sp) + ", min slack " +
               (worst_slack == SIZE_MAX ? std::string("-") : num(worst_slack));
    }
    r.add(make_cell(w.str(), "p(m) <= m + span", detail, ok), w.str(),
          w.size());
  }
  return r;
}

// ---------------------------------------------------------------------------

ImageAttractor morphism_image_attractor(const Morphism& m, const Word& w,
                                        const PositionSet& g) {
  if (g.word_length() != w.size() || !is_attractor(w, g)) {
    throw Error(ErrorCode::kNotAnAttractor,
                g.str() + " is not an attractor of " + w.str());
  }
  std::string text = w.str();
  std::vector<std::size_t> ends(text.size() + 1, 0);  // |φ(w[1, j])|
  for (std::size_t j = 0; j < text.size(); ++j)
    ends[j + 1] = ends[j] + m.image(text[j]).size();
  Word image = m.apply(w);
  const std::size_t n = image.size();

  std::vector<std::size_t> first, last, phi;
  for (std::size_t j : g.positions()) {
    first.push_back(ends[j - 1] + 1);
    last.push_back(ends[j]);
  }
  std::set<char> done;
  for (std::size_t j : g.positions()) {
    char a = text[j - 1];
    if (!done.insert(a).second) continue;
    GammaResult block = gamma_star(Word::from_string(m.image(a)));
    for (std::size_t p : block.witness.positions())
      phi.push_back(ends[j - 1] + p);
  }
  ImageAttractor r;
  r.t_first = PositionSet(first, n);
  r.t_last = PositionSet(last, n);
  r.t_phi = PositionSet(phi, n);
  r.image = r.t_first.united(r.t_last).united(r.t_phi);
  r.ell = m.max_image_length();
  r.K = r.ell * m.source().size();
  r.size_bound = 2 * g.size() + r.K;
  r.span_bound = r.ell * (g.spread() + 1);
  r.lm_bound = r.ell * g.rightmost();
  r.verified = is_attractor(image, r.image);
  return r;
}

CheckResult check_morphism_bounds(std::uint64_t seed, std::size_t count,
                                  std::size_t max_image,
                                  std::size_t max_word) {
  CheckResult r;
  r.name = "morphism-bounds";
  r.universe = num(count) + " seeded (morphism, word) pairs, images <= " +
               num(max_image) + ", |w| <= " + num(max_word);
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t sigma = uniform(2, 3);
    std::vector<std::pair<char, std::string>> rules;
    for (std::size_t a = 0; a < sigma; ++a) {
      std::string img;
      std::size_t len = uniform(1, max_image);
      for (std::size_t k = 0; k < len; ++k)
        img += static_cast<char>('a' + uniform(0, sigma - 1));
      rules.emplace_back(static_cast<char>('a' + a), img);
    }
    Morphism m(rules);
    std::string text;
    std::size_t len = uniform(1, max_word);
    for (std::size_t k = 0; k < len; ++k)
      text += static_cast<char>('a' + uniform(0, sigma - 1));
    Word w = Word::from_string(text);
    Word image = m.apply(w);
    FactorIndex index(w);
    FactorIndex image_index(image);
    SpanResult sp = span(index);
    std::size_t left = lm(index);
    SpanResult image_span = span(image_index);
    std::size_t image_lm = lm(image_index);
    std::string label = m.str() + " on " + text;
    std::string spec = "morphism " + m.str() + " word " + text;

    struct Trial {
      const char* kind;
      PositionSet g;
    };
    Trial trials[] = {
        {"min", gamma_star(index).witness},
        {"span", PositionSet::interval(sp.witness.first, sp.witness.last,
                                       w.size())},
        {"lm", PositionSet::interval(1, left, w.size())},
    };
    for (const Trial& trial : trials) {
      ImageAttractor ia = morphism_image_attractor(m, w, trial.g);
      std::string k = std::string(trial.kind) + " " + trial.g.str();
      r.add(make_cell(label + " [" + k + "] verified", "attractor",
                      ia.image.str(), ia.verified),
            spec, w.size());
      r.add(make_cell(label + " [" + k + "] size",
                      "<= " + num(ia.size_bound), num(ia.image.size()),
                      ia.image.size() <= ia.size_bound),
            spec, w.size());
      if (std::string(trial.kind) == "span") {
        r.add(make_cell(label + " [" + k + "] span",
                        "<= " + num(ia.span_bound),
                        num(image_span.value) + " (set " +
                            num(ia.image.spread()) + ")",
                        image_span.value <= ia.span_bound &&
                            ia.image.spread() <= ia.span_bound),
              spec, w.size());
      }
      if (std::string(trial.kind) == "lm") {
        r.add(make_cell(label + " [" + k + "] lm", "<= " + num(ia.lm_bound),
                        num(image_lm) + " (set " +
                            num(ia.image.rightmost()) + ")",
                        image_lm <= ia.lm_bound &&
                            ia.image.rightmost() <= ia.lm_bound),
              spec, w.size());
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

SturmianGammaWitness sturmian_gamma_formula(const DirectiveSequence& d,
                                            std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kOutOfRange, "n must be positive");
  SturmianGammaWitness r;
  r.n = n;
  // Standard words up to the first one longer than n.
  std::size_t k = 2;
  std::vector<std::uint64_t> len = standard_word_lengths(d, k);
  while (len.back() <= n) len = standard_word_lengths(d, ++k);
  // n̄: x_2 = a^{d_0} b, so both letters show up at |x_2| unless d_0 = 0,
  // in which case the word is b^{d_1} a ... and they show up at |x_3|.
  r.n_bar = static_cast<std::size_t>(d.at(0) > 0 ? len[2] : d.at(1) + 1);
  if (n < r.n_bar) {
    r.gamma = PositionSet({1}, n);
    return r;
  }
  std::size_t kp = 0;
  for (std::size_t i = 2; i < len.size(); ++i)
    if (len[i] >= r.n_bar && len[i] <= n) kp = i;
  if (kp == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "no standard word between n-bar and n");
  }
  r.k_prime = kp;
  std::size_t cur = len[kp], prev = len[kp - 1];
  if (n + 2 <= cur + prev) {
    r.tag = SturmianCase::kFirstBranch;
    r.gamma = PositionSet({prev - 1, prev}, n);
  } else {
    r.tag = SturmianCase::kSecondBranch;
    r.gamma = PositionSet({cur - 1, cur}, n);
  }
  return r;
}

CheckResult verify_sturmian_theorem(const DirectiveSequence& d,
                                    std::size_t n_max,
                                    const AttractorGuards& guards) {
  CheckResult r;
  r.name = "sturmian d=" + d.str();
  r.universe = "prefixes n = 1.." + num(n_max);
  const std::string spec = sturmian_spec(d);
  if (n_max > guards.exact_max_length) {
    r.add(vacuous_cell("guard", "n_max <= " + num(guards.exact_max_length),
                       num(n_max)));
    return r;
  }
  Word x = sturmian_prefix(d, n_max);
  std::size_t attracting = 0, gamma_ok = 0, span_ok = 0, lm_ok = 0, checked = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    SturmianGammaWitness wit = sturmian_gamma_formula(d, n);
    FactorIndex index(x.prefix(n));
    bool attracts = is_attractor(index, wit.gamma);
    attracting += attracts;
    if (!attracts) {
      r.add(make_cell("n=" + num(n) + " Gamma_n", "attractor " + wit.gamma.str(),
                      "not an attractor", false),
            spec, n);
    }
    if (n < wit.n_bar) continue;
    ++checked;
    std::size_t g = gamma_star(index).size;
    std::size_t s = span(index).value;
    std::size_t l = lm(index);
    gamma_ok += g == 2;
    span_ok += s == 1;
    lm_ok += l == wit.gamma.rightmost();
    if (g != 2 || s != 1 || l != wit.gamma.rightmost()) {
      r.add(make_cell("n=" + num(n),
                      "gamma*=2, span=1, lm=" + num(wit.gamma.rightmost()),
                      "gamma*=" + num(g) + ", span=" + num(s) + ", lm=" +
                          num(l),
                      false),
            spec, n);
    }
  }
  r.add(make_cell("Gamma_n attracts", num(n_max), num(attracting),
                  attracting == n_max));
  r.add(make_cell("gamma* = 2 for n >= n-bar", num(checked), num(gamma_ok),
                  gamma_ok == checked));
  r.add(make_cell("span = 1 for n >= n-bar", num(checked), num(span_ok),
                  span_ok == checked));
  r.add(make_cell("lm = max Gamma_n", num(checked), num(lm_ok),
                  lm_ok == checked));
  return r;
}

std::optional<std::size_t> distinguishing_length(const DirectiveSequence& a,
                                                 const DirectiveSequence& b,
                                                 std::size_t n_max) {
  Word xa = sturmian_prefix(a, n_max);
  Word xb = sturmian_prefix(b, n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    PositionSet ga = sturmian_gamma_formula(a, n).gamma;
    PositionSet gb = sturmian_gamma_formula(b, n).gamma;
    if (ga != gb) return n;
    if (lm(FactorIndex(xa.prefix(n))) != lm(FactorIndex(xb.prefix(n)))) {
      return n;
    }
  }
  return std::nullopt;
}

CheckResult check_sturmian_span_one(const DirectiveSequence& d,
                                    std::size_t n_max) {
  CheckResult r;
  r.name = "sturmian span one d=" + d.str();
  r.universe = "prefixes n = 1.." + num(n_max);
  Word x = sturmian_prefix(d, n_max);
  std::size_t n_bar = sturmian_gamma_formula(d, n_max).n_bar;
  std::size_t ones = 0;
  for (std::size_t n = 1; n <= n_max; ++n)
    ones += span(FactorIndex(x.prefix(n))).value == 1;
  std::size_t k = 2;
  std::vector<std::uint64_t> len = standard_word_lengths(d, k);
  while (len.back() <= n_max) len = standard_word_lengths(d, ++k);
  std::size_t standard = 0;
  for (std::uint64_t l : len) standard += l >= n_bar && l <= n_max;
  r.add(make_cell("#{n : span = 1}", ">= " + num(standard), num(ones),
                  ones >= standard),
        sturmian_spec(d), n_max);
  return r;
}

CheckResult check_noncharacteristic_remark() {
  CheckResult r;
  r.name = "noncharacteristic";
  r.universe = "aabaaaaaabaaaa";
  DirectiveSequence d = DirectiveSequence::parse("6,2,(1)");
  Word x = sturmian_prefix(d, 18);
  Word w = x.factor(5, 18);
  r.add(make_cell("prefix", "aabaaaaaabaaaa", w.str(),
                  w.str() == "aabaaaaaabaaaa"));
  const std::string spec = "word:" + w.str();
  FactorIndex index(w);
  std::size_t consecutive = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    consecutive += is_attractor(index, PositionSet({i, i + 1}, w.size()));
  r.add(make_cell("consecutive pairs attracting", "0", num(consecutive),
                  consecutive == 0),
        spec, w.size());
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{2, 3}, {8, 9}}) {
    bool ok = is_attractor(index, PositionSet({a, b}, w.size()));
    r.add(make_cell("{" + num(a) + "," + num(b) + "}", "rejected",
                    ok ? "accepted" : "rejected", !ok),
          spec, w.size());
  }
  bool ok = is_attractor(index, PositionSet({3, 9}, w.size()));
  r.add(make_cell("{3,9}", "accepted", ok ? "accepted" : "rejected", ok),
        spec, w.size());
  std::size_t g = gamma_star(index).size;
  r.add(make_cell("gamma*", "2", num(g), g == 2), spec, w.size());
  return r;
}

// ---------------------------------------------------------------------------

CheckResult check_period_doubling_span(std::size_t n_max,
                                       const AttractorGuards& guards) {
  CheckResult r;
  r.name = "period-doubling";
  r.universe = "prefixes n = 1.." + num(n_max);
  if (n_max > guards.exact_max_length) {
    r.add(vacuous_cell("guard", "n_max <= " + num(guards.exact_max_length),
                       num(n_max)));
    return r;
  }
  Word x = GeneratorSpec::parse(kPeriodDoubling).prefix(n_max);
  std::size_t span_ok = 0, s_ok = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::size_t expected = 0;
    if (n > 1 && n <= 5) expected = 1;
    for (std::size_t p = 1; 3 * p <= n; p *= 2)
      if (n < 6 * p) expected = p;
    FactorIndex index(x.prefix(n));
    std::size_t sp = span(index).value;
    std::size_t s = gamma_star(index).size;
    std::size_t s_expected = n > 1 ? 2 : 1;
    span_ok += sp == expected;
    s_ok += s == s_expected;
    if (sp != expected || s != s_expected) {
      r.add(make_cell("n=" + num(n),
                      "span=" + num(expected) + ", s=" + num(s_expected),
                      "span=" + num(sp) + ", s=" + num(s), false),
            kPeriodDoubling, n);
    }
  }
  r.add(make_cell("span closed form", num(n_max), num(span_ok),
                  span_ok == n_max));
  r.add(make_cell("s(n) = 2 for n > 1", num(n_max), num(s_ok), s_ok == n_max));
  for (std::size_t n : {4u, 6u, 96u}) {
    if (n > n_max) continue;
    std::size_t sp = span(x.prefix(n), guards).value;
    std::size_t expected = n == 4 ? 1 : n == 6 ? 2 : 32;
    r.add(make_cell("span(" + num(n) + ")", num(expected), num(sp),
                    sp == expected),
          kPeriodDoubling, n);
  }
  return r;
}

CheckResult check_holub_attractors(const IntSequence& seq, std::size_t levels,
                                   const AttractorGuards& guards) {
  CheckResult r;
  r.name = "holub";
  r.universe = "n = " + seq.str() + ", u_1..u_" + num(levels + 1);
  const std::string spec = "holub:" + seq.str();
  std::vector<Word> u = holub_words(seq, levels + 1);
  for (std::size_t i = 0; i <= levels; ++i) {
    const Word& w = u[i + 1];
    if (w.size() > guards.exact_max_length) {
      r.add(vacuous_cell("u_" + num(i + 1), "gamma* <= 3", "guard"));
      continue;
    }
    PositionSet predicted(holub_predicted_attractor(seq, i), w.size());
    FactorIndex index(w);
    bool ok = is_attractor(index, predicted);
    r.add(make_cell("u_" + num(i + 1) + " set " + predicted.str(),
                    "attractor", ok ? "attractor" : "not an attractor", ok),
          spec, w.size());
    std::size_t g = gamma_star(index).size;
    r.add(make_cell("gamma*(u_" + num(i + 1) + ")", "<= 3", num(g), g <= 3),
          spec, w.size());
  }
  // Every prefix of the longest word within guard, recorded only.
  std::size_t top = 0;
  for (std::size_t i = u.size(); i-- > 1;) {
    if (u[i].size() <= std::min<std::size_t>(guards.exact_max_length, 128)) {
      top = i;
      break;
    }
  }
  if (top > 0) {
    std::size_t mx = 0;
    for (std::size_t n = 1; n <= u[top].size(); ++n)
      mx = std::max(mx, gamma_star(FactorIndex(u[top].prefix(n))).size);
    r.add({"max gamma* over prefixes of u_" + num(top), "recorded", num(mx),
           Verdict::kPass});
  }
  return r;
}

CheckResult check_ultimately_periodic(const Word& u, const Word& v,
                                      std::size_t n_max,
                                      const AttractorGuards& guards) {
  CheckResult r;
  r.name = "ultimately-periodic";
  r.universe = "u=" + u.str() + ", v=" + v.str() + ", n <= " + num(n_max);
  const std::string spec = "periodic:" + u.str() + ":" + v.str();
  if (n_max > guards.exact_max_length) {
    r.add(vacuous_cell("guard", "n_max <= " + num(guards.exact_max_length),
                       num(n_max)));
    return r;
  }
  Word x = ultimately_periodic_prefix(u, v, n_max);
  Word periodic = ultimately_periodic_prefix(Word(v.alphabet()), v, n_max);
  std::size_t s_v = 0;
  for (std::size_t n = 1; n <= n_max; ++n)
    s_v = std::max(s_v, gamma_star(FactorIndex(periodic.prefix(n))).size);
  const std::size_t uv = u.size() + v.size();
  const std::size_t s_bound = u.size() + s_v + 1;
  std::size_t lm_max = 0, s_max = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    FactorIndex index(x.prefix(n));
    std::size_t l = lm(index);
    std::size_t s = gamma_star(index).size;
    if (n >= uv) lm_max = std::max(lm_max, l);
    s_max = std::max(s_max, s);
    if ((n >= uv && l > uv) || s > s_bound) {
      r.add(make_cell("n=" + num(n),
                      "lm <= " + num(uv) + ", s <= " + num(s_bound),
                      "lm=" + num(l) + ", s=" + num(s), false),
            spec, n);
    }
  }
  r.add(make_cell("max lm for n >= |uv|", "<= " + num(uv), num(lm_max),
                  lm_max <= uv));
  r.add(make_cell("max s", "<= " + num(s_bound), num(s_max),
                  s_max <= s_bound));
  return r;
}

QuasiSturmian detect_quasi_sturmian(const Word& w, std::size_t m_max) {
  QuasiSturmian q;
  std::vector<std::pair<std::size_t, long long>> diffs;
  for (std::size_t m = 1; m <= std::min(m_max, w.size()); ++m) {
    if (!appearance(w, m).saturated) continue;
    diffs.emplace_back(m, static_cast<long long>(factor_complexity(w, m)) -
                              static_cast<long long>(m));
  }
  const std::size_t tail = (m_max + 2) / 3;
  if (diffs.size() < tail || tail == 0) return q;
  long long d = diffs.back().second;
  for (std::size_t i = diffs.size() - tail; i < diffs.size(); ++i)
    if (diffs[i].second != d) return q;
  std::size_t start = diffs.size() - tail;
  while (start > 0 && diffs[start - 1].second == d) --start;
  q.detected = true;
  q.d = d;
  q.n0 = diffs[start].first;
  return q;
}

CheckResult check_quasi_sturmian(const Word& w, const std::string& source,
                                 std::size_t m_max) {
  CheckResult r;
  r.name = "quasi-sturmian";
  r.universe = source + ", |w| = " + num(w.size()) + ", m <= " + num(m_max);
  if (m_max == 0 || m_max > w.size() || !appearance(w, m_max).saturated) {
    r.add(vacuous_cell(source, "p(m) - m eventually constant",
                       "A(" + num(m_max) + ") unsaturated"));
    return r;
  }
  QuasiSturmian q = detect_quasi_sturmian(w, m_max);
  std::string observed =
      q.detected ? "d=" + std::to_string(*q.d) + ", n0=" + num(*q.n0)
                 : "not quasi-Sturmian at this range";
  r.add(make_cell(source, "p(m) - m eventually constant", observed,
                  q.detected),
        source, w.size());
  return r;
}

CheckResult check_quasi_sturmian(const GeneratorSpec& spec, std::size_t n_max,
                                 std::size_t m_max) {
  return check_quasi_sturmian(spec.prefix(n_max), spec.str(), m_max);
}

// ---------------------------------------------------------------------------

CheckResult run_figure1_suite(const Figure1Options& o) {
  CheckResult r;
  r.name = "figure1";
  r.universe = "profile s(n) of the summary table families";
  const AttractorGuards& guards = o.guards;
  auto s_values = [&](const Word& x, const std::vector<std::size_t>& ns,
                      std::vector<std::size_t>& out) {
    for (std::size_t n : ns) {
      if (n > guards.exact_max_length) return false;
      out.push_back(gamma_star(FactorIndex(x.prefix(n))).size);
    }
    return true;
  };
  auto range = [](std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> v;
    for (std::size_t n = lo; n <= hi; ++n) v.push_back(n);
    return v;
  };

  {  // Period-doubling: s(n) = 2 for n > 1.
    std::vector<std::size_t> s;
    Word x = GeneratorSpec::parse(kPeriodDoubling)
                 .prefix(o.period_doubling_max);
    if (!s_values(x, range(2, o.period_doubling_max), s)) {
      r.add(vacuous_cell("Period-doubling word", "2", "guard"));
    } else {
      auto [lo, hi] = std::minmax_element(s.begin(), s.end());
      std::size_t bad = 0;
      while (bad < s.size() && s[bad] == 2) ++bad;
      r.add(make_cell("Period-doubling word", "2",
                      *lo == *hi ? num(*lo) : num(*lo) + ".." + num(*hi),
                      *lo == 2 && *hi == 2),
            kPeriodDoubling, bad + 2);
    }
  }
  {  // Thue-Morse: s(n) <= 4, attained.
    std::vector<std::size_t> s;
    Word x = GeneratorSpec::parse(kThueMorse).prefix(o.thue_morse_max);
    if (!s_values(x, range(1, o.thue_morse_max), s)) {
      r.add(vacuous_cell("Thue-Morse word", "<= 4 (4 attained)", "guard"));
    } else {
      std::size_t mx = *std::max_element(s.begin(), s.end());
      std::size_t at = std::find(s.begin(), s.end(), mx) - s.begin() + 1;
      r.add(make_cell("Thue-Morse word", "<= 4 (4 attained)",
                      "max " + num(mx) + " first at n=" + num(at), mx == 4),
            kThueMorse, at);
    }
  }
  {  // Holub: s = 3 at the boundary prefixes u_{i+1}.
    IntSequence seq = IntSequence::parse("2,3,4,5");
    std::vector<Word> u = holub_words(seq, o.holub_levels + 1);
    std::vector<std::size_t> s;
    bool guarded = false;
    for (std::size_t i = 1; i <= o.holub_levels + 1; ++i) {
      if (u[i].size() > guards.exact_max_length) {
        guarded = true;
        break;
      }
      s.push_back(gamma_star(FactorIndex(u[i])).size);
    }
    std::string observed;
    for (std::size_t v : s) observed += (observed.empty() ? "" : ",") + num(v);
    if (guarded) {
      r.add(vacuous_cell("Holub word", "3", observed + " (guard)"));
    } else {
      std::size_t mx = *std::max_element(s.begin(), s.end());
      r.add(make_cell("Holub word", "3", observed, mx == 3),
            "holub:2,3,4,5", u.back().size());
    }
  }
  {  // Characteristic Sturmian: s(n) = 2 for n >= n-bar.
    DirectiveSequence d = DirectiveSequence::parse("1,(1)");
    std::size_t n_bar = sturmian_gamma_formula(d, 1).n_bar;
    Word x = sturmian_prefix(d, o.sturmian_max);
    std::vector<std::size_t> s;
    if (!s_values(x, range(n_bar, o.sturmian_max), s)) {
      r.add(vacuous_cell("Charact. Sturmian word", "2", "guard"));
    } else {
      auto [lo, hi] = std::minmax_element(s.begin(), s.end());
      r.add(make_cell("Charact. Sturmian word", "2",
                      *lo == *hi ? num(*lo) : num(*lo) + ".." + num(*hi),
                      *lo == 2 && *hi == 2),
            kFibonacci, o.sturmian_max);
    }
  }
  {  // Powers of two: logarithmic growth at n = 2^j + 1.
    std::vector<std::size_t> ns;
    for (std::size_t j = o.power2_min_exponent; j <= o.power2_max_exponent;
         ++j)
      ns.push_back((std::size_t{1} << j) + 1);
    Word x = power2_char_prefix(ns.back());
    std::vector<std::size_t> s;
    if (!s_values(x, ns, s)) {
      r.add(vacuous_cell("Char. seq. of powers of 2", "Theta(log n)",
                         "guard"));
    } else {
      std::vector<std::pair<double, double>> samples;
      bool monotone = true, steps = true;
      std::string observed;
      for (std::size_t i = 0; i < s.size(); ++i) {
        samples.emplace_back(static_cast<double>(ns[i]),
                             static_cast<double>(s[i]));
        observed += (i ? "," : "") + num(s[i]);
        if (i > 0 && s[i] < s[i - 1]) monotone = false;
        if (i > 1 && s[i] <= s[i - 2]) steps = false;
      }
      Growth growth = Growth::kSuperlogarithmic;
      try {
        growth = growth_classify(samples);
      } catch (const Error&) {
        steps = false;
      }
      observed += " (" + std::string(growth_name(growth)) + ")";
      r.add(make_cell("Char. seq. of powers of 2", "Theta(log n)", observed,
                      monotone && steps &&
                          growth == Growth::kLogarithmic),
            "pow2", ns.back());
    }
  }
  {  // (5,3)-Toeplitz: increasing, not constant.
    std::vector<std::size_t> ns;
    for (std::size_t n = 32; n <= o.toeplitz_max; n *= 2) ns.push_back(n);
    Word x = GeneratorSpec::parse("toeplitz:12???").prefix(o.toeplitz_max);
    std::vector<std::size_t> s;
    if (!s_values(x, ns, s)) {
      r.add(vacuous_cell("(5,3)-Toeplitz word", "Not constant", "guard"));
    } else {
      std::string observed;
      for (std::size_t i = 0; i < s.size(); ++i)
        observed += (i ? "," : "") + num(s[i]);
      std::size_t run = increasing_run(s);
      r.add(make_cell("(5,3)-Toeplitz word",
                      "Not constant (>= " + num(o.toeplitz_min_distinct) +
                          " increasing values)",
                      observed, run >= o.toeplitz_min_distinct),
            "toeplitz:12???", o.toeplitz_max);
    }
  }
  return r;
}

CheckResult check_oracle_agreement(std::uint64_t seed, std::size_t count,
                                   std::size_t max_length,
                                   std::size_t max_sigma) {
  CheckResult r;
  r.name = "oracle";
  r.universe = num(count) + " seeded words, |w| <= " + num(max_length) +
               ", sigma <= " + num(max_sigma);
  if (max_length > oracle::kMaxLength) {
    throw Error(ErrorCode::kGuardExceeded,
                "oracle words longer than " + num(oracle::kMaxLength));
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::size_t agree[5] = {0, 0, 0, 0, 0};
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t len = uniform(1, max_length);
    std::size_t sigma = uniform(1, max_sigma);
    std::string text;
    for (std::size_t k = 0; k < len; ++k)
      text += static_cast<char>('a' + uniform(0, sigma - 1));
    Word w = Word::from_string(text);
    FactorIndex index(w);
    GammaResult g = gamma_star(index);
    SpanResult sp = span(index);
    std::size_t l = lm(index);
    std::size_t z = lz_parse(w).phrase_count();
    std::uint32_t mask = 0;
    for (std::size_t p : g.witness.positions()) mask |= 1u << (p - 1);
    std::size_t og = oracle::gamma_star(text);
    oracle::SpanLm osl = oracle::span_lm(text);
    std::size_t oz = oracle::lz_phrase_count(text);
    bool ok[5] = {g.size == og, oracle::is_attractor(text, mask),
                  sp.value == osl.span, l == osl.lm, z == oz};
    for (int i = 0; i < 5; ++i) agree[i] += ok[i];
    if (!(ok[0] && ok[1] && ok[2] && ok[3] && ok[4])) {
      r.add(make_cell(text,
                      "gamma*=" + num(og) + " span=" + num(osl.span) +
                          " lm=" + num(osl.lm) + " z=" + num(oz),
                      "gamma*=" + num(g.size) + " " + g.witness.str() +
                          " span=" + num(sp.value) + " lm=" + num(l) +
                          " z=" + num(z),
                      false),
            "word:" + text, len);
    }
  }
  const char* names[5] = {"gamma*", "witness", "span", "lm", "z"};
  for (int i = 0; i < 5; ++i) {
    r.add(make_cell(std::string(names[i]) + " agreement", num(count),
                    num(agree[i]), agree[i] == count));
  }
  return r;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "figure1",          "sturmian",          "period-doubling",
      "holub",            "morphism-bounds",   "span-factor-bound",
      "profile-factor-bound", "noncharacteristic", "quasi-sturmian",
      "oracle"};
  return names;
}

namespace {

DirectiveSequence random_directive(std::mt19937_64& rng) {
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::vector<std::uint64_t> head = {uniform(0, 3)};
  std::size_t extra = uniform(1, 3);
  for (std::size_t i = 0; i < extra; ++i) head.push_back(uniform(1, 4));
  return DirectiveSequence(
      EventuallyPeriodic(std::move(head), {uniform(1, 3)}));
}

// Equal up to swapping a and b on the first n letters.
bool exchanged(const DirectiveSequence& a, const DirectiveSequence& b,
               std::size_t n) {
  std::string x = sturmian_prefix(a, n).str();
  std::string y = sturmian_prefix(b, n).str();
  for (char& c : y) c = c == 'a' ? 'b' : 'a';
  return x == y;
}

CheckResult sturmian_suite(const SuiteOptions& o) {
  AttractorGuards guards = o.guards.value_or(AttractorGuards{});
  std::size_t n_max = o.n_max.value_or(500);
  CheckResult r;
  r.name = "sturmian";
  r.universe = "characteristic Sturmian prefixes n <= " + num(n_max);

  DirectiveSequence fib = DirectiveSequence::parse("1,(1)");
  const std::size_t lm_expected[] = {1, 2, 2, 3, 3, 3, 5, 5};
  Word x = sturmian_prefix(fib, 8);
  for (std::size_t n = 1; n <= 8; ++n) {
    PositionSet g = sturmian_gamma_formula(fib, n).gamma;
    FactorIndex index(x.prefix(n));
    std::size_t l = lm(index);
    bool ok = l == lm_expected[n - 1] && g.rightmost() == l &&
              is_attractor(index, g);
    r.add(make_cell("fibonacci n=" + num(n),
                    "lm=" + num(lm_expected[n - 1]),
                    "lm=" + num(l) + " Gamma=" + g.str(), ok),
          kFibonacci, n);
  }

  std::vector<DirectiveSequence> ds = {
      fib, DirectiveSequence::parse("6,2,(1)"),
      DirectiveSequence::parse("2,1,3,(2)"),
      DirectiveSequence::parse("0,1,(1)")};
  std::mt19937_64 rng(o.seed);
  ds.push_back(random_directive(rng));
  ds.push_back(random_directive(rng));
  for (const DirectiveSequence& d : ds)
    r.absorb(verify_sturmian_theorem(d, n_max, guards));
  r.absorb(check_sturmian_span_one(fib, std::min<std::size_t>(n_max, 200)));

  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      if (ds[i] == ds[j] || exchanged(ds[i], ds[j], 64)) continue;
      auto n = distinguishing_length(ds[i], ds[j], 64);
      r.add(make_cell("distinguish " + ds[i].str() + " vs " + ds[j].str(),
                      "some n <= 64", n ? "n=" + num(*n) : "none", n.has_value()),
            sturmian_spec(ds[i]), 64);
    }
  }
  {  // The powers-of-two word loses span one for good.
    Word p = power2_char_prefix(128);
    std::size_t last_one = 0;
    for (std::size_t n = 1; n <= 128; ++n)
      if (span(FactorIndex(p.prefix(n))).value == 1) last_one = n;
    r.add(make_cell("pow2 span = 1 stops", "no n in [64, 128]",
                    "last at n=" + num(last_one), last_one < 64),
          "pow2", 128);
  }
  return r;
}

CheckResult span_factor_suite(const SuiteOptions& o) {
  AttractorGuards guards = o.guards.value_or(AttractorGuards{});
  std::vector<Word> words = {Word::from_string("abccabc"),
                             Word::from_string("aaaa")};
  std::mt19937_64 rng(o.seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::size_t count = o.count.value_or(100);
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t len = uniform(1, 40), sigma = uniform(1, 3);
    std::string text;
    for (std::size_t k = 0; k < len; ++k)
      text += static_cast<char>('a' + uniform(0, sigma - 1));
    words.push_back(Word::from_string(text));
  }
  CheckResult r = check_span_factor_bound(words, 1, 40, guards);
  std::size_t p2 = factor_complexity(words[0], 2);
  std::size_t sp = span(words[0]).value;
  r.add(make_cell("abccabc m=2", "4 <= 2 + 2",
                  num(p2) + " <= 2 + " + num(sp), p2 == 4 && sp == 2),
        "word:abccabc", 7);
  return r;
}

CheckResult profile_factor_suite(const SuiteOptions& o) {
  AttractorGuards guards = o.guards.value_or(AttractorGuards{2100, 16});
  CheckResult r;
  r.name = "profile-factor-bound";
  r.universe = "Thue-Morse m <= 12, powers of two m <= 10, a^n m <= 8";
  CheckResult tm = check_profile_factor_bound(GeneratorSpec::parse(kThueMorse),
                                              1, 12, 512, guards);
  tm.name = "thue-morse";
  r.absorb(tm);
  CheckResult p2 = check_profile_factor_bound(GeneratorSpec::parse("pow2"), 1,
                                              10, 2048, guards);
  p2.name = "pow2";
  r.absorb(p2);
  CheckResult a = check_profile_factor_bound(GeneratorSpec::parse("periodic::a"),
                                             1, 8, 64, guards);
  a.name = "single-letter";
  r.absorb(a);
  return r;
}

CheckResult quasi_sturmian_suite(const SuiteOptions& o) {
  std::size_t n_max = o.n_max.value_or(2000);
  CheckResult r;
  r.name = "quasi-sturmian";
  r.universe = "p(m) - m over saturated m";
  CheckResult fib = check_quasi_sturmian(GeneratorSpec::parse(kFibonacci),
                                         n_max, 20);
  QuasiSturmian q = detect_quasi_sturmian(
      GeneratorSpec::parse(kFibonacci).prefix(n_max), 20);
  fib.add(make_cell("fibonacci d, n0", "d=1, n0=1",
                    q.detected ? "d=" + std::to_string(*q.d) + ", n0=" +
                                     num(*q.n0)
                               : "none",
                    q.detected && *q.d == 1 && *q.n0 == 1),
          kFibonacci, n_max);
  fib.name = "fibonacci";
  r.absorb(fib);

  Morphism phi = Morphism::parse("a=aab;b=ab");
  Word image = phi.apply(
      GeneratorSpec::parse(kFibonacci).prefix(n_max));
  CheckResult im = check_quasi_sturmian(image, "image of " +
                                                   std::string(kFibonacci) +
                                                   " under a=aab;b=ab",
                                        15);
  im.name = "fibonacci-image";
  r.absorb(im);

  // Reported, not asserted.
  Word p = power2_char_prefix(n_max);
  QuasiSturmian qp = detect_quasi_sturmian(p, 12);
  r.add({"pow2 (informational)", "no claim",
         qp.detected ? "d=" + std::to_string(*qp.d) + ", n0=" + num(*qp.n0)
                     : "not quasi-Sturmian at this range",
         Verdict::kPass});
  return r;
}

}  // namespace

CheckResult run_suite(std::string_view name, const SuiteOptions& o) {
  AttractorGuards guards = o.guards.value_or(AttractorGuards{});
  if (name == "figure1") {
    Figure1Options f;
    if (o.guards) f.guards = *o.guards;
    return run_figure1_suite(f);
  }
  if (name == "sturmian") return sturmian_suite(o);
  if (name == "period-doubling") {
    return check_period_doubling_span(o.n_max.value_or(192), guards);
  }
  if (name == "holub") {
    AttractorGuards g = o.guards.value_or(AttractorGuards{1024, 16});
    return check_holub_attractors(IntSequence::parse("2,3,4,5"), 3, g);
  }
  if (name == "morphism-bounds") {
    return check_morphism_bounds(o.seed, o.count.value_or(50));
  }
  if (name == "span-factor-bound") return span_factor_suite(o);
  if (name == "profile-factor-bound") return profile_factor_suite(o);
  if (name == "noncharacteristic") return check_noncharacteristic_remark();
  if (name == "quasi-sturmian") return quasi_sturmian_suite(o);
  if (name == "oracle") {
    return check_oracle_agreement(o.seed, o.count.value_or(200));
  }
  throw Error(ErrorCode::kUnknownSuite,
              "unknown suite '" + std::string(name) + "'");
}

}  // namespace attractorlab
