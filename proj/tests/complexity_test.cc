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

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "attractorlab/attractor.h"
#include "attractorlab/complexity.h"
#include "attractorlab/error.h"
#include "attractorlab/generator_spec.h"
#include "attractorlab/generators.h"
#include "attractorlab/lz.h"
#include "attractorlab/oracle.h"
#include "attractorlab/profile.h"
#include "gtest/gtest.h"
#include "reference.h"

namespace attractorlab {
namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

Word W(const std::string& s) { return Word::from_string(s); }

Word fibonacci(std::size_t n) {
  return GeneratorSpec::parse("sturmian:1,(1)").prefix(n);
}

TEST(FactorComplexityTest, Examples) {
  Word fib = fibonacci(2000);
  EXPECT_EQ(factor_complexity(fib, 7), ref::factors(fib.str(), 7).size());
  EXPECT_EQ(factor_complexity(fib, 7), 8u);
  EXPECT_EQ(factor_complexity(W("aaaa"), 2), 1u);
  Word u3 = holub_words(IntSequence::parse("2,3,4"), 3)[3];
  for (std::size_t m = 1; m <= 6; ++m) {
    EXPECT_EQ(factor_complexity(u3, m), ref::factors(u3.str(), m).size());
    EXPECT_EQ(factor_complexity(u3, m), 2 * m);
  }
  EXPECT_EQ(code_of([] { factor_complexity(W("ab"), 0); }),
            ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { factor_complexity(W("ab"), 3); }),
            ErrorCode::kOutOfRange);
}

TEST(FactorComplexityTest, SturmianIsNPlusOneWhenSaturated) {
  for (const char* d : {"1,(1)", "2,1,3,(2)", "6,2,(1)"}) {
    Word x = sturmian_prefix(DirectiveSequence::parse(d), 3000);
    for (std::size_t m = 1; m <= 30; ++m) {
      if (!appearance(x, m).saturated) continue;
      EXPECT_EQ(factor_complexity(x, m), m + 1) << d << " m=" << m;
    }
  }
}

TEST(FactorComplexityTest, AperiodicFloor) {
  for (const char* s : {"morphic:a=ab;b=ba:seed=a", "morphic:a=ab;b=aa:seed=a",
                        "toeplitz:12???", "pow2", "holub:2,3,4,5"}) {
    Word x = GeneratorSpec::parse(s).prefix(800);
    for (std::size_t m = 1; m <= 40; ++m) {
      if (!appearance(x, m).saturated) break;
      EXPECT_GE(factor_complexity(x, m), m + 1) << s << " m=" << m;
    }
  }
}

TEST(AppearanceTest, Examples) {
  EXPECT_EQ(appearance(fibonacci(100), 1).value, 2u);
  EXPECT_TRUE(appearance(fibonacci(100), 1).saturated);
  EXPECT_EQ(appearance(W("aaaa"), 1).value, 1u);
  EXPECT_EQ(code_of([] { appearance(W("ab"), 3); }), ErrorCode::kOutOfRange);
}

TEST(AppearanceTest, MatchesReferenceAndFloor) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    std::string s = ref::random_word(rng, 40, 3);
    Word w = W(s);
    for (std::size_t m = 1; m <= s.size(); ++m) {
      Appearance a = appearance(w, m);
      EXPECT_EQ(a.value, ref::appearance(s, m)) << s << " m=" << m;
      EXPECT_GE(a.value + 1, factor_complexity(w, m) + m) << s;
    }
  }
}

TEST(AppearanceTest, SaturationSlack) {
  // "ab" needs the whole word: never saturated.
  EXPECT_FALSE(appearance(W("aaaaaaab"), 1).saturated);
  EXPECT_TRUE(appearance(W("abaaaaaa"), 1).saturated);
  EXPECT_FALSE(appearance(W("abaaaaaa"), 1, 7).saturated);
}

TEST(RecurrenceTest, Examples) {
  EXPECT_EQ(recurrence_estimate(W("ababab"), 2), 3u);
  EXPECT_EQ(recurrence_estimate(W("ababab"), 2), ref::recurrence("ababab", 2));
  EXPECT_EQ(recurrence_estimate(W("aaaa"), 1), 1u);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    std::string s = ref::random_word(rng, 30, 3);
    for (std::size_t m = 1; m <= s.size(); ++m)
      EXPECT_EQ(recurrence_estimate(W(s), m), ref::recurrence(s, m)) << s;
  }
}

TEST(RecurrenceTest, ThueMorseLinearTrend) {
  Word tm = GeneratorSpec::parse("morphic:a=ab;b=ba:seed=a").prefix(1024);
  for (std::size_t m = 2; m <= 32; m *= 2) {
    std::size_t r = recurrence_estimate(tm, m);
    EXPECT_GE(r, m);
    EXPECT_LE(r, 16 * m) << m;
  }
}

TEST(LzTest, Examples) {
  LZParse p = lz_parse(W("abababab"));
  EXPECT_EQ(p.phrase_ends, (std::vector<std::size_t>{1, 2, 4, 8}));
  EXPECT_EQ(ref::lz("abababab"),
            (std::vector<std::string>{"a", "b", "ab", "abab"}));
  EXPECT_EQ(lz_parse(W("a")).phrase_count(), 1u);
  EXPECT_GE(lz_parse(W("adcbaadcbadc")).phrase_count(), 4u);
  EXPECT_EQ(lz_parse(W("adcbaadcbadc")).phrase_count(),
            ref::lz("adcbaadcbadc").size());
}

TEST(LzTest, MatchesReferenceAndOracle) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 200; ++t) {
    std::string s = ref::random_word(rng, 80, 4);
    LZParse p = lz_parse(W(s));
    std::vector<std::string> phrases = ref::lz(s);
    ASSERT_EQ(p.phrase_count(), phrases.size()) << s;
    std::size_t end = 0;
    for (std::size_t k = 0; k < phrases.size(); ++k) {
      end += phrases[k].size();
      EXPECT_EQ(p.phrase_ends[k], end) << s;
    }
    EXPECT_EQ(p.phrase_count(), oracle::lz_phrase_count(s)) << s;
  }
}

TEST(LzTest, MonotoneUnderConcatenation) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    std::string u = ref::random_word(rng, 40, 3);
    std::string v = ref::random_word(rng, 40, 3);
    EXPECT_LE(lz_parse(W(u)).phrase_count(), lz_parse(W(u + v)).phrase_count());
  }
}

TEST(LzBoundTest, VacuousForSmallN) {
  LZBound b = lz_upper_bound_eval(16, 2);
  EXPECT_TRUE(b.vacuous);
  EXPECT_GE(b.epsilon, 1.0);
  EXPECT_EQ(code_of([] { lz_upper_bound(16, 2); }), ErrorCode::kVacuousBound);
  EXPECT_EQ(code_of([] { lz_upper_bound_eval(1024, 1); }),
            ErrorCode::kInvalidArgument);
}

TEST(LzBoundTest, FormulaAndDeBruijnWords) {
  const double n = 1 << 20;
  // ε = 2 (1 + log2(log2(2n))) / log2 n.
  double eps = 2 * (1 + std::log2(std::log2(2 * n))) / std::log2(n);
  double want = n / ((1 - eps) * std::log2(n));
  LZBound b = lz_upper_bound_eval(n, 2);
  EXPECT_FALSE(b.vacuous);
  EXPECT_NEAR(b.epsilon, eps, 1e-12);
  EXPECT_NEAR(b.value, want, 1e-6 * want);
  Word db = de_bruijn_word(20, Alphabet("01"), 1 << 21).prefix(1 << 20);
  EXPECT_LE(static_cast<double>(lz_parse(db).phrase_count()), b.value);
  Word db3 = de_bruijn_word(12, Alphabet("012")).prefix(1 << 19);
  EXPECT_LE(static_cast<double>(lz_parse(db3).phrase_count()),
            lz_upper_bound(1 << 19, 3));
}

TEST(LzBoundTest, RatioShrinks) {
  double prev = 1e9;
  for (int k = 12; k <= 40; k += 4) {
    double n = std::ldexp(1.0, k);
    double r = lz_upper_bound(n, 2) / n;
    EXPECT_LT(r, prev) << k;
    prev = r;
  }
}

std::vector<std::pair<double, double>> s_samples(const std::string& spec,
                                                 std::size_t from,
                                                 std::size_t to,
                                                 std::size_t offset) {
  GeneratorSpec g = GeneratorSpec::parse(spec);
  Word x = g.prefix(to + offset);
  std::vector<std::pair<double, double>> out;
  for (std::size_t n = from; n <= to; n *= 2) {
    out.emplace_back(n + offset,
                     gamma_star(x.prefix(n + offset)).size);
  }
  return out;
}

TEST(GrowthTest, Examples) {
  std::vector<std::pair<double, double>> tm;
  Word t = GeneratorSpec::parse("morphic:a=ab;b=ba:seed=a").prefix(256);
  for (std::size_t n = 16; n <= 256; n += 16)
    tm.emplace_back(n, gamma_star(t.prefix(n)).size);
  EXPECT_EQ(growth_classify(tm), Growth::kConstant);

  auto p2 = s_samples("pow2", 4, 512, 0);
  EXPECT_EQ(growth_classify(p2), Growth::kLogarithmic);

  std::vector<std::pair<double, double>> flat;
  for (int k = 0; k < 10; ++k) flat.emplace_back(std::ldexp(1.0, k + 1), 3.0);
  EXPECT_EQ(growth_classify(flat), Growth::kConstant);

  std::vector<std::pair<double, double>> lin;
  for (int k = 0; k < 10; ++k) {
    double n = std::ldexp(1.0, k + 2);
    lin.emplace_back(n, n);
  }
  EXPECT_EQ(growth_classify(lin), Growth::kSuperlogarithmic);
}

TEST(GrowthTest, InsufficientSamples) {
  std::vector<std::pair<double, double>> few = {{1, 1}, {2, 1}, {4, 1}};
  EXPECT_EQ(code_of([&] { growth_classify(few); }),
            ErrorCode::kInsufficientSamples);
  std::vector<std::pair<double, double>> narrow;
  for (int n = 100; n < 110; ++n) narrow.emplace_back(n, 2);
  EXPECT_EQ(code_of([&] { growth_classify(narrow); }),
            ErrorCode::kInsufficientSamples);
}

TEST(ProfileTest, PeriodDoubling) {
  ProfileOptions o;
  o.measures = MeasureSet::parse("s,span");
  o.grid = SampleGrid::all();
  ProfileTable t =
      profile(GeneratorSpec::parse("morphic:a=ab;b=aa:seed=a"), 192, o);
  ASSERT_EQ(t.rows.size(), 192u);
  for (const ProfileRow& r : t.rows) {
    if (r.n > 1) {
      EXPECT_EQ(r.s, 2u) << r.n;
    }
    EXPECT_FALSE(r.lm.has_value());
  }
  EXPECT_EQ(t.rows[3].span, 1u);
  EXPECT_EQ(t.rows[7].span, 2u);
}

TEST(ProfileTest, ThueMorseBoundedByFour) {
  ProfileOptions o;
  o.measures = MeasureSet::parse("s");
  o.grid = SampleGrid::all();
  ProfileTable t =
      profile(GeneratorSpec::parse("morphic:a=ab;b=ba:seed=a"), 160, o);
  for (const ProfileRow& r : t.rows) EXPECT_LE(*r.s, 4u) << r.n;
}

TEST(ProfileTest, ConstantWord) {
  ProfileOptions o;
  o.measures = MeasureSet::all();
  ProfileTable t = profile(GeneratorSpec::parse("periodic::a"), 300, o);
  for (const ProfileRow& r : t.rows) {
    EXPECT_EQ(r.s, 1u);
    EXPECT_EQ(r.span, 0u);
    EXPECT_EQ(r.lm, 1u);
    EXPECT_EQ(r.z, ref::lz(std::string(r.n, 'a')).size()) << r.n;
  }
}

TEST(ProfileTest, RowInvariants) {
  ProfileOptions o;
  o.measures = MeasureSet::all();
  ProfileTable t = profile(GeneratorSpec::parse("toeplitz:12???"), 200, o);
  std::size_t z = 0;
  for (const ProfileRow& r : t.rows) {
    EXPECT_LE(*r.s, *r.span + 1);
    EXPECT_LE(*r.span, *r.lm);
    EXPECT_GE(*r.z, z);
    z = *r.z;
  }
}

TEST(ProfileTest, GuardFlagsRows) {
  ProfileOptions o;
  o.measures = MeasureSet::parse("s,span,lm,z");
  o.grid = SampleGrid::list({8, 16, 32});
  o.guards = AttractorGuards{16, 16};
  ProfileTable t = profile(GeneratorSpec::parse("pow2"), 32, o);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_TRUE(t.rows[1].s.has_value());
  EXPECT_FALSE(t.rows[2].s.has_value());
  EXPECT_TRUE(t.rows[2].z.has_value());
  EXPECT_NE(std::find(t.rows[2].flags.begin(), t.rows[2].flags.end(),
                      "s:guard"),
            t.rows[2].flags.end());
}

TEST(ProfileTest, GridParsing) {
  EXPECT_EQ(SampleGrid::parse("list:5,1,3").points(4),
            (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(SampleGrid::parse("pow2").points(20),
            (std::vector<std::size_t>{1, 2, 4, 8, 16}));
  std::vector<std::size_t> d = SampleGrid().points(1024);
  EXPECT_EQ(d.size(), 256u + 2u);
  EXPECT_EQ(d.back(), 1024u);
  EXPECT_EQ(code_of([] { SampleGrid::parse("every"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { MeasureSet::parse("s,q"); }), ErrorCode::kParse);
}

TEST(ProfileTest, CsvRoundTrip) {
  ProfileOptions o;
  o.measures = MeasureSet::all();
  o.grid = SampleGrid::list({1, 2, 3, 10, 40});
  o.guards = AttractorGuards{20, 16};
  ProfileTable t = profile(GeneratorSpec::parse("sturmian:1,(1)"), 40, o);
  std::stringstream s;
  write_csv(s, t, 42);
  EXPECT_NE(s.str().find("n,s,span,lm,p,A,z,flags"), std::string::npos);
  EXPECT_NE(s.str().find("# seed: 42"), std::string::npos);
  ProfileTable back = read_csv(s);
  EXPECT_EQ(back, t);
  std::istringstream bad("n,s,span\n1,1,0\n");
  EXPECT_EQ(code_of([&] { read_csv(bad); }), ErrorCode::kParse);
}

TEST(ProfileTest, JsonLines) {
  ProfileOptions o;
  o.grid = SampleGrid::list({4, 8});
  ProfileTable t = profile(GeneratorSpec::parse("pow2"), 8, o);
  std::stringstream s;
  write_jsonl(s, t, 9);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(s, line)) {
    ++lines;
    EXPECT_EQ(line.rfind("{\"source\":\"pow2\",\"seed\":9,", 0), 0u) << line;
  }
  EXPECT_EQ(lines, 2u);
}

TEST(ProfileTest, InvalidNMax) {
  EXPECT_EQ(code_of([] { profile(GeneratorSpec::parse("pow2"), 0); }),
            ErrorCode::kOutOfRange);
}

}  // namespace
}  // namespace attractorlab
