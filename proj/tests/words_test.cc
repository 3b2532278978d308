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

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "attractorlab/error.h"
#include "attractorlab/generator_spec.h"
#include "attractorlab/generators.h"
#include "attractorlab/morphism.h"
#include "attractorlab/sequences.h"
#include "attractorlab/word.h"
#include "attractorlab/word_io.h"
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

std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(w.str());
  return out;
}

const std::map<char, std::string> kThueMorse01 = {{'0', "01"}, {'1', "10"}};
const std::map<char, std::string> kPd = {{'1', "10"}, {'0', "11"}};

TEST(AlphabetTest, RejectsDuplicatesAndEmpty) {
  EXPECT_EQ(code_of([] { Alphabet(""); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { Alphabet("aba"); }), ErrorCode::kInvalidArgument);
  Alphabet a("ba");
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a.symbol(0), 'b');
  EXPECT_FALSE(a.contains('c'));
}

TEST(WordTest, FactorIsOneBasedAndInclusive) {
  Word w = Word::from_string("abccabc");
  EXPECT_EQ(w.factor(4, 6).str(), "cab");
  EXPECT_TRUE(w.factor(5, 4).empty());
  EXPECT_EQ(w.at(1), 'a');
  EXPECT_EQ(code_of([&] { w.at(0); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([&] { w.factor(3, 8); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(w.letter_count(), 3u);
  EXPECT_EQ(w.reversed().str(), "cbaccba");
}

TEST(WordTest, UnknownSymbolRejected) {
  EXPECT_EQ(code_of([] { Word::from_string("abc", Alphabet("ab")); }),
            ErrorCode::kUnknownSymbol);
}

TEST(MorphismTest, FixedPointPrefixes) {
  Morphism tm = Morphism::parse("0=01;1=10");
  EXPECT_EQ(morphic_prefix(tm, '0', 16).str(), "0110100110010110");
  Morphism pd = Morphism::parse("1=10;0=11");
  EXPECT_EQ(morphic_prefix(pd, '1', 12).str(), "101110101011");
  Morphism m = Morphism::parse("a=ab;b=b");
  EXPECT_EQ(morphic_prefix(m, 'a', 1).str(), "a");
}

TEST(MorphismTest, FixedPointMatchesReferenceExpander) {
  Morphism tm = Morphism::parse("0=01;1=10");
  Morphism pd = Morphism::parse("1=10;0=11");
  for (std::size_t len : {1u, 7u, 64u, 1000u}) {
    EXPECT_EQ(morphic_prefix(tm, '0', len).str(),
              ref::fixed_point(kThueMorse01, '0', len));
    EXPECT_EQ(morphic_prefix(pd, '1', len).str(),
              ref::fixed_point(kPd, '1', len));
  }
}

TEST(MorphismTest, Errors) {
  EXPECT_EQ(code_of([] { Morphism::parse("a=;b=a"); }),
            ErrorCode::kErasingRule);
  Morphism m = Morphism::parse("a=ba;b=ab");
  EXPECT_FALSE(m.prolongable_on('a'));
  EXPECT_EQ(code_of([&] { morphic_prefix(m, 'a', 4); }),
            ErrorCode::kNotProlongable);
  Morphism tm = Morphism::parse("a=ab;b=ba");
  EXPECT_EQ(code_of([&] { morphic_prefix(tm, 'a', 0); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { tm.apply(Word::from_string("abc")); }),
            ErrorCode::kUnknownSymbol);
  EXPECT_EQ(code_of([&] { iterate_morphism(tm, 'a', 40, 1 << 16); }),
            ErrorCode::kLengthOverflow);
}

TEST(MorphismTest, Iterate) {
  Morphism tm = Morphism::parse("0=01;1=10");
  EXPECT_EQ(iterate_morphism(tm, '0', 2).str(), "0110");
  EXPECT_EQ(iterate_morphism(tm, '0', 0).str(), "0");
  Morphism pd = Morphism::parse("1=10;0=11");
  EXPECT_EQ(iterate_morphism(pd, '1', 3).str(),
            ref::image(kPd, ref::image(kPd, ref::image(kPd, "1"))));
  EXPECT_EQ(iterate_morphism(pd, '1', 3).str(), "10111010");
}

TEST(MorphismTest, Apply) {
  Morphism tm = Morphism::parse("0=01;1=10");
  EXPECT_EQ(tm.apply(Word::from_string("01")).str(), "0110");
  EXPECT_TRUE(tm.apply(Word(Alphabet("01"))).empty());
  Morphism fib = Morphism::parse("a=ab;b=a");
  EXPECT_EQ(fib.apply(Word::from_string("aba")).str(),
            ref::image({{'a', "ab"}, {'b', "a"}}, "aba"));
  EXPECT_EQ(fib.apply(Word::from_string("aba")).str(), "abaab");
}

TEST(MorphismTest, Metadata) {
  Morphism m = Morphism::parse("a=abc;b=ab;c=c");
  EXPECT_EQ(m.max_image_length(), 3u);
  EXPECT_FALSE(m.uniform_length().has_value());
  EXPECT_TRUE(m.prolongable_on('a'));
  EXPECT_FALSE(m.prolongable_on('c'));
  EXPECT_EQ(Morphism::parse("a=ab;b=ba").uniform_length(), 2u);
}

TEST(MorphismTest, CodingAppliedAfterFixedPoint) {
  Morphism tm = Morphism::parse("a=ab;b=ba");
  Word w = morphic_prefix(tm, 'a', 8, Coding::parse("a=0;b=1"));
  EXPECT_EQ(w.str(), "01101001");
}

TEST(MorphismTest, PrefixCoherenceWithIterates) {
  Morphism pd = Morphism::parse("a=ab;b=aa");
  for (std::size_t i = 0; i < 10; ++i) {
    Word it = iterate_morphism(pd, 'a', i);
    EXPECT_EQ(morphic_prefix(pd, 'a', it.size()).str(), it.str());
  }
}

TEST(SequenceTest, ParseAndTail) {
  EventuallyPeriodic e = EventuallyPeriodic::parse("1,2,(3,4)");
  EXPECT_EQ(e.at(0), 1u);
  EXPECT_EQ(e.at(4), 3u);
  EXPECT_EQ(e.at(5), 4u);
  EXPECT_TRUE(e.infinite());
  EXPECT_EQ(e.str(), "1,2,(3,4)");
  EventuallyPeriodic f = EventuallyPeriodic::parse("5,6");
  EXPECT_EQ(f.length(), 2u);
  EXPECT_EQ(code_of([&] { f.at(2); }), ErrorCode::kSequenceExhausted);
  EXPECT_EQ(code_of([] { EventuallyPeriodic::parse("1,x"); }),
            ErrorCode::kParse);
}

TEST(SequenceTest, DirectiveConstraints) {
  EXPECT_NO_THROW(DirectiveSequence::parse("0,1,(1)"));
  EXPECT_EQ(code_of([] { DirectiveSequence::parse("1,0,(1)"); }),
            ErrorCode::kInvalidSequence);
  EXPECT_EQ(code_of([] { DirectiveSequence::parse("1,(0)"); }),
            ErrorCode::kInvalidSequence);
  DirectiveSequence d = DirectiveSequence::parse("1,2");
  EXPECT_EQ(code_of([&] { d.at(2); }), ErrorCode::kDirectiveExhausted);
}

TEST(SequenceTest, IntSequenceStrictness) {
  EXPECT_EQ(code_of([] { IntSequence::parse("3,2"); }),
            ErrorCode::kInvalidSequence);
  EXPECT_NO_THROW(IntSequence::parse("3,2", /*strict=*/false));
  EXPECT_EQ(code_of([] { IntSequence::parse("0,1"); }),
            ErrorCode::kInvalidSequence);
}

TEST(SequenceTest, ToeplitzPatternValidation) {
  EXPECT_EQ(code_of([] { ToeplitzPattern("???"); }),
            ErrorCode::kInvalidPattern);
  EXPECT_EQ(code_of([] { ToeplitzPattern("12"); }),
            ErrorCode::kInvalidPattern);
  EXPECT_EQ(ToeplitzPattern("12???").hole_count(), 3u);
}

TEST(SturmianTest, StandardWords) {
  DirectiveSequence fib = DirectiveSequence::parse("(1)");
  EXPECT_EQ(strs(standard_words(fib, 4)),
            (std::vector<std::string>{"b", "a", "ab", "aba", "abaab"}));
  EXPECT_EQ(strs(standard_words(fib, 1)),
            (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(strs(standard_words(DirectiveSequence::parse("6,2,(1)"), 2)),
            (std::vector<std::string>{"b", "a", "aaaaaab"}));
  EXPECT_EQ(code_of([] {
              standard_words(DirectiveSequence::parse("1,1"), 5);
            }),
            ErrorCode::kDirectiveExhausted);
}

TEST(SturmianTest, LengthRecursion) {
  DirectiveSequence d = DirectiveSequence::parse("2,1,3,(2)");
  std::vector<Word> xs = standard_words(d, 9);
  std::vector<std::uint64_t> lens = standard_word_lengths(d, 9);
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    EXPECT_EQ(xs[i + 1].size(), d.at(i - 1) * xs[i].size() + xs[i - 1].size());
    EXPECT_EQ(lens[i + 1], xs[i + 1].size());
  }
}

TEST(SturmianTest, Prefixes) {
  DirectiveSequence fib = DirectiveSequence::parse("1,(1)");
  EXPECT_EQ(sturmian_prefix(fib, 8).str(), "abaababa");
  EXPECT_EQ(sturmian_prefix(fib, 21).str(), "abaababaabaababaababa");
  EXPECT_EQ(sturmian_prefix(DirectiveSequence::parse("6,2,(1)"), 7).str(),
            "aaaaaab");
  EXPECT_EQ(sturmian_prefix(fib, 1).str(), "a");
  EXPECT_EQ(code_of([] {
              sturmian_prefix(DirectiveSequence::parse("1,1"), 100);
            }),
            ErrorCode::kDirectiveExhausted);
}

TEST(SturmianTest, FibonacciMatchesFixedPoint) {
  std::string fp = ref::fixed_point({{'a', "ab"}, {'b', "a"}}, 'a', 10000);
  EXPECT_EQ(sturmian_prefix(DirectiveSequence::parse("(1)"), 10000).str(), fp);
}

TEST(SturmianTest, MatchesReferenceRecursion) {
  std::vector<std::vector<std::size_t>> heads = {
      {6, 2}, {2, 1, 3}, {0, 1}, {0, 3, 2}, {4}};
  for (const auto& head : heads) {
    std::string text;
    for (std::size_t x : head) text += std::to_string(x) + ",";
    text += "(2)";
    auto d = [&](std::size_t i) { return i < head.size() ? head[i] : 2; };
    EXPECT_EQ(sturmian_prefix(DirectiveSequence::parse(text), 700).str(),
              ref::sturmian(d, 700))
        << text;
  }
}

TEST(ToeplitzTest, Prefixes) {
  EXPECT_EQ(toeplitz_prefix(ToeplitzPattern("12???"), 20).str(),
            "12121122111222112112");
  EXPECT_EQ(toeplitz_prefix(ToeplitzPattern("12???"), 45).str(),
            "121211221112221121121222112121121211222212112");
  EXPECT_EQ(toeplitz_prefix(ToeplitzPattern("1?"), 4).str(), "1111");
  EXPECT_EQ(toeplitz_prefix(ToeplitzPattern("12???"), 2).str(), "12");
}

TEST(ToeplitzTest, MatchesPositionalReference) {
  for (const char* p : {"12???", "1?", "ab?", "a??b?", "1?2"}) {
    EXPECT_EQ(toeplitz_prefix(ToeplitzPattern(p), 2000).str(),
              ref::toeplitz(p, 2000))
        << p;
  }
}

TEST(ToeplitzTest, LeadingHoleRejected) {
  EXPECT_EQ(code_of([] { toeplitz_prefix(ToeplitzPattern("?1"), 4); }),
            ErrorCode::kInvalidPattern);
}

TEST(HolubTest, Words) {
  IntSequence seq = IntSequence::parse("2,3,4,5");
  std::vector<Word> u = holub_words(seq, 4);
  std::vector<std::string> want = ref::holub({2, 3, 4, 5}, 4);
  EXPECT_EQ(strs(u), want);
  EXPECT_EQ(u[1].str(), "abb");
  EXPECT_EQ(holub_words(seq, 0).size(), 1u);
  EXPECT_TRUE(holub_words(seq, 0)[0].empty());
  // |u_{i+1}| = (n_{i+1} + 2)|u_i| + n_{i+1} + 1.
  EXPECT_EQ(u[2].size(), 19u);
  EXPECT_EQ(holub_lengths(seq, 4),
            (std::vector<std::uint64_t>{0, 3, 19, 119, 839}));
}

TEST(HolubTest, Errors) {
  EXPECT_EQ(code_of([] { holub_words(IntSequence::parse("1,2,3"), 2); }),
            ErrorCode::kInvalidSequence);
  EXPECT_EQ(code_of([] { holub_words(IntSequence::parse("2,3"), 3); }),
            ErrorCode::kSequenceExhausted);
}

TEST(HolubTest, PredictedAttractor) {
  IntSequence seq = IntSequence::parse("2,3,4,5");
  EXPECT_EQ(holub_predicted_attractor(seq, 0),
            (std::vector<std::size_t>{1, 3}));
  // {|u_1|+1, (|u_0|+1)+(|u_1|+1), |u_2|-|u_1|}.
  EXPECT_EQ(holub_predicted_attractor(seq, 1),
            (std::vector<std::size_t>{4, 5, 16}));
}

TEST(Power2Test, Prefixes) {
  EXPECT_EQ(power2_char_prefix(16).str(), "1101000100000001");
  EXPECT_EQ(power2_char_prefix(1).str(), "1");
  EXPECT_EQ(power2_char_prefix(5).str(), "11010");
  EXPECT_EQ(code_of([] { power2_char_prefix(0); }),
            ErrorCode::kInvalidArgument);
}

TEST(NestedZerosTest, Prefixes) {
  IntSequence ns = IntSequence::parse("1,2,3,4,5,6");
  EXPECT_EQ(nested_zero_prefix(ns, 7).str(), ref::nested_zeros({1, 2, 3}, 7));
  EXPECT_EQ(nested_zero_prefix(ns, 7).str(), "1010010");
  EXPECT_EQ(nested_zero_prefix(ns, 1).str(), "1");
  EXPECT_EQ(nested_zero_prefix(IntSequence::parse("2,3"), 4).str(), "1001");
  EXPECT_EQ(nested_zero_prefix(IntSequence::parse("1,2,3,4,5,6,7"), 300).str(),
            ref::nested_zeros({1, 2, 3, 4, 5, 6, 7}, 300));
  EXPECT_EQ(code_of([] { nested_zero_prefix(IntSequence::parse("1"), 50); }),
            ErrorCode::kSequenceExhausted);
}

TEST(DeBruijnTest, EveryWindowOnce) {
  EXPECT_EQ(de_bruijn_word(1, Alphabet("ab")).str().size(), 2u);
  for (auto [k, sym] : std::vector<std::pair<std::size_t, std::string>>{
           {1, "ab"}, {2, "01"}, {3, "01"}, {4, "012"}, {6, "01"}}) {
    std::string w = de_bruijn_word(k, Alphabet(sym)).str();
    std::size_t expect = 1;
    for (std::size_t i = 0; i < k; ++i) expect *= sym.size();
    EXPECT_EQ(w.size(), expect + k - 1);
    EXPECT_EQ(ref::factors(w, k).size(), expect);
  }
  EXPECT_EQ(code_of([] { de_bruijn_word(2, Alphabet("a")); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { de_bruijn_word(0, Alphabet("ab")); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { de_bruijn_word(30, Alphabet("ab"), 1 << 20); }),
            ErrorCode::kLengthOverflow);
}

TEST(UltimatelyPeriodicTest, Prefix) {
  Word u = Word::from_string("c");
  Word v = Word::from_string("ab");
  EXPECT_EQ(ultimately_periodic_prefix(u, v, 6).str(), "cababa");
  EXPECT_EQ(ultimately_periodic_prefix(Word(Alphabet("a")),
                                       Word::from_string("a"), 3)
                .str(),
            "aaa");
}

TEST(GeneratorSpecTest, Kinds) {
  EXPECT_EQ(GeneratorSpec::parse("morphic:0=01;1=10:seed=0").prefix(16).str(),
            "0110100110010110");
  EXPECT_EQ(GeneratorSpec::parse("morphic:a=ab;b=ba:seed=a:coding=a=0;b=1")
                .prefix(4)
                .str(),
            "0110");
  EXPECT_EQ(GeneratorSpec::parse("sturmian:1,(1)").prefix(8).str(),
            "abaababa");
  EXPECT_EQ(GeneratorSpec::parse("toeplitz:12???").prefix(20).str(),
            "12121122111222112112");
  EXPECT_EQ(GeneratorSpec::parse("holub:2,3,4").prefix(19).str(),
            ref::holub({2, 3, 4}, 2)[2]);
  EXPECT_EQ(GeneratorSpec::parse("pow2").prefix(16).str(),
            "1101000100000001");
  EXPECT_EQ(GeneratorSpec::parse("nestedzeros:2,3").prefix(4).str(), "1001");
  EXPECT_EQ(GeneratorSpec::parse("periodic:c:ab").prefix(5).str(), "cabab");
  GeneratorSpec db = GeneratorSpec::parse("debruijn:3:01");
  EXPECT_EQ(db.natural_length(), 10u);
  EXPECT_EQ(ref::factors(db.prefix(10).str(), 3).size(), 8u);
  EXPECT_EQ(code_of([&] { db.prefix(11); }), ErrorCode::kOutOfRange);
}

TEST(GeneratorSpecTest, ErrorsNameTheToken) {
  for (const char* bad : {"nope", "morphic:a=ab", "morphic:a=ab;b=ba:x=a",
                          "sturmian:1,(x)", "toeplitz:???", "debruijn:2:a",
                          "pow2:3", "morphic:a=ba;b=ab:seed=a"}) {
    try {
      GeneratorSpec::parse(bad);
      ADD_FAILURE() << bad << " parsed";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
  try {
    GeneratorSpec::parse("sturmian:1,(x)");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("x"), std::string::npos);
  }
}

TEST(GeneratorSpecTest, PrefixCoherenceAndDeterminism) {
  for (const char* s : {"morphic:a=ab;b=aa:seed=a", "sturmian:2,1,3,(2)",
                        "toeplitz:12???", "holub:2,3,4,5", "pow2",
                        "nestedzeros:1,2,3,4,5,6,7,8", "periodic:abc:ab"}) {
    GeneratorSpec g = GeneratorSpec::parse(s);
    std::string big = g.prefix(400).str();
    EXPECT_EQ(g.prefix(400).str(), big) << s;
    for (std::size_t m : {1u, 17u, 199u})
      EXPECT_EQ(g.prefix(m).str(), big.substr(0, m)) << s;
  }
}

TEST(GeneratorSpecTest, LengthCap) {
  EXPECT_EQ(code_of([] {
              GeneratorSpec::parse("pow2").prefix(100, /*max_length=*/50);
            }),
            ErrorCode::kLengthOverflow);
}

TEST(WordIoTest, RoundTrip) {
  std::vector<Word> ws = {Word::from_string("abba"),
                          Word::from_string("ba")};
  std::stringstream s;
  write_words(s, ws);
  std::vector<Word> back = read_words(s);
  EXPECT_EQ(strs(back), strs(ws));
}

TEST(WordIoTest, DeclaredAlphabet) {
  std::istringstream s("#alphabet: abc\nabba\n\n  cab \n");
  std::vector<Word> ws = read_words(s);
  ASSERT_EQ(ws.size(), 2u);
  EXPECT_EQ(ws[0].alphabet().size(), 3u);
  EXPECT_EQ(ws[1].str(), "cab");
  std::istringstream bad("#alphabet: ab\nabc\n");
  EXPECT_EQ(code_of([&] { read_words(bad); }), ErrorCode::kParse);
  std::istringstream late("ab\n#alphabet: ab\n");
  EXPECT_EQ(code_of([&] { read_words(late); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { read_word_file("/nonexistent/file"); }),
            ErrorCode::kIo);
}

TEST(WordIoTest, ContentHashIsStable) {
  EXPECT_EQ(content_hash(""), "cbf29ce484222325");
  EXPECT_EQ(content_hash("a"), "af63dc4c8601ec8c");
  EXPECT_NE(content_hash("ab"), content_hash("ba"));
}

}  // namespace
}  // namespace attractorlab
