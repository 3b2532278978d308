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

#include "attractorlab/generators.h"

#include <functional>
#include <set>
#include <string>

#include "attractorlab/error.h"

namespace attractorlab {
namespace {

const Alphabet& ab_alphabet() {
  static const Alphabet a("ab");
  return a;
}

const Alphabet& binary_alphabet() {
  static const Alphabet a("01");
  return a;
}

void require_positive_length(std::size_t length) {
  if (length == 0) {
    throw Error(ErrorCode::kInvalidArgument, "prefix length must be positive");
  }
}

std::string repeat(const std::string& s, std::uint64_t times,
                   std::size_t max_length) {
  if (!s.empty() && times > max_length / s.size()) {
    throw Error(ErrorCode::kLengthOverflow,
                "repetition exceeds cap " + std::to_string(max_length));
  }
  std::string out;
  out.reserve(s.size() * times);
  for (std::uint64_t t = 0; t < times; ++t) out += s;
  return out;
}

void check_holub_sequence(const IntSequence& seq, std::size_t k) {
  if (k == 0) return;
  if (seq.at(0) < 2) {
    throw Error(ErrorCode::kInvalidSequence, "Holub words need n_1 >= 2");
  }
  for (std::size_t i = 1; i < k; ++i) {
    if (seq.at(i) <= seq.at(i - 1)) {
      throw Error(ErrorCode::kInvalidSequence,
                  "Holub sequence must increase strictly");
    }
  }
}

}  // namespace

std::vector<Word> standard_words(const DirectiveSequence& d, std::size_t k,
                                 std::size_t max_length) {
  std::vector<std::string> xs{"b", "a"};
  for (std::size_t i = 1; i < k; ++i) {
    std::string next = repeat(xs[i], d.at(i - 1), max_length);
    next += xs[i - 1];
    check_length(next.size(), max_length, "standard word");
    xs.push_back(std::move(next));
  }
  std::vector<Word> out;
  for (std::size_t i = 0; i <= k && i < xs.size(); ++i) {
    out.push_back(Word::from_string(xs[i], ab_alphabet()));
  }
  return out;
}

std::vector<std::uint64_t> standard_word_lengths(const DirectiveSequence& d,
                                                 std::size_t k) {
  std::vector<std::uint64_t> lens{1, 1};
  for (std::size_t i = 1; i < k; ++i) {
    lens.push_back(d.at(i - 1) * lens[i] + lens[i - 1]);
  }
  lens.resize(std::min<std::size_t>(lens.size(), k + 1));
  return lens;
}

Word sturmian_prefix(const DirectiveSequence& d, std::size_t length,
                     std::size_t max_length) {
  require_positive_length(length);
  check_length(length, max_length, "Sturmian prefix");
  // x_k is a prefix of the limit for every k >= 2, and |x_2| >= 1. Only
  // the first `length` symbols of each x_k are ever needed.
  std::string prev = "a";
  std::string cur;
  for (std::uint64_t t = 0; t < d.at(0) && cur.size() < length; ++t) {
    cur += 'a';
  }
  if (cur.size() < length) cur += 'b';
  for (std::size_t i = 2; cur.size() < length; ++i) {
    std::uint64_t times = d.at(i - 1);
    std::string next;
    for (std::uint64_t t = 0; t < times && next.size() < length; ++t) {
      next += cur;
    }
    if (next.size() < length) next += prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  cur.resize(length);
  return Word::from_string(cur, ab_alphabet());
}

Word toeplitz_prefix(const ToeplitzPattern& p, std::size_t length,
                     std::size_t max_length) {
  require_positive_length(length);
  check_length(length, max_length, "Toeplitz prefix");
  if (p.is_hole(0)) {
    throw Error(ErrorCode::kInvalidPattern,
                "Toeplitz pattern \"" + p.str() +
                    "\" starts with a hole; position 1 is never filled");
  }
  std::string out(length, kToeplitzHole);
  std::vector<std::size_t> holes(length);
  for (std::size_t i = 0; i < length; ++i) holes[i] = i;
  // Each layer writes p^ω onto the remaining holes in order; the pattern
  // starts with a letter, so every layer fills at least one position.
  while (!holes.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t t = 0; t < holes.size(); ++t) {
      char c = p[t % p.size()];
      if (c == kToeplitzHole) {
        next.push_back(holes[t]);
      } else {
        out[holes[t]] = c;
      }
    }
    holes = std::move(next);
  }
  std::string letters;
  for (char c : p.str()) {
    if (c != kToeplitzHole && letters.find(c) == std::string::npos) {
      letters.push_back(c);
    }
  }
  return Word::from_string(out, Alphabet(letters));
}

std::vector<std::uint64_t> holub_lengths(const IntSequence& seq,
                                         std::size_t k) {
  check_holub_sequence(seq, k);
  std::vector<std::uint64_t> lens{0};
  for (std::size_t i = 1; i <= k; ++i) {
    std::uint64_t n_i = seq.at(i - 1);
    lens.push_back((n_i + 2) * lens[i - 1] + n_i + 1);
  }
  return lens;
}

std::vector<Word> holub_words(const IntSequence& seq, std::size_t k,
                              std::size_t max_length) {
  check_holub_sequence(seq, k);
  std::vector<std::string> us{""};
  for (std::size_t i = 1; i <= k; ++i) {
    const std::string& prev = us.back();
    std::uint64_t n_i = seq.at(i - 1);
    check_length((n_i + 2) * prev.size() + n_i + 1, max_length, "Holub word");
    std::string next = prev + "a" + repeat(prev + "b", n_i, max_length) + prev;
    us.push_back(std::move(next));
  }
  std::vector<Word> out;
  for (const auto& u : us) out.push_back(Word::from_string(u, ab_alphabet()));
  return out;
}

std::vector<std::size_t> holub_predicted_attractor(const IntSequence& seq,
                                                   std::size_t i) {
  auto lens = holub_lengths(seq, i + 1);
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k <= i; ++k) sum += lens[k] + 1;
  std::set<std::size_t> positions{lens[i] + 1, sum, lens[i + 1] - lens[i]};
  return {positions.begin(), positions.end()};
}

Word power2_char_prefix(std::size_t length, std::size_t max_length) {
  require_positive_length(length);
  check_length(length, max_length, "powers-of-two prefix");
  std::string out(length, '0');
  for (std::size_t p = 1; p <= length; p *= 2) out[p - 1] = '1';
  return Word::from_string(out, binary_alphabet());
}

Word nested_zero_prefix(const IntSequence& seq, std::size_t length,
                        std::size_t max_length) {
  require_positive_length(length);
  check_length(length, max_length, "nested-zeros prefix");
  std::string v = "1";
  for (std::size_t i = 0; v.size() < length; ++i) {
    std::uint64_t zeros = seq.at(i);
    std::string next = v;
    next.append(std::min<std::uint64_t>(zeros, length), '0');
    if (next.size() < length) next += v;
    v = std::move(next);
  }
  v.resize(length);
  return Word::from_string(v, binary_alphabet());
}

Word de_bruijn_word(std::size_t k, const Alphabet& a, std::size_t max_length) {
  if (k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "de Bruijn order must be >= 1");
  }
  const std::size_t sigma = a.size();
  if (sigma < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "de Bruijn words need at least two symbols");
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > max_length / sigma) {
      throw Error(ErrorCode::kLengthOverflow,
                  "de Bruijn word of order " + std::to_string(k) +
                      " exceeds cap " + std::to_string(max_length));
    }
    total *= sigma;
  }
  check_length(total + k - 1, max_length, "de Bruijn word");

  // Concatenation of Lyndon words whose length divides k, in lexicographic
  // order (Fredricksen-Kessler-Maiorana).
  std::vector<Symbol> seq;
  seq.reserve(total + k - 1);
  std::vector<std::size_t> buf(k + 1, 0);
  std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t t,
                                                          std::size_t p) {
    if (t > k) {
      if (k % p == 0) {
        for (std::size_t j = 1; j <= p; ++j) {
          seq.push_back(static_cast<Symbol>(buf[j]));
        }
      }
      return;
    }
    buf[t] = buf[t - p];
    gen(t + 1, p);
    for (std::size_t j = buf[t - p] + 1; j < sigma; ++j) {
      buf[t] = j;
      gen(t + 1, t);
    }
  };
  gen(1, 1);
  for (std::size_t i = 0; i + 1 < k; ++i) seq.push_back(seq[i]);
  return Word(a, std::move(seq));
}

Word ultimately_periodic_prefix(const Word& u, const Word& v,
                                std::size_t length) {
  if (v.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "period word must be non-empty");
  }
  std::string us = u.str();
  std::string vs = v.str();
  std::string out = us.substr(0, std::min(length, us.size()));
  while (out.size() < length) {
    out.push_back(vs[(out.size() - us.size()) % vs.size()]);
  }
  Alphabet alphabet = u.alphabet().merged_with(v.alphabet());
  return Word::from_string(out, alphabet);
}

}  // namespace attractorlab
