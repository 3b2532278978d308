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

#include "attractorlab/morphism.h"

#include <set>

#include "attractorlab/error.h"

namespace attractorlab {
namespace {

std::string source_symbols(
    const std::vector<std::pair<char, std::string>>& rules) {
  std::string out;
  for (const auto& [c, image] : rules) out.push_back(c);
  return out;
}

std::string target_symbols(
    const std::vector<std::pair<char, std::string>>& rules) {
  std::string out = source_symbols(rules);
  for (const auto& [c, image] : rules) {
    for (char d : image) {
      if (out.find(d) == std::string::npos) out.push_back(d);
    }
  }
  return out;
}

std::vector<std::pair<char, std::string>> validated(
    std::vector<std::pair<char, std::string>> rules) {
  if (rules.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "morphism needs at least one rule");
  }
  std::set<char> seen;
  for (const auto& [c, image] : rules) {
    if (!seen.insert(c).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("duplicate rule for '") + c + "'");
    }
    if (image.empty()) {
      throw Error(ErrorCode::kErasingRule,
                  std::string("rule for '") + c + "' erases the symbol");
    }
  }
  return rules;
}

}  // namespace

Morphism::Morphism(std::vector<std::pair<char, std::string>> rules)
    : rules_(validated(std::move(rules))),
      source_(source_symbols(rules_)),
      target_(target_symbols(rules_)) {}

Morphism Morphism::parse(std::string_view text) {
  std::vector<std::pair<char, std::string>> rules;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    std::string_view token = text.substr(
        start, semi == std::string_view::npos ? std::string_view::npos
                                              : semi - start);
    if (token.size() < 2 || token[1] != '=') {
      throw Error(ErrorCode::kParse, "bad morphism rule '" +
                                         std::string(token) +
                                         "' (expected <symbol>=<image>)");
    }
    if (token.size() == 2) {
      throw Error(ErrorCode::kErasingRule, "rule '" + std::string(token) +
                                               "' erases the symbol");
    }
    rules.emplace_back(token[0], std::string(token.substr(2)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return Morphism(std::move(rules));
}

const std::string& Morphism::image(char c) const {
  for (const auto& [s, image] : rules_) {
    if (s == c) return image;
  }
  throw Error(ErrorCode::kUnknownSymbol,
              std::string("no rule for symbol '") + c + "'");
}

bool Morphism::prolongable_on(char c) const {
  if (!source_.contains(c)) return false;
  const std::string& img = image(c);
  return img.size() >= 2 && img.front() == c;
}

std::optional<std::size_t> Morphism::uniform_length() const {
  std::size_t k = rules_.front().second.size();
  for (const auto& [c, image] : rules_) {
    if (image.size() != k) return std::nullopt;
  }
  return k;
}

std::size_t Morphism::max_image_length() const {
  std::size_t ell = 0;
  for (const auto& [c, image] : rules_) ell = std::max(ell, image.size());
  return ell;
}

bool Morphism::is_endomorphism() const {
  return target_.size() == source_.size();
}

Word Morphism::apply(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += image(w.alphabet().symbol(w[i]));
  }
  return Word::from_string(out, target_);
}

std::string Morphism::str() const {
  std::string out;
  for (const auto& [c, image] : rules_) {
    if (!out.empty()) out += ';';
    out += c;
    out += '=';
    out += image;
  }
  return out;
}

Coding Coding::parse(std::string_view text) {
  std::map<char, char> map;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    std::string_view token = text.substr(
        start, semi == std::string_view::npos ? std::string_view::npos
                                              : semi - start);
    if (token.size() != 3 || token[1] != '=') {
      throw Error(ErrorCode::kParse,
                  "bad coding entry '" + std::string(token) +
                      "' (expected <symbol>=<symbol>)");
    }
    map[token[0]] = token[2];
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return Coding(std::move(map));
}

Word Coding::apply(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    char c = w.alphabet().symbol(w[i]);
    auto it = map_.find(c);
    if (it == map_.end()) {
      throw Error(ErrorCode::kUnknownSymbol,
                  std::string("coding has no entry for '") + c + "'");
    }
    out.push_back(it->second);
  }
  std::string symbols;
  for (const auto& [from, to] : map_) {
    if (symbols.find(to) == std::string::npos) symbols.push_back(to);
  }
  return Word::from_string(out, Alphabet(symbols));
}

Word iterate_morphism(const Morphism& m, char seed, std::size_t iterations,
                      std::size_t max_length) {
  if (!m.source().contains(seed)) {
    throw Error(ErrorCode::kUnknownSymbol,
                std::string("seed '") + seed + "' has no rule");
  }
  if (iterations > 0 && !m.is_endomorphism()) {
    throw Error(ErrorCode::kUnknownSymbol,
                "morphism images use symbols without rules; cannot iterate");
  }
  std::string current(1, seed);
  for (std::size_t i = 0; i < iterations; ++i) {
    std::size_t next_len = 0;
    for (char c : current) {
      next_len += m.image(c).size();
      check_length(next_len, max_length, "morphism iterate");
    }
    std::string next;
    next.reserve(next_len);
    for (char c : current) next += m.image(c);
    current = std::move(next);
  }
  return Word::from_string(current, m.target());
}

Word morphic_prefix(const Morphism& m, char seed, std::size_t length,
                    const std::optional<Coding>& coding,
                    std::size_t max_length) {
  if (length == 0) {
    throw Error(ErrorCode::kInvalidArgument, "prefix length must be positive");
  }
  check_length(length, max_length, "morphic prefix");
  if (!m.prolongable_on(seed)) {
    throw Error(ErrorCode::kNotProlongable,
                std::string("morphism ") + m.str() + " is not prolongable on '" +
                    seed + "'");
  }
  if (!m.is_endomorphism()) {
    throw Error(ErrorCode::kUnknownSymbol,
                "morphism images use symbols without rules; no fixed point");
  }
  // x = φ(x): the images of x_1, x_2, ... spell x itself, and since
  // |φ(seed)| >= 2 every symbol is known before its image is needed.
  std::string out = m.image(seed);
  for (std::size_t read = 1; out.size() < length; ++read) {
    out += m.image(out[read]);
  }
  out.resize(length);
  Word w = Word::from_string(out, m.target());
  return coding ? coding->apply(w) : w;
}

}  // namespace attractorlab
