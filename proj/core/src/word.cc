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

#include "attractorlab/word.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "attractorlab/error.h"

namespace attractorlab {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  std::fill(std::begin(lookup_), std::end(lookup_), -1);
  if (symbols_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet must not be empty");
  }
  if (symbols_.size() > 255) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet too large");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto c = static_cast<unsigned char>(symbols_[i]);
    if (!std::isprint(c) || std::isspace(c)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "alphabet symbols must be printable, non-space characters");
    }
    if (lookup_[c] >= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("duplicate alphabet symbol '") + symbols_[i] +
                      "'");
    }
    lookup_[c] = static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::of(std::string_view text) {
  std::array<bool, 256> seen{};
  for (char c : text) seen[static_cast<unsigned char>(c)] = true;
  std::string symbols;
  for (int c = 0; c < 256; ++c) {
    if (seen[c]) symbols.push_back(static_cast<char>(c));
  }
  if (symbols.empty()) symbols = "a";
  return Alphabet(symbols);
}

std::optional<Symbol> Alphabet::index_of(char c) const noexcept {
  auto v = lookup_[static_cast<unsigned char>(c)];
  if (v < 0) return std::nullopt;
  return static_cast<Symbol>(v);
}

Alphabet Alphabet::merged_with(const Alphabet& other) const {
  std::string symbols = symbols_;
  for (char c : other.symbols()) {
    if (!contains(c)) symbols.push_back(c);
  }
  return Alphabet(symbols);
}

Word::Word(Alphabet alphabet, std::vector<Symbol> data)
    : alphabet_(std::move(alphabet)), data_(std::move(data)) {
  for (Symbol s : data_) {
    if (s >= alphabet_.size()) {
      throw Error(ErrorCode::kUnknownSymbol, "symbol index out of alphabet");
    }
  }
}

Word Word::from_string(std::string_view text) {
  return from_string(text, Alphabet::of(text));
}

Word Word::from_string(std::string_view text, const Alphabet& alphabet) {
  std::vector<Symbol> data;
  data.reserve(text.size());
  for (char c : text) {
    auto idx = alphabet.index_of(c);
    if (!idx) {
      throw Error(ErrorCode::kUnknownSymbol,
                  std::string("symbol '") + c + "' not in alphabet \"" +
                      alphabet.symbols() + "\"");
    }
    data.push_back(*idx);
  }
  Word w(alphabet);
  w.data_ = std::move(data);
  return w;
}

char Word::at(std::size_t pos) const {
  if (pos == 0 || pos > data_.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "position " + std::to_string(pos) + " outside [1, " +
                    std::to_string(data_.size()) + "]");
  }
  return alphabet_.symbol(data_[pos - 1]);
}

Word Word::factor(std::size_t i, std::size_t j) const {
  Word out(alphabet_);
  if (j < i) return out;
  if (i == 0 || j > data_.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "factor [" + std::to_string(i) + ", " + std::to_string(j) +
                    "] outside [1, " + std::to_string(data_.size()) + "]");
  }
  out.data_.assign(data_.begin() + static_cast<std::ptrdiff_t>(i - 1),
                   data_.begin() + static_cast<std::ptrdiff_t>(j));
  return out;
}

Word Word::prefix(std::size_t n) const {
  return factor(1, std::min(n, data_.size()));
}

Word Word::reversed() const {
  Word out(alphabet_);
  out.data_.assign(data_.rbegin(), data_.rend());
  return out;
}

Word Word::concat(const Word& other) const {
  if (alphabet_ == other.alphabet_) {
    Word out = *this;
    out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
    return out;
  }
  return from_string(str() + other.str(), alphabet_.merged_with(other.alphabet_));
}

std::size_t Word::letter_count() const {
  std::array<bool, 256> seen{};
  std::size_t count = 0;
  for (Symbol s : data_) {
    if (!seen[s]) {
      seen[s] = true;
      ++count;
    }
  }
  return count;
}

std::string Word::str() const {
  std::string out;
  out.reserve(data_.size());
  for (Symbol s : data_) out.push_back(alphabet_.symbol(s));
  return out;
}

}  // namespace attractorlab
