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

#ifndef ATTRACTORLAB_WORD_H_
#define ATTRACTORLAB_WORD_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace attractorlab {

using Symbol = std::uint8_t;

/// Ordered set of distinct printable symbols. Symbol indices follow the
/// declaration order.
class Alphabet {
 public:
  /// Throws kInvalidArgument on an empty list, duplicates, or non-printable
  /// characters.
  explicit Alphabet(std::string_view symbols);

  /// Distinct characters of `text` in ascending byte order.
  static Alphabet of(std::string_view text);

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(Symbol index) const { return symbols_.at(index); }
  std::optional<Symbol> index_of(char c) const noexcept;
  bool contains(char c) const noexcept { return index_of(c).has_value(); }
  const std::string& symbols() const noexcept { return symbols_; }

  /// Alphabet containing the symbols of both, this one's first.
  Alphabet merged_with(const Alphabet& other) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::string symbols_;
  std::int16_t lookup_[256];
};

/// Finite word over an Alphabet. Internally 0-based; the 1-based accessors
/// (`at`, `factor`) match the usual x[i,j] notation.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  Word(Alphabet alphabet, std::vector<Symbol> data);

  /// Word over Alphabet::of(text).
  static Word from_string(std::string_view text);
  /// Throws kUnknownSymbol when `text` uses a symbol outside `alphabet`.
  static Word from_string(std::string_view text, const Alphabet& alphabet);

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Symbol> symbols() const noexcept { return data_; }
  Symbol operator[](std::size_t i) const { return data_[i]; }

  /// Symbol at 1-based position `pos`.
  char at(std::size_t pos) const;
  /// w[i, j], 1-based inclusive; empty when j < i.
  Word factor(std::size_t i, std::size_t j) const;
  Word prefix(std::size_t n) const;
  Word reversed() const;
  Word concat(const Word& other) const;

  /// Number of distinct letters that actually occur, |alph(w)|.
  std::size_t letter_count() const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.str() == b.str();
  }

 private:
  Alphabet alphabet_;
  std::vector<Symbol> data_;
};

}  // namespace attractorlab

#endif  // ATTRACTORLAB_WORD_H_
