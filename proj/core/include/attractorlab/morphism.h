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

#ifndef ATTRACTORLAB_MORPHISM_H_
#define ATTRACTORLAB_MORPHISM_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "attractorlab/limits.h"
#include "attractorlab/word.h"

namespace attractorlab {

/// Non-erasing morphism from source symbols to words over a target alphabet.
class Morphism {
 public:
  /// `rules` pairs each source symbol with its image. The source alphabet
  /// is the rule symbols in the given order; the target alphabet is the
  /// source alphabet extended by any new symbol of the images.
  /// Throws kErasingRule on an empty image and kInvalidArgument on a
  /// repeated source symbol.
  explicit Morphism(std::vector<std::pair<char, std::string>> rules);

  /// Parses `a=ab;b=a`. Throws kParse naming the offending token.
  static Morphism parse(std::string_view rules);

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }

  /// Image of source symbol `c`. Throws kUnknownSymbol.
  const std::string& image(char c) const;

  bool prolongable_on(char c) const;
  /// k when every image has length k.
  std::optional<std::size_t> uniform_length() const;
  /// Longest image length, the ℓ of the image-attractor bounds.
  std::size_t max_image_length() const;
  /// True when every target symbol also has a rule, so iteration is defined.
  bool is_endomorphism() const;

  /// Concatenation of the images of the symbols of `w`, in order. The
  /// result is over target(). Throws kUnknownSymbol.
  Word apply(const Word& w) const;

  std::string str() const;

 private:
  std::vector<std::pair<char, std::string>> rules_;
  Alphabet source_;
  Alphabet target_;
};

/// Letter-to-letter map applied after generating a fixed point.
class Coding {
 public:
  explicit Coding(std::map<char, char> map) : map_(std::move(map)) {}
  /// Parses `a=0;b=1`.
  static Coding parse(std::string_view text);

  /// Throws kUnknownSymbol for unmapped symbols.
  Word apply(const Word& w) const;
  const std::map<char, char>& map() const noexcept { return map_; }

 private:
  std::map<char, char> map_;
};

/// φ^i(seed). Throws kLengthOverflow once an iterate exceeds `max_length`.
Word iterate_morphism(const Morphism& m, char seed, std::size_t iterations,
                      std::size_t max_length = default_max_length());

/// First `length` symbols of φ^∞(seed), optionally passed through `coding`.
/// Throws kNotProlongable, kInvalidArgument (length 0) or kLengthOverflow.
Word morphic_prefix(const Morphism& m, char seed, std::size_t length,
                    const std::optional<Coding>& coding = std::nullopt,
                    std::size_t max_length = default_max_length());

inline Word apply_morphism(const Morphism& m, const Word& w) {
  return m.apply(w);
}

}  // namespace attractorlab

#endif  // ATTRACTORLAB_MORPHISM_H_
