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

#ifndef ATTRACTORLAB_GENERATOR_SPEC_H_
#define ATTRACTORLAB_GENERATOR_SPEC_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "attractorlab/limits.h"
#include "attractorlab/morphism.h"
#include "attractorlab/sequences.h"
#include "attractorlab/word.h"

namespace attractorlab {

/// Textual description of an infinite (or finite) word source:
///
///   morphic:a=ab;b=a:seed=a[:coding=a=0;b=1]
///   sturmian:1,(1)
///   toeplitz:12???
///   holub:2,3,4,5
///   pow2
///   nestedzeros:1,2,3
///   debruijn:3:01
///   periodic:<u>:<v>          (u v^ω; u may be empty)
///
/// The text is the identity of a word in every report.
class GeneratorSpec {
 public:
  struct MorphicSource {
    Morphism morphism;
    char seed;
    std::optional<Coding> coding;
  };
  struct SturmianSource {
    DirectiveSequence directive;
  };
  struct ToeplitzSource {
    ToeplitzPattern pattern;
  };
  struct HolubSource {
    IntSequence sequence;
  };
  struct Power2Source {};
  struct NestedZerosSource {
    IntSequence sequence;
  };
  struct DeBruijnSource {
    std::size_t order;
    Alphabet alphabet;
  };
  struct PeriodicSource {
    std::string prefix;
    std::string period;
  };
  using Source =
      std::variant<MorphicSource, SturmianSource, ToeplitzSource, HolubSource,
                   Power2Source, NestedZerosSource, DeBruijnSource,
                   PeriodicSource>;

  /// Throws Error(kParse) whose message names the offending token.
  static GeneratorSpec parse(std::string_view text);

  const std::string& str() const noexcept { return text_; }
  const Source& source() const noexcept { return source_; }

  /// Length of the generated word when the source is finite (de Bruijn).
  std::optional<std::size_t> natural_length() const;

  /// The first `length` symbols.
  Word prefix(std::size_t length,
              std::size_t max_length = default_max_length()) const;

 private:
  GeneratorSpec(std::string text, Source source)
      : text_(std::move(text)), source_(std::move(source)) {}

  std::string text_;
  Source source_;
};

}  // namespace attractorlab

#endif  // ATTRACTORLAB_GENERATOR_SPEC_H_
