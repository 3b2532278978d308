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

#ifndef ATTRACTORLAB_LZ_H_
#define ATTRACTORLAB_LZ_H_

#include <cstddef>
#include <vector>

#include "attractorlab/word.h"

namespace attractorlab {

/// Greedy left-to-right LZ factorisation. Each phrase is either the first
/// occurrence of a letter or the longest prefix of the remaining suffix
/// that occurs entirely inside the already parsed text.
struct LZParse {
  std::vector<std::size_t> phrase_ends;  // 1-based, increasing, last = |w|

  std::size_t phrase_count() const noexcept { return phrase_ends.size(); }
};

/// Runs in O(n σ) using a suffix automaton of the parsed prefix, extended
/// one phrase at a time.
LZParse lz_parse(const Word& w);

}  // namespace attractorlab

#endif  // ATTRACTORLAB_LZ_H_
