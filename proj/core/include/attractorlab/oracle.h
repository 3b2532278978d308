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

#ifndef ATTRACTORLAB_ORACLE_H_
#define ATTRACTORLAB_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <string>

namespace attractorlab::oracle {

// Exhaustive reference implementations working on plain strings straight
// from the definitions. They share no code with the fast paths and are
// only meant for words of at most kMaxLength symbols.

inline constexpr std::size_t kMaxLength = 16;

/// True iff every factor w[i..j] has an occurrence containing a position
/// of `mask` (bit p-1 set for 1-based position p).
bool is_attractor(const std::string& w, std::uint32_t mask);

/// Minimum attractor size over all 2^|w| subsets. Throws kGuardExceeded.
std::size_t gamma_star(const std::string& w,
                       std::size_t max_length = kMaxLength);

struct SpanLm {
  std::size_t span = 0;
  std::size_t lm = 0;
};

/// span and lm by enumerating every subset. Throws kGuardExceeded.
SpanLm span_lm(const std::string& w, std::size_t max_length = kMaxLength);

/// Greedy LZ parsing straight from the definition (cubic time).
std::size_t lz_phrase_count(const std::string& w);

}  // namespace attractorlab::oracle

#endif  // ATTRACTORLAB_ORACLE_H_
