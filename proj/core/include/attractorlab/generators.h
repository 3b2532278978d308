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

#ifndef ATTRACTORLAB_GENERATORS_H_
#define ATTRACTORLAB_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "attractorlab/limits.h"
#include "attractorlab/sequences.h"
#include "attractorlab/word.h"

namespace attractorlab {

/// Standard Sturmian words x_0 = b, x_1 = a, x_{i+1} = x_i^{d_{i-1}} x_{i-1},
/// returned as [x_0, ..., x_k].
std::vector<Word> standard_words(const DirectiveSequence& d, std::size_t k,
                                 std::size_t max_length = default_max_length());

/// Lengths |x_0|, ..., |x_k| without materialising the words.
std::vector<std::uint64_t> standard_word_lengths(const DirectiveSequence& d,
                                                 std::size_t k);

/// Prefix of the characteristic Sturmian word with directive sequence `d`.
Word sturmian_prefix(const DirectiveSequence& d, std::size_t length,
                     std::size_t max_length = default_max_length());

/// Prefix of the Toeplitz word generated by `p`. Holes are filled layer by
/// layer: the hole subsequence of p^ω is itself replaced by p^ω until no
/// hole is left among the first `length` positions.
Word toeplitz_prefix(const ToeplitzPattern& p, std::size_t length,
                     std::size_t max_length = default_max_length());

/// Holub words u_0 = ε, u_i = u_{i-1} a (u_{i-1} b)^{n_i} u_{i-1}; the
/// sequence entries are n_1, n_2, ... (so entry 0 is n_1).
std::vector<Word> holub_words(const IntSequence& seq, std::size_t k,
                              std::size_t max_length = default_max_length());

/// |u_0|, ..., |u_k| for the Holub recursion.
std::vector<std::uint64_t> holub_lengths(const IntSequence& seq,
                                         std::size_t k);

/// The 3-position set {|u_i|+1, Σ_{k<=i}(|u_k|+1), |u_{i+1}|-|u_i|} claimed
/// to attract u_{i+1}; duplicates collapse. Sorted, 1-based.
std::vector<std::size_t> holub_predicted_attractor(const IntSequence& seq,
                                                   std::size_t i);

/// Characteristic word of the powers of two: 1 at positions 1, 2, 4, 8, ...
Word power2_char_prefix(std::size_t length,
                        std::size_t max_length = default_max_length());

/// Prefix of v = lim v_i with v_0 = 1 and v_{i+1} = v_i 0^{n_i} v_i; entry 0
/// of `seq` is n_0.
Word nested_zero_prefix(const IntSequence& seq, std::size_t length,
                        std::size_t max_length = default_max_length());

/// Linearised de Bruijn word of order k: length σ^k + k - 1, every length-k
/// word over `a` occurring exactly once.
Word de_bruijn_word(std::size_t k, const Alphabet& a,
                    std::size_t max_length = default_max_length());

/// u v^ω truncated to `length`.
Word ultimately_periodic_prefix(const Word& u, const Word& v,
                                std::size_t length);

}  // namespace attractorlab

#endif  // ATTRACTORLAB_GENERATORS_H_
