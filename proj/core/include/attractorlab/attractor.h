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

#ifndef ATTRACTORLAB_ATTRACTOR_H_
#define ATTRACTORLAB_ATTRACTOR_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "attractorlab/factor_index.h"
#include "attractorlab/word.h"

namespace attractorlab {

/// Sorted set of 1-based positions of a word of length n.
class PositionSet {
 public:
  PositionSet() = default;
  /// Sorts and deduplicates. Throws kOutOfRange unless 1 <= p <= n.
  PositionSet(std::vector<std::size_t> positions, std::size_t n);
  PositionSet(std::initializer_list<std::size_t> positions, std::size_t n)
      : PositionSet(std::vector<std::size_t>(positions), n) {}

  /// {first, ..., last}.
  static PositionSet interval(std::size_t first, std::size_t last,
                              std::size_t n);

  const std::vector<std::size_t>& positions() const noexcept {
    return positions_;
  }
  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }
  std::size_t word_length() const noexcept { return n_; }
  std::size_t leftmost() const { return positions_.front(); }
  std::size_t rightmost() const { return positions_.back(); }
  std::size_t spread() const { return rightmost() - leftmost(); }
  bool contains(std::size_t p) const;

  PositionSet united(const PositionSet& other) const;
  /// {n - p + 1 : p in this}, an attractor of the reversed word.
  PositionSet mirrored() const;

  std::string str() const;  // "{4,6,8,11}"

  friend bool operator==(const PositionSet&, const PositionSet&) = default;

 private:
  std::vector<std::size_t> positions_;
  std::size_t n_ = 0;
};

struct AttractorGuards {
  /// Longest word accepted by the exact γ*, span and lm computations.
  std::size_t exact_max_length = 512;
  /// Longest word accepted by the exhaustive subset oracles.
  std::size_t oracle_max_length = 16;
};

bool is_attractor(const Word& w, const PositionSet& g);
bool is_attractor(const FactorIndex& index, const PositionSet& g);

/// True iff {i, ..., j} is an attractor: every distinct factor has an
/// occurrence [i', j'] with i' <= j and j' >= i.
bool is_interval_attractor(const Word& w, std::size_t i, std::size_t j);
bool is_interval_attractor(const FactorIndex& index, std::size_t i,
                           std::size_t j);

struct GammaResult {
  std::size_t size = 0;
  PositionSet witness;  // lexicographically smallest minimum attractor
};

/// Exact γ*(w) by branch and bound over the minimum hitting set of the
/// cover constraints, searched upward from a packing lower bound and capped
/// by the greedy cover. When `budget` is set and γ* exceeds it, throws
/// kBudgetExceeded. Throws kGuardExceeded above the exact-length guard.
GammaResult gamma_star(const Word& w, std::optional<std::size_t> budget = {},
                       const AttractorGuards& guards = {});
GammaResult gamma_star(const FactorIndex& index,
                       std::optional<std::size_t> budget = {});

struct SpanResult {
  std::size_t value = 0;
  Interval witness;  // leftmost interval attaining the minimum
};

/// min over attractors of (rightmost - leftmost). The interval {i..j} is an
/// attractor iff every constraint has a covered position in [i, j], so for
/// each i the least feasible j is the max over constraints of the next
/// covered position at or after i.
SpanResult span(const Word& w, const AttractorGuards& guards = {});
SpanResult span(const FactorIndex& index);

/// Least k such that {1..k} is an attractor, equal to the minimum rightmost
/// position over all attractors.
std::size_t lm(const Word& w, const AttractorGuards& guards = {});
std::size_t lm(const FactorIndex& index);

struct AttractorReport {
  std::size_t gamma_star = 0;
  PositionSet witness_min;
  std::size_t span = 0;
  Interval span_witness;
  std::size_t lm = 0;
  bool gamma_exact = false;
  bool span_exact = false;
  bool lm_exact = false;
};

/// γ*, span and lm of one word, sharing a single factor index. Fields whose
/// computation hits a guard are left with their exactness flag cleared.
AttractorReport analyze(const Word& w, const AttractorGuards& guards = {});

/// Greedy cover: repeatedly take the position hitting most uncovered
/// constraints (smallest position on ties).
PositionSet greedy_attractor(const FactorIndex& index);

}  // namespace attractorlab

#endif  // ATTRACTORLAB_ATTRACTOR_H_
