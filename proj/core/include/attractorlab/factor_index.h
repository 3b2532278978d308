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

#ifndef ATTRACTORLAB_FACTOR_INDEX_H_
#define ATTRACTORLAB_FACTOR_INDEX_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "attractorlab/word.h"

namespace attractorlab {

/// 1-based closed interval [first, last].
struct Interval {
  std::uint32_t first = 0;
  std::uint32_t last = 0;

  std::uint32_t size() const noexcept { return last - first + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A distinct factor whose coverage cannot be inferred from a shorter one.
///
/// A factor u = w[s, s+m-1] is implied by its prefix u[1, m-1] when both
/// have the same number of occurrences (every occurrence of the prefix
/// extends to one of u, so any position crossing the prefix crosses u);
/// symmetrically for the suffix u[2, m]. Only the remaining factors
/// constrain an attractor, and they are the classes kept here.
struct CoverConstraint {
  std::uint32_t length = 0;
  std::vector<std::uint32_t> starts;  // ascending, 1-based
  std::vector<Interval> cover;        // merged union of occurrence intervals
  std::uint32_t cover_size = 0;

  std::uint32_t first_position() const { return cover.front().first; }
  std::uint32_t last_position() const { return cover.back().last; }
  /// Smallest covered position >= p, or 0 when there is none.
  std::uint32_t next_at_or_after(std::uint32_t p) const;
  bool covers(std::uint32_t p) const;
};

/// Occurrence structure of every distinct factor of a word.
///
/// Factors of the same length are grouped into classes level by level:
/// the class of w[i, i+m-1] is determined by the class of w[i, i+m-2] and
/// the symbol w[i+m-1]. Levels are materialised up to the first length at
/// which every factor is unique; longer factors are unique as well and are
/// represented implicitly.
class FactorIndex {
 public:
  explicit FactorIndex(const Word& w);
  explicit FactorIndex(std::span<const Symbol> w);

  std::size_t size() const noexcept { return n_; }

  /// p_w(m), the number of distinct factors of length m (0 when m > n).
  std::size_t distinct_factors(std::size_t m) const;
  /// Σ_{m=1..n} p_w(m).
  std::uint64_t class_count() const;
  /// Length of the longest factor occurring at least twice.
  std::size_t longest_repeat() const noexcept { return longest_repeat_; }

  /// Dense class id of w[start, start+len-1] among factors of length len.
  std::uint32_t class_of(std::size_t start, std::size_t len) const;
  /// Start positions (1-based, ascending) of every occurrence of
  /// w[start, start+len-1].
  std::vector<std::uint32_t> occurrences(std::size_t start,
                                         std::size_t len) const;
  /// Start of the leftmost occurrence of each class of length m, by id.
  std::vector<std::uint32_t> first_occurrences(std::size_t m) const;
  /// Occurrence count of each class of length m, by id.
  std::vector<std::uint32_t> occurrence_counts(std::size_t m) const;

  const std::vector<CoverConstraint>& constraints() const noexcept {
    return constraints_;
  }

 private:
  void build(std::span<const Symbol> w);

  std::size_t n_ = 0;
  std::size_t longest_repeat_ = 0;
  // ids_[m-1][i] is the class of w[i+1, i+m] (0-based i), for m <= depth.
  std::vector<std::vector<std::uint32_t>> ids_;
  std::vector<std::uint32_t> distinct_;  // p(m) for m <= depth
  std::vector<CoverConstraint> constraints_;
};

}  // namespace attractorlab

#endif  // ATTRACTORLAB_FACTOR_INDEX_H_
