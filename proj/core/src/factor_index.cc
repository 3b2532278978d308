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

#include "attractorlab/factor_index.h"

#include <algorithm>
#include <numeric>

#include "attractorlab/error.h"

namespace attractorlab {

std::uint32_t CoverConstraint::next_at_or_after(std::uint32_t p) const {
  auto it = std::lower_bound(
      cover.begin(), cover.end(), p,
      [](const Interval& iv, std::uint32_t q) { return iv.last < q; });
  if (it == cover.end()) return 0;
  return std::max(it->first, p);
}

bool CoverConstraint::covers(std::uint32_t p) const {
  return next_at_or_after(p) == p;
}

FactorIndex::FactorIndex(const Word& w) { build(w.symbols()); }

FactorIndex::FactorIndex(std::span<const Symbol> w) { build(w); }

void FactorIndex::build(std::span<const Symbol> w) {
  n_ = w.size();
  if (n_ == 0) return;

  // Level 1: dense ids by symbol.
  std::vector<std::uint32_t> remap(256, UINT32_MAX);
  std::vector<std::uint32_t> level(n_);
  std::uint32_t count = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (remap[w[i]] == UINT32_MAX) remap[w[i]] = count++;
    level[i] = remap[w[i]];
  }
  ids_.push_back(std::move(level));
  distinct_.push_back(count);

  std::uint32_t sigma = count;
  std::vector<std::uint32_t> sym(n_);
  for (std::size_t i = 0; i < n_; ++i) sym[i] = remap[w[i]];

  std::vector<std::uint32_t> table;
  for (std::size_t m = 2; distinct_.back() < n_ - (m - 1) + 1; ++m) {
    const auto& prev = ids_.back();
    std::size_t windows = n_ - m + 1;
    table.assign(static_cast<std::size_t>(distinct_.back()) * sigma,
                 UINT32_MAX);
    std::vector<std::uint32_t> next(windows);
    count = 0;
    for (std::size_t i = 0; i < windows; ++i) {
      std::size_t key = static_cast<std::size_t>(prev[i]) * sigma +
                        sym[i + m - 1];
      if (table[key] == UINT32_MAX) table[key] = count++;
      next[i] = table[key];
    }
    ids_.push_back(std::move(next));
    distinct_.push_back(count);
  }
  // The deepest level is the first whose factors are all distinct.
  longest_repeat_ = ids_.size() - 1;

  // Essential classes, level by level.
  std::vector<std::uint32_t> counts, prev_counts;
  for (std::size_t m = 1; m <= ids_.size(); ++m) {
    const auto& ids = ids_[m - 1];
    counts.assign(distinct_[m - 1], 0);
    for (std::uint32_t id : ids) ++counts[id];
    std::vector<char> essential(distinct_[m - 1], 1);
    if (m > 1) {
      const auto& shorter = ids_[m - 2];
      for (std::size_t i = 0; i < ids.size(); ++i) {
        std::uint32_t c = counts[ids[i]];
        if (prev_counts[shorter[i]] == c || prev_counts[shorter[i + 1]] == c) {
          essential[ids[i]] = 0;
        }
      }
    }
    std::vector<std::uint32_t> slot(distinct_[m - 1], UINT32_MAX);
    std::size_t base = constraints_.size();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      std::uint32_t id = ids[i];
      if (!essential[id]) continue;
      if (slot[id] == UINT32_MAX) {
        slot[id] = static_cast<std::uint32_t>(constraints_.size());
        constraints_.emplace_back();
        constraints_.back().length = static_cast<std::uint32_t>(m);
      }
      constraints_[slot[id]].starts.push_back(static_cast<std::uint32_t>(i + 1));
    }
    for (std::size_t k = base; k < constraints_.size(); ++k) {
      CoverConstraint& c = constraints_[k];
      for (std::uint32_t s : c.starts) {
        std::uint32_t e = s + c.length - 1;
        if (!c.cover.empty() && s <= c.cover.back().last + 1) {
          c.cover.back().last = std::max(c.cover.back().last, e);
        } else {
          c.cover.push_back({s, e});
        }
      }
      for (const Interval& iv : c.cover) c.cover_size += iv.size();
    }
    prev_counts.swap(counts);
  }
}

std::size_t FactorIndex::distinct_factors(std::size_t m) const {
  if (m == 0) return 1;
  if (m > n_) return 0;
  if (m <= distinct_.size()) return distinct_[m - 1];
  return n_ - m + 1;
}

std::uint64_t FactorIndex::class_count() const {
  std::uint64_t total = 0;
  for (std::size_t m = 1; m <= n_; ++m) total += distinct_factors(m);
  return total;
}

std::uint32_t FactorIndex::class_of(std::size_t start, std::size_t len) const {
  if (len == 0 || start == 0 || start + len - 1 > n_) {
    throw Error(ErrorCode::kOutOfRange, "factor out of range");
  }
  if (len <= ids_.size()) return ids_[len - 1][start - 1];
  return static_cast<std::uint32_t>(start - 1);
}

std::vector<std::uint32_t> FactorIndex::occurrences(std::size_t start,
                                                    std::size_t len) const {
  std::uint32_t id = class_of(start, len);
  if (len > ids_.size()) return {static_cast<std::uint32_t>(start)};
  std::vector<std::uint32_t> out;
  const auto& ids = ids_[len - 1];
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) out.push_back(static_cast<std::uint32_t>(i + 1));
  }
  return out;
}

std::vector<std::uint32_t> FactorIndex::first_occurrences(std::size_t m) const {
  if (m == 0 || m > n_) throw Error(ErrorCode::kOutOfRange, "bad length");
  std::vector<std::uint32_t> first(distinct_factors(m), 0);
  for (std::size_t i = 1; i + m - 1 <= n_; ++i) {
    std::uint32_t id = class_of(i, m);
    if (first[id] == 0) first[id] = static_cast<std::uint32_t>(i);
  }
  return first;
}

std::vector<std::uint32_t> FactorIndex::occurrence_counts(std::size_t m) const {
  if (m == 0 || m > n_) throw Error(ErrorCode::kOutOfRange, "bad length");
  std::vector<std::uint32_t> counts(distinct_factors(m), 0);
  for (std::size_t i = 1; i + m - 1 <= n_; ++i) ++counts[class_of(i, m)];
  return counts;
}

}  // namespace attractorlab
