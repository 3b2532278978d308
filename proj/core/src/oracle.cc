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

#include "attractorlab/oracle.h"

#include <algorithm>
#include <bit>
#include <set>
#include <vector>

#include "attractorlab/error.h"

namespace attractorlab::oracle {
namespace {

void guard(const std::string& w, std::size_t max_length) {
  if (w.size() > max_length || w.size() > 31) {
    throw Error(ErrorCode::kGuardExceeded,
                "oracle: length " + std::to_string(w.size()) +
                    " exceeds guard " + std::to_string(max_length));
  }
}

// For every distinct factor, the set of positions lying inside at least
// one of its occurrences.
std::vector<std::uint32_t> factor_masks(const std::string& w) {
  std::set<std::string> seen;
  std::vector<std::uint32_t> masks;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t len = 1; i + len <= n; ++len) {
      std::string u = w.substr(i, len);
      if (!seen.insert(u).second) continue;
      std::uint32_t mask = 0;
      for (std::size_t k = 0; k + len <= n; ++k) {
        if (w.compare(k, len, u) != 0) continue;
        for (std::size_t p = k; p < k + len; ++p) mask |= 1u << p;
      }
      masks.push_back(mask);
    }
  }
  return masks;
}

bool hits_all(const std::vector<std::uint32_t>& masks, std::uint32_t g) {
  for (std::uint32_t m : masks)
    if (!(m & g)) return false;
  return true;
}

}  // namespace

bool is_attractor(const std::string& w, std::uint32_t mask) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::size_t len = j - i + 1;
      bool found = false;
      for (std::size_t k = 0; k + len <= n && !found; ++k) {
        if (w.compare(k, len, w, i, len) != 0) continue;
        for (std::size_t p = k; p <= k + len - 1; ++p) {
          if (mask >> p & 1) { found = true; break; }
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

std::size_t gamma_star(const std::string& w, std::size_t max_length) {
  guard(w, max_length);
  if (w.empty()) return 0;
  auto masks = factor_masks(w);
  const std::uint32_t limit = 1u << w.size();
  std::size_t best = w.size();
  for (std::uint32_t g = 1; g < limit; ++g) {
    std::size_t size = std::popcount(g);
    if (size < best && hits_all(masks, g)) best = size;
  }
  return best;
}

SpanLm span_lm(const std::string& w, std::size_t max_length) {
  guard(w, max_length);
  if (w.empty()) throw Error(ErrorCode::kInvalidArgument, "empty word");
  auto masks = factor_masks(w);
  const std::uint32_t limit = 1u << w.size();
  SpanLm r{w.size(), w.size()};
  for (std::uint32_t g = 1; g < limit; ++g) {
    if (!hits_all(masks, g)) continue;
    std::size_t lo = std::countr_zero(g) + 1;
    std::size_t hi = 32 - std::countl_zero(g);
    r.span = std::min(r.span, hi - lo);
    r.lm = std::min(r.lm, hi);
  }
  return r;
}

std::size_t lz_phrase_count(const std::string& w) {
  std::size_t i = 0, z = 0;
  while (i < w.size()) {
    std::size_t best = 0;
    for (std::size_t len = 1; i + len <= w.size(); ++len) {
      bool occurs = false;
      for (std::size_t j = 0; j + len <= i; ++j) {
        if (w.compare(j, len, w, i, len) == 0) { occurs = true; break; }
      }
      if (occurs) best = len;
    }
    i += std::max<std::size_t>(best, 1);
    ++z;
  }
  return z;
}

}  // namespace attractorlab::oracle
