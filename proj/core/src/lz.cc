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

#include "attractorlab/lz.h"

#include <algorithm>
#include <cstdint>

namespace attractorlab {
namespace {

class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(std::size_t sigma) : sigma_(sigma) { add_state(0); }

  std::int32_t next(std::int32_t state, Symbol c) const {
    return next_[state * sigma_ + c];
  }

  void extend(Symbol c) {
    std::int32_t cur = add_state(len_[last_] + 1);
    std::int32_t p = last_;
    while (p != -1 && next(p, c) == -1) {
      next_[p * sigma_ + c] = cur;
      p = link_[p];
    }
    if (p == -1) {
      link_[cur] = 0;
    } else {
      std::int32_t q = next(p, c);
      if (len_[p] + 1 == len_[q]) {
        link_[cur] = q;
      } else {
        std::int32_t clone = add_state(len_[p] + 1);
        for (std::size_t a = 0; a < sigma_; ++a)
          next_[clone * sigma_ + a] = next_[q * sigma_ + a];
        link_[clone] = link_[q];
        while (p != -1 && next(p, c) == q) {
          next_[p * sigma_ + c] = clone;
          p = link_[p];
        }
        link_[q] = link_[cur] = clone;
      }
    }
    last_ = cur;
  }

 private:
  std::int32_t add_state(std::int32_t len) {
    len_.push_back(len);
    link_.push_back(-1);
    next_.resize(next_.size() + sigma_, -1);
    return static_cast<std::int32_t>(len_.size() - 1);
  }

  std::size_t sigma_;
  std::vector<std::int32_t> len_, link_, next_;
  std::int32_t last_ = 0;
};

}  // namespace

LZParse lz_parse(const Word& w) {
  LZParse parse;
  const auto s = w.symbols();
  SuffixAutomaton sam(std::max<std::size_t>(w.alphabet().size(), 1));
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t len = 0;
    std::int32_t state = 0;
    while (i + len < s.size()) {
      std::int32_t t = sam.next(state, s[i + len]);
      if (t == -1) break;
      state = t;
      ++len;
    }
    if (len == 0) len = 1;
    for (std::size_t k = i; k < i + len; ++k) sam.extend(s[k]);
    i += len;
    parse.phrase_ends.push_back(i);
  }
  return parse;
}

}  // namespace attractorlab
