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

#include "attractorlab/attractor.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "attractorlab/error.h"

namespace attractorlab {

PositionSet::PositionSet(std::vector<std::size_t> positions, std::size_t n)
    : positions_(std::move(positions)), n_(n) {
  std::sort(positions_.begin(), positions_.end());
  positions_.erase(std::unique(positions_.begin(), positions_.end()),
                   positions_.end());
  for (std::size_t p : positions_) {
    if (p == 0 || p > n_) {
      throw Error(ErrorCode::kOutOfRange,
                  "position " + std::to_string(p) + " outside [1, " +
                      std::to_string(n_) + "]");
    }
  }
}

PositionSet PositionSet::interval(std::size_t first, std::size_t last,
                                  std::size_t n) {
  if (first == 0 || first > last) {
    throw Error(ErrorCode::kOutOfRange, "empty or invalid interval");
  }
  std::vector<std::size_t> v;
  for (std::size_t p = first; p <= last; ++p) v.push_back(p);
  return PositionSet(std::move(v), n);
}

bool PositionSet::contains(std::size_t p) const {
  return std::binary_search(positions_.begin(), positions_.end(), p);
}

PositionSet PositionSet::united(const PositionSet& other) const {
  std::vector<std::size_t> v = positions_;
  v.insert(v.end(), other.positions_.begin(), other.positions_.end());
  return PositionSet(std::move(v), std::max(n_, other.n_));
}

PositionSet PositionSet::mirrored() const {
  std::vector<std::size_t> v;
  for (std::size_t p : positions_) v.push_back(n_ - p + 1);
  return PositionSet(std::move(v), n_);
}

std::string PositionSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(positions_[i]);
  }
  return s + "}";
}

namespace {

void check_guard(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw Error(ErrorCode::kGuardExceeded,
                std::string(what) + ": length " + std::to_string(n) +
                    " exceeds guard " + std::to_string(cap));
  }
}

// Word storage that stays inline for short bitsets.
class Words {
 public:
  Words() = default;
  Words(std::size_t n, std::uint64_t v) : n_(n) {
    if (n > kInline) heap_.assign(n, v);
    else std::fill(inline_, inline_ + n, v);
  }

  std::size_t size() const { return n_; }
  std::uint64_t* begin() { return n_ > kInline ? heap_.data() : inline_; }
  std::uint64_t* end() { return begin() + n_; }
  const std::uint64_t* begin() const {
    return n_ > kInline ? heap_.data() : inline_;
  }
  const std::uint64_t* end() const { return begin() + n_; }
  std::uint64_t& operator[](std::size_t i) { return begin()[i]; }
  std::uint64_t operator[](std::size_t i) const { return begin()[i]; }

  friend bool operator==(const Words& a, const Words& b) {
    return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
  }

 private:
  static constexpr std::size_t kInline = 4;
  std::size_t n_ = 0;
  std::uint64_t inline_[kInline] = {};
  std::vector<std::uint64_t> heap_;
};

// Fixed-width bitset sized at run time.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t bits) : w_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i >> 6] |= 1ULL << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool none() const {
    for (auto x : w_) if (x) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k) if (w_[k] & o.w_[k]) return true;
    return false;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k) if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  std::size_t and_count(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
    return c;
  }
  void and_not(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
  }
  void and_with(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  }
  void clear_below(std::size_t i) {
    std::size_t k = i >> 6;
    for (std::size_t j = 0; j < k && j < w_.size(); ++j) w_[j] = 0;
    if (k < w_.size()) w_[k] &= ~0ULL << (i & 63);
  }
  void or_with(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  }
  // Lowest set bit >= from, or npos.
  std::size_t next(std::size_t from) const {
    std::size_t k = from >> 6;
    if (k >= w_.size()) return npos;
    std::uint64_t x = w_[k] & (~0ULL << (from & 63));
    while (true) {
      if (x) return (k << 6) + std::countr_zero(x);
      if (++k == w_.size()) return npos;
      x = w_[k];
    }
  }
  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : w_) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
  friend bool operator==(const Bits&, const Bits&) = default;

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  Words w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

// Minimum hitting set over the cover constraints. Positions are 0-based
// internally.
class HittingSet {
 public:
  explicit HittingSet(const FactorIndex& index) : n_(index.size()) {
    const auto& cs = index.constraints();
    // Drop constraints whose cover contains another constraint's cover.
    std::vector<Bits> covers;
    std::vector<std::size_t> order(cs.size());
    for (std::size_t c = 0; c < cs.size(); ++c) {
      Bits b(n_);
      for (const Interval& iv : cs[c].cover)
        for (std::uint32_t p = iv.first; p <= iv.last; ++p) b.set(p - 1);
      covers.push_back(std::move(b));
      order[c] = c;
    }
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return cs[a].cover_size < cs[b].cover_size;
    });
    for (std::size_t c : order) {
      bool redundant = false;
      for (const Bits& kept : cover_) {
        if (kept.subset_of(covers[c])) { redundant = true; break; }
      }
      if (!redundant) cover_.push_back(std::move(covers[c]));
    }
    k_ = cover_.size();
    hits_.assign(n_, Bits(k_));
    for (std::size_t c = 0; c < k_; ++c)
      for (std::size_t p = cover_[c].next(0); p != Bits::npos;
           p = cover_[c].next(p + 1))
        hits_[p].set(c);
    last_.resize(k_);
    for (std::size_t c = 0; c < k_; ++c) {
      std::size_t p = 0, q = cover_[c].next(0);
      while (q != Bits::npos) { p = q; q = cover_[c].next(q + 1); }
      last_[c] = p;
    }
  }

  std::size_t constraint_count() const { return k_; }
  Bits all_unhit() const {
    Bits b(k_);
    for (std::size_t c = 0; c < k_; ++c) b.set(c);
    return b;
  }

  std::vector<std::size_t> greedy() const {
    Bits unhit = all_unhit();
    std::vector<std::size_t> chosen;
    while (!unhit.none()) {
      std::size_t best = 0, best_count = 0;
      for (std::size_t p = 0; p < n_; ++p) {
        std::size_t c = hits_[p].and_count(unhit);
        if (c > best_count) { best = p; best_count = c; }
      }
      chosen.push_back(best);
      unhit.and_not(hits_[best]);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  // Greedy packing of pairwise disjoint unhit constraints, using only
  // positions in `allowed`. Returns npos if some constraint cannot be hit.
  std::size_t packing_bound(const Bits& unhit, const Bits& allowed) const {
    Bits used(n_);
    std::size_t count = 0;
    for (std::size_t c = unhit.next(0); c != Bits::npos; c = unhit.next(c + 1)) {
      Bits avail = cover_[c];
      avail.and_with(allowed);
      if (avail.none()) return Bits::npos;
      if (!avail.intersects(used)) {
        ++count;
        used.or_with(avail);
      }
    }
    return count;
  }

  // Fractional packing by simplex: maximise the sum of y_c over unhit
  // constraints subject to sum_{c covers p} y_c <= 1 at each allowed
  // position. Every feasible point bounds the hitting set size from below,
  // so the loop returns as soon as the objective exceeds `stop`.
  double lp_bound(const Bits& unhit, const Bits& allowed, double stop) const {
    std::vector<std::size_t> cols, rows;
    for (std::size_t c = unhit.next(0); c != Bits::npos; c = unhit.next(c + 1))
      cols.push_back(c);
    for (std::size_t p = allowed.next(0); p != Bits::npos;
         p = allowed.next(p + 1))
      if (hits_[p].intersects(unhit)) rows.push_back(p);
    const std::size_t R = rows.size(), C = cols.size(), W = C + R + 1;
    if (C == 0) return 0.0;
    std::vector<double> t(R * W, 0.0), obj(W, 0.0);
    for (std::size_t i = 0; i < R; ++i) {
      for (std::size_t j = 0; j < C; ++j)
        if (hits_[rows[i]].test(cols[j])) t[i * W + j] = 1.0;
      t[i * W + C + i] = 1.0;
      t[i * W + W - 1] = 1.0;
    }
    for (std::size_t j = 0; j < C; ++j) obj[j] = 1.0;
    std::vector<std::size_t> basis(R);
    for (std::size_t i = 0; i < R; ++i) basis[i] = C + i;
    constexpr double kEps = 1e-9;
    double value = 0.0;
    std::size_t stalled = 0;
    for (std::size_t iter = 0; iter < 50 * (R + C); ++iter) {
      // Dantzig's rule, or Bland's after a run of degenerate pivots.
      std::size_t e = Bits::npos;
      for (std::size_t j = 0; j + 1 < W; ++j) {
        if (obj[j] <= kEps) continue;
        if (e == Bits::npos || (stalled < 50 && obj[j] > obj[e])) e = j;
        if (stalled >= 50) break;
      }
      if (e == Bits::npos) break;
      std::size_t r = Bits::npos;
      double best = 0.0;
      for (std::size_t i = 0; i < R; ++i) {
        double a = t[i * W + e];
        if (a <= kEps) continue;
        double ratio = t[i * W + W - 1] / a;
        if (r == Bits::npos || ratio < best - kEps ||
            (ratio < best + kEps && basis[i] < basis[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r == Bits::npos) return std::numeric_limits<double>::infinity();
      double* row = &t[r * W];
      double inv = 1.0 / row[e];
      for (std::size_t j = 0; j < W; ++j) row[j] *= inv;
      for (std::size_t i = 0; i < R; ++i) {
        if (i == r) continue;
        double f = t[i * W + e];
        if (f == 0.0) continue;
        double* other = &t[i * W];
        for (std::size_t j = 0; j < W; ++j) other[j] -= f * row[j];
      }
      double f = obj[e];
      for (std::size_t j = 0; j < W; ++j) obj[j] -= f * row[j];
      basis[r] = e;
      double next = -obj[W - 1];
      stalled = next > value + kEps ? 0 : stalled + 1;
      value = next;
      if (value > stop) return value;
    }
    return value;
  }

  // True iff some k positions, all >= from, hit every constraint in unhit.
  bool feasible(const Bits& unhit, std::size_t k, std::size_t from = 0) {
    if (unhit.none()) return true;
    if (k == 0) return false;
    restrict_to(unhit, from);
    failed_.clear();
    return size_dfs(unhit, k);
  }

  // Lexicographically smallest hitting set of size k, fixed one position
  // at a time: the smallest position that still admits a completion.
  std::vector<std::size_t> lex_smallest(std::size_t k) {
    std::vector<std::size_t> chosen;
    Bits unhit = all_unhit();
    std::size_t from = 0;
    for (std::size_t r = k; r > 0 && !unhit.none(); --r) {
      // Later positions are larger, so the next one cannot pass the last
      // covered position of any unhit constraint.
      std::size_t limit = n_ - 1;
      for (std::size_t c = unhit.next(0); c != Bits::npos; c = unhit.next(c + 1))
        limit = std::min(limit, last_[c]);
      std::unordered_set<Bits, BitsHash> dead;
      bool placed = false;
      for (std::size_t q = from; q <= limit && !placed; ++q) {
        if (!hits_[q].intersects(unhit)) continue;
        Bits next = unhit;
        next.and_not(hits_[q]);
        if (dead.count(next)) continue;
        if (feasible(next, r - 1, q + 1)) {
          chosen.push_back(q);
          unhit = std::move(next);
          from = q + 1;
          placed = true;
        } else {
          dead.insert(std::move(next));
        }
      }
      if (!placed) break;
    }
    if (!unhit.none()) {
      throw Error(ErrorCode::kInvalidArgument, "no hitting set of that size");
    }
    return chosen;
  }

 private:
  // Candidate positions >= from, one per distinct trace on `unhit`, with
  // traces strictly contained in another trace dropped.
  void restrict_to(const Bits& unhit, std::size_t from) {
    std::unordered_map<Bits, std::size_t, BitsHash> first;
    std::vector<std::pair<Bits, std::size_t>> traces;
    for (std::size_t p = from; p < n_; ++p) {
      Bits t = hits_[p];
      t.and_with(unhit);
      if (t.none()) continue;
      if (first.emplace(t, p).second) traces.emplace_back(std::move(t), p);
    }
    // A strict subset has a smaller count, so scanning by count descending
    // only needs to compare against traces already kept.
    std::stable_sort(traces.begin(), traces.end(), [](const auto& a,
                                                      const auto& b) {
      return a.first.count() > b.first.count();
    });
    size_cands_.clear();
    size_allowed_ = Bits(n_);
    std::vector<const Bits*> kept;
    for (const auto& [trace, p] : traces) {
      bool dominated = false;
      for (const Bits* k : kept) {
        if (trace.subset_of(*k)) { dominated = true; break; }
      }
      if (dominated) continue;
      kept.push_back(&trace);
      size_cands_.push_back(p);
      size_allowed_.set(p);
    }
    std::sort(size_cands_.begin(), size_cands_.end());
  }

  bool size_dfs(const Bits& unhit, std::size_t k) {
    if (unhit.none()) return true;
    if (k == 0) return false;
    auto f = failed_.find(unhit);
    if (f != failed_.end() && f->second >= k) return false;
    bool ok = size_dfs_body(unhit, k);
    if (!ok) {
      auto& slot = failed_[unhit];
      slot = std::max(slot, k);
    }
    return ok;
  }

  bool size_dfs_body(const Bits& unhit, std::size_t k) {
    if (k == 1) {
      for (std::size_t p : size_cands_)
        if (unhit.subset_of(hits_[p])) return true;
      return false;
    }
    std::size_t lb = packing_bound(unhit, size_allowed_);
    if (lb == Bits::npos || lb > k) return false;
    if (lb < k && lp_bound(unhit, size_allowed_, k + 1e-6) > k + 1e-6) {
      return false;
    }
    // Branch on the unhit constraint with the fewest candidate positions.
    std::size_t pick = Bits::npos, pick_size = Bits::npos;
    for (std::size_t c = unhit.next(0); c != Bits::npos; c = unhit.next(c + 1)) {
      std::size_t s = cover_[c].and_count(size_allowed_);
      if (s < pick_size) {
        pick = c;
        pick_size = s;
        if (s <= 1) break;
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> branch;
    Bits avail = cover_[pick];
    avail.and_with(size_allowed_);
    for (std::size_t p = avail.next(0); p != Bits::npos; p = avail.next(p + 1))
      branch.emplace_back(hits_[p].and_count(unhit), p);
    std::sort(branch.begin(), branch.end(), [](auto a, auto b) {
      return a.first > b.first || (a.first == b.first && a.second < b.second);
    });
    for (auto [gain, p] : branch) {
      Bits next = unhit;
      next.and_not(hits_[p]);
      if (size_dfs(next, k - 1)) return true;
    }
    return false;
  }

  std::size_t n_;
  std::size_t k_ = 0;
  std::vector<Bits> cover_;  // by constraint, over positions
  std::vector<Bits> hits_;   // by position, over constraints
  std::vector<std::size_t> last_;
  std::vector<std::size_t> size_cands_;
  Bits size_allowed_;
  std::unordered_map<Bits, std::size_t, BitsHash> failed_;
};

}  // namespace

bool is_attractor(const FactorIndex& index, const PositionSet& g) {
  for (std::size_t p : g.positions()) {
    if (p == 0 || p > index.size()) {
      throw Error(ErrorCode::kOutOfRange,
                  "position " + std::to_string(p) + " outside [1, " +
                      std::to_string(index.size()) + "]");
    }
  }
  for (const CoverConstraint& c : index.constraints()) {
    bool hit = false;
    for (std::size_t p : g.positions()) {
      if (c.covers(static_cast<std::uint32_t>(p))) { hit = true; break; }
    }
    if (!hit) return false;
  }
  return true;
}

bool is_attractor(const Word& w, const PositionSet& g) {
  return is_attractor(FactorIndex(w), g);
}

bool is_interval_attractor(const FactorIndex& index, std::size_t i,
                           std::size_t j) {
  if (i == 0 || i > j || j > index.size()) {
    throw Error(ErrorCode::kOutOfRange, "invalid interval");
  }
  for (const CoverConstraint& c : index.constraints()) {
    std::uint32_t q = c.next_at_or_after(static_cast<std::uint32_t>(i));
    if (q == 0 || q > j) return false;
  }
  return true;
}

bool is_interval_attractor(const Word& w, std::size_t i, std::size_t j) {
  return is_interval_attractor(FactorIndex(w), i, j);
}

PositionSet greedy_attractor(const FactorIndex& index) {
  HittingSet hs(index);
  std::vector<std::size_t> v;
  for (std::size_t p : hs.greedy()) v.push_back(p + 1);
  return PositionSet(std::move(v), index.size());
}

GammaResult gamma_star(const FactorIndex& index,
                       std::optional<std::size_t> budget) {
  std::size_t n = index.size();
  if (n == 0) return {0, PositionSet({}, 0)};
  HittingSet hs(index);
  std::size_t upper = hs.greedy().size();
  std::size_t lower = 1;
  Bits all(n);
  for (std::size_t p = 0; p < n; ++p) all.set(p);
  lower = std::max(lower, hs.packing_bound(hs.all_unhit(), all));
  double fractional = hs.lp_bound(hs.all_unhit(), all, static_cast<double>(n));
  lower = std::max(lower, static_cast<std::size_t>(std::ceil(fractional - 1e-6)));
  std::size_t k = lower;
  for (; k < upper; ++k) {
    if (budget && k > *budget) break;
    if (hs.feasible(hs.all_unhit(), k)) break;
  }
  if (budget && k > *budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "gamma* exceeds budget " + std::to_string(*budget));
  }
  std::vector<std::size_t> v;
  for (std::size_t p : hs.lex_smallest(k)) v.push_back(p + 1);
  return {k, PositionSet(std::move(v), n)};
}

GammaResult gamma_star(const Word& w, std::optional<std::size_t> budget,
                       const AttractorGuards& guards) {
  check_guard(w.size(), guards.exact_max_length, "gamma*");
  return gamma_star(FactorIndex(w), budget);
}

SpanResult span(const FactorIndex& index) {
  std::size_t n = index.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "span of empty word");
  SpanResult best{n, {1, static_cast<std::uint32_t>(n)}};
  for (std::uint32_t i = 1; i <= n; ++i) {
    std::uint32_t j = i;
    for (const CoverConstraint& c : index.constraints()) {
      std::uint32_t q = c.next_at_or_after(i);
      if (q == 0) return best;
      j = std::max(j, q);
    }
    if (j - i < best.value) best = {j - i, {i, j}};
  }
  return best;
}

SpanResult span(const Word& w, const AttractorGuards& guards) {
  check_guard(w.size(), guards.exact_max_length, "span");
  return span(FactorIndex(w));
}

std::size_t lm(const FactorIndex& index) {
  if (index.size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "lm of empty word");
  }
  std::size_t k = 1;
  for (const CoverConstraint& c : index.constraints())
    k = std::max<std::size_t>(k, c.first_position());
  return k;
}

std::size_t lm(const Word& w, const AttractorGuards& guards) {
  check_guard(w.size(), guards.exact_max_length, "lm");
  return lm(FactorIndex(w));
}

AttractorReport analyze(const Word& w, const AttractorGuards& guards) {
  AttractorReport r;
  if (w.size() > guards.exact_max_length || w.empty()) return r;
  FactorIndex index(w);
  GammaResult g = gamma_star(index);
  r.gamma_star = g.size;
  r.witness_min = g.witness;
  r.gamma_exact = true;
  SpanResult s = span(index);
  r.span = s.value;
  r.span_witness = s.witness;
  r.span_exact = true;
  r.lm = lm(index);
  r.lm_exact = true;
  return r;
}

}  // namespace attractorlab
