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

#ifndef ATTRACTORLAB_THEOREMS_H_
#define ATTRACTORLAB_THEOREMS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "attractorlab/attractor.h"
#include "attractorlab/generator_spec.h"
#include "attractorlab/morphism.h"
#include "attractorlab/sequences.h"
#include "attractorlab/word.h"

namespace attractorlab {

enum class Verdict { kPass, kFail, kVacuous };

std::string_view verdict_name(Verdict v);
/// kFail beats kVacuous beats kPass.
Verdict combine(Verdict a, Verdict b);

struct Cell {
  std::string label;
  std::string expected;
  std::string observed;
  Verdict verdict = Verdict::kPass;
};

/// Enough to regenerate the offending word and rerun the check.
struct Counterexample {
  std::string spec;
  std::size_t n = 0;
  std::string detail;
};

struct CheckResult {
  std::string name;
  std::string universe;
  Verdict verdict = Verdict::kPass;
  std::vector<Cell> cells;
  std::optional<Counterexample> counterexample;

  bool passed() const noexcept { return verdict == Verdict::kPass; }

  /// Records a cell and folds its verdict in. The first failing cell
  /// becomes the counterexample, built from `spec` and `n`.
  void add(Cell cell, std::string_view spec = {}, std::size_t n = 0);
  /// Folds a sub-check in, prefixing its cell labels.
  void absorb(const CheckResult& other);
};

/// `{suite, verdict, universe, cells: [...], counterexample?}` plus the seed
/// when given.
std::string to_json(const CheckResult& result,
                    std::optional<std::uint64_t> seed = {});

// ---------------------------------------------------------------------------
// Inequalities

using PrefixGamma = std::function<std::optional<std::size_t>(std::size_t)>;

/// Checks |alph| <= γ* <= z, γ* - 1 <= span <= lm, p(m) <= m + span,
/// A(m) >= p(m) + m - 1 and, where A(m) is saturated, p(m) <= m·s(A(m)).
/// `s_at` supplies γ* of the prefix of a given length when already known;
/// otherwise it is computed within `guards`. Returns the violations.
std::vector<std::string> measure_inequality_violations(
    const Word& w, const AttractorReport& report, std::size_t z,
    const PrefixGamma& s_at = {}, const AttractorGuards& guards = {});

/// p(m) <= m·s(A(m)) on prefixes of `spec` for m in [m_lo, m_hi]. Each m
/// whose appearance value is not saturated in the generated prefix is
/// reported vacuous. The prefix length is grown up to `max_prefix` until
/// A(m_hi) saturates.
CheckResult check_profile_factor_bound(const GeneratorSpec& spec,
                                       std::size_t m_lo, std::size_t m_hi,
                                       std::size_t max_prefix = 512,
                                       const AttractorGuards& guards = {});

/// p_w(m) <= m + span(w) for every word and every m in [m_lo, m_hi] (capped
/// at |w|).
CheckResult check_span_factor_bound(const std::vector<Word>& words,
                                    std::size_t m_lo, std::size_t m_hi,
                                    const AttractorGuards& guards = {});

// ---------------------------------------------------------------------------
// Morphic images

struct ImageAttractor {
  PositionSet image;    // T^f ∪ T^l ∪ T^φ
  PositionSet t_first;  // first symbol of φ(w_j) for j in Γ
  PositionSet t_last;   // last symbol of φ(w_j) for j in Γ
  PositionSet t_phi;    // attractors of φ(a) overlaid on one φ(w_j), w_j = a
  std::size_t ell = 0;  // longest image
  std::size_t K = 0;    // ell · |source alphabet|
  std::size_t size_bound = 0;  // 2|Γ| + K
  std::size_t span_bound = 0;  // ell · (spread(Γ) + 1)
  std::size_t lm_bound = 0;    // ell · max(Γ)
  bool verified = false;       // image passes is_attractor on φ(w)
};

/// Builds the attractor of φ(w) induced by an attractor `g` of `w`.
/// Throws kNotAnAttractor when `g` does not attract `w` and kUnknownSymbol
/// for a symbol without a rule.
ImageAttractor morphism_image_attractor(const Morphism& m, const Word& w,
                                        const PositionSet& g);

/// Seeded random (morphism, word, attractor) triples: images of length at
/// most `max_image`, words of length at most `max_word`. Each word is
/// checked with a minimum attractor, the minimum-span interval and the
/// leftmost prefix interval.
CheckResult check_morphism_bounds(std::uint64_t seed, std::size_t count,
                                  std::size_t max_image = 3,
                                  std::size_t max_word = 20);

// ---------------------------------------------------------------------------
// Sturmian words

enum class SturmianCase { kBelowThreshold, kFirstBranch, kSecondBranch };

struct SturmianGammaWitness {
  std::size_t n = 0;
  std::size_t n_bar = 0;    // least length with both letters present
  std::size_t k_prime = 0;  // 0 below n_bar
  SturmianCase tag = SturmianCase::kBelowThreshold;
  PositionSet gamma;
};

/// Γ_n of the closed-form leftmost attractor of a characteristic Sturmian
/// prefix: {1} below n̄; {|x_{k'-1}|-1, |x_{k'-1}|} when
/// |x_{k'}| <= n <= |x_{k'}|+|x_{k'-1}|-2; {|x_{k'}|-1, |x_{k'}|} when
/// |x_{k'}|+|x_{k'-1}|-1 <= n < |x_{k'+1}|. k' is the largest k >= 2 with
/// |x_k| >= n̄ and |x_k| <= n.
SturmianGammaWitness sturmian_gamma_formula(const DirectiveSequence& d,
                                            std::size_t n);

/// For every n <= n_max: Γ_n attracts x[1,n]; for n >= n̄ additionally
/// γ* = 2, span = 1 and lm = max Γ_n.
CheckResult verify_sturmian_theorem(const DirectiveSequence& d,
                                    std::size_t n_max,
                                    const AttractorGuards& guards = {});

/// First n <= n_max at which the (lm, Γ_n) sequences of two characteristic
/// Sturmian words differ.
std::optional<std::size_t> distinguishing_length(const DirectiveSequence& a,
                                                 const DirectiveSequence& b,
                                                 std::size_t n_max);

/// The set {n <= n_max : span = 1} has at least as many members as there
/// are standard words of length in [n̄, n_max].
CheckResult check_sturmian_span_one(const DirectiveSequence& d,
                                    std::size_t n_max);

/// The 14-symbol prefix aabaaaaaabaaaa of the word obtained by dropping
/// four letters from the Sturmian word with directive (6,2,...): no pair of
/// consecutive positions attracts it, {3,9} does, and γ* = 2.
CheckResult check_noncharacteristic_remark();

// ---------------------------------------------------------------------------
// Other families

/// span of period-doubling prefixes: 1 for 1 < n <= 5 and 2^i for
/// 3·2^i <= n < 3·2^{i+1}; s(n) = 2 for n > 1.
CheckResult check_period_doubling_span(std::size_t n_max = 192,
                                       const AttractorGuards& guards = {});

/// The predicted 3-position set attracts u_{i+1} for 0 <= i <= levels, and
/// γ*(u_{i+1}) <= 3.
CheckResult check_holub_attractors(const IntSequence& seq, std::size_t levels,
                                   const AttractorGuards& guards = {});

/// Prefixes of u v^ω up to n_max: lm(n) <= |uv| for n >= |uv| and
/// s(n) <= |u| + max s(v^ω) + 1.
CheckResult check_ultimately_periodic(const Word& u, const Word& v,
                                      std::size_t n_max,
                                      const AttractorGuards& guards = {});

struct QuasiSturmian {
  bool detected = false;
  std::optional<long long> d;
  std::optional<std::size_t> n0;
};

/// Whether p(m) - m is eventually constant over saturated m <= m_max,
/// judged on the last ⌈m_max/3⌉ saturated values.
QuasiSturmian detect_quasi_sturmian(const Word& w, std::size_t m_max);
/// Pass when detected, fail when not, vacuous when A(m_max) is unsaturated.
CheckResult check_quasi_sturmian(const Word& w, const std::string& source,
                                 std::size_t m_max);
CheckResult check_quasi_sturmian(const GeneratorSpec& spec, std::size_t n_max,
                                 std::size_t m_max);

struct Figure1Options {
  std::size_t period_doubling_max = 256;
  std::size_t thue_morse_max = 1024;
  std::size_t sturmian_max = 500;
  std::size_t power2_min_exponent = 3;  // samples n = 2^j + 1
  std::size_t power2_max_exponent = 11;
  std::size_t toeplitz_max = 512;
  std::size_t toeplitz_min_distinct = 4;
  std::size_t holub_levels = 3;
  AttractorGuards guards{2100, 16};
};

/// The checkable cells of the summary table of s-values.
CheckResult run_figure1_suite(const Figure1Options& options = {});

/// Exhaustive-oracle agreement of γ*, span and lm on `count` seeded random
/// words of length at most `max_length` over at most `max_sigma` letters.
CheckResult check_oracle_agreement(std::uint64_t seed, std::size_t count,
                                   std::size_t max_length = 12,
                                   std::size_t max_sigma = 3);

// ---------------------------------------------------------------------------
// Suite registry used by the CLI.

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::optional<std::size_t> count;
  std::optional<std::size_t> n_max;
  /// Unset means each suite's own defaults.
  std::optional<AttractorGuards> guards;
};

const std::vector<std::string>& suite_names();
/// Throws kUnknownSuite.
CheckResult run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace attractorlab

#endif  // ATTRACTORLAB_THEOREMS_H_
