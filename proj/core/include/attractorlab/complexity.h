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

#ifndef ATTRACTORLAB_COMPLEXITY_H_
#define ATTRACTORLAB_COMPLEXITY_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "attractorlab/factor_index.h"
#include "attractorlab/word.h"

namespace attractorlab {

/// Number of distinct length-m factors. Throws kOutOfRange unless
/// 1 <= m <= |w|.
std::size_t factor_complexity(const Word& w, std::size_t m);

struct Appearance {
  std::size_t value = 0;  // shortest prefix containing every length-m factor
  bool saturated = false;
};

/// Appearance value relative to the finite word: a lower bound on the
/// infinite word's A(m). `saturated` holds when that prefix ends before
/// |w| - slack (default slack |w|/4).
Appearance appearance(const Word& w, std::size_t m,
                      std::optional<std::size_t> slack = {});
Appearance appearance(const FactorIndex& index, std::size_t m,
                      std::optional<std::size_t> slack = {});

/// Lower-bound estimate of the recurrence function: ĝ + m - 1 with ĝ the
/// largest gap between consecutive occurrence starts of any length-m factor.
/// A factor occurring once contributes the distance from its start to the
/// last window start |w| - m + 1. ĝ is at least 1.
std::size_t recurrence_estimate(const Word& w, std::size_t m);

struct LZBound {
  double value = 0.0;
  double epsilon = 0.0;
  bool vacuous = false;  // ε_n >= 1: the bound says nothing
};

/// n / ((1 - ε_n) log_σ n) with ε_n = 2 (1 + log_σ(log_σ(σ n))) / log_σ n.
LZBound lz_upper_bound_eval(double n, double sigma);
/// As above but throws kVacuousBound when ε_n >= 1.
double lz_upper_bound(double n, double sigma);

enum class Growth { kConstant, kLogarithmic, kSuperlogarithmic };

std::string_view growth_name(Growth g);

struct GrowthFit {
  Growth growth = Growth::kConstant;
  double constant_residual = 0.0;     // relative RMS residual of v = c
  double logarithmic_residual = 0.0;  // relative RMS residual of v = a + b ln n
  double slope = 0.0;                 // b
};

struct GrowthOptions {
  double threshold = 0.2;
  std::size_t min_samples = 8;
  double min_doublings = 3.0;
};

/// Least-squares fit of value against {1} and {1, ln n}. Constant when the
/// constant model's relative residual is within the threshold; logarithmic
/// when the log model is and its slope is positive; superlogarithmic
/// otherwise. Throws kInsufficientSamples.
GrowthFit growth_fit(const std::vector<std::pair<double, double>>& samples,
                     const GrowthOptions& options = {});
Growth growth_classify(const std::vector<std::pair<double, double>>& samples,
                       const GrowthOptions& options = {});

}  // namespace attractorlab

#endif  // ATTRACTORLAB_COMPLEXITY_H_
