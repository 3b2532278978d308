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

#include "attractorlab/complexity.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "attractorlab/error.h"

namespace attractorlab {
namespace {

void check_m(std::size_t n, std::size_t m) {
  if (m == 0 || m > n) {
    throw Error(ErrorCode::kOutOfRange, "factor length " + std::to_string(m) +
                                            " outside [1, " +
                                            std::to_string(n) + "]");
  }
}

std::string_view view(const std::vector<Symbol>& bytes) {
  return {reinterpret_cast<const char*>(bytes.data()), bytes.size()};
}

std::vector<Symbol> copy(const Word& w) {
  return {w.symbols().begin(), w.symbols().end()};
}

Appearance make_appearance(std::size_t value, std::size_t n,
                           std::optional<std::size_t> slack) {
  std::size_t s = slack.value_or(n / 4);
  return {value, s < n && value < n - s};
}

}  // namespace

std::size_t factor_complexity(const Word& w, std::size_t m) {
  check_m(w.size(), m);
  auto bytes = copy(w);
  std::string_view s = view(bytes);
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i + m <= s.size(); ++i) seen.insert(s.substr(i, m));
  return seen.size();
}

Appearance appearance(const Word& w, std::size_t m,
                      std::optional<std::size_t> slack) {
  check_m(w.size(), m);
  auto bytes = copy(w);
  std::string_view s = view(bytes);
  std::unordered_set<std::string_view> seen;
  std::size_t value = 0;
  for (std::size_t i = 0; i + m <= s.size(); ++i) {
    if (seen.insert(s.substr(i, m)).second) value = i + m;
  }
  return make_appearance(value, w.size(), slack);
}

Appearance appearance(const FactorIndex& index, std::size_t m,
                      std::optional<std::size_t> slack) {
  check_m(index.size(), m);
  std::size_t value = 0;
  for (std::uint32_t s : index.first_occurrences(m))
    value = std::max<std::size_t>(value, s + m - 1);
  return make_appearance(value, index.size(), slack);
}

std::size_t recurrence_estimate(const Word& w, std::size_t m) {
  check_m(w.size(), m);
  auto bytes = copy(w);
  std::string_view s = view(bytes);
  const std::size_t windows = s.size() - m + 1;
  struct Seen {
    std::size_t first;
    std::size_t last;
  };
  std::unordered_map<std::string_view, Seen> occ;
  std::size_t gap = 1;
  for (std::size_t i = 1; i <= windows; ++i) {
    auto [it, fresh] = occ.try_emplace(s.substr(i - 1, m), Seen{i, i});
    if (!fresh) {
      gap = std::max(gap, i - it->second.last);
      it->second.last = i;
    }
  }
  for (const auto& [u, o] : occ) {
    if (o.first == o.last) gap = std::max(gap, windows - o.first);
  }
  return gap + m - 1;
}

LZBound lz_upper_bound_eval(double n, double sigma) {
  if (sigma < 2 || n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "lz bound needs sigma >= 2 and n >= 2");
  }
  auto log_s = [sigma](double x) { return std::log(x) / std::log(sigma); };
  LZBound b;
  double ls = log_s(n);
  double inner = log_s(sigma * n);
  b.epsilon = inner > 0 ? 2.0 * (1.0 + log_s(inner)) / ls
                        : std::numeric_limits<double>::infinity();
  b.vacuous = !(b.epsilon < 1.0);
  b.value = b.vacuous ? std::numeric_limits<double>::infinity()
                      : n / ((1.0 - b.epsilon) * ls);
  return b;
}

double lz_upper_bound(double n, double sigma) {
  LZBound b = lz_upper_bound_eval(n, sigma);
  if (b.vacuous) {
    throw Error(ErrorCode::kVacuousBound,
                "epsilon_n = " + std::to_string(b.epsilon) + " >= 1 at n = " +
                    std::to_string(n));
  }
  return b.value;
}

std::string_view growth_name(Growth g) {
  switch (g) {
    case Growth::kConstant: return "constant";
    case Growth::kLogarithmic: return "logarithmic";
    case Growth::kSuperlogarithmic: return "superlogarithmic";
  }
  return "?";
}

GrowthFit growth_fit(const std::vector<std::pair<double, double>>& samples,
                     const GrowthOptions& options) {
  if (samples.size() < options.min_samples) {
    throw Error(ErrorCode::kInsufficientSamples,
                std::to_string(samples.size()) + " samples, need " +
                    std::to_string(options.min_samples));
  }
  double lo = samples.front().first, hi = lo;
  for (auto [n, v] : samples) {
    if (!(n > 0)) {
      throw Error(ErrorCode::kInvalidArgument, "sample n must be positive");
    }
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  if (std::log2(hi / lo) < options.min_doublings) {
    throw Error(ErrorCode::kInsufficientSamples,
                "samples span fewer than " +
                    std::to_string(options.min_doublings) + " doublings");
  }
  const double k = static_cast<double>(samples.size());
  double sv = 0, sx = 0, sxx = 0, sxv = 0, sabs = 0;
  for (auto [n, v] : samples) {
    double x = std::log(n);
    sv += v;
    sx += x;
    sxx += x * x;
    sxv += x * v;
    sabs += std::fabs(v);
  }
  double mean = sv / k;
  double scale = sabs / k;
  double denom = k * sxx - sx * sx;
  double b = denom > 0 ? (k * sxv - sx * sv) / denom : 0.0;
  double a = (sv - b * sx) / k;
  double rc = 0, rl = 0;
  for (auto [n, v] : samples) {
    rc += (v - mean) * (v - mean);
    double e = v - (a + b * std::log(n));
    rl += e * e;
  }
  auto relative = [&](double sq) {
    double rms = std::sqrt(sq / k);
    if (scale == 0) return rms == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    return rms / scale;
  };
  GrowthFit fit;
  fit.constant_residual = relative(rc);
  fit.logarithmic_residual = relative(rl);
  fit.slope = b;
  if (fit.constant_residual <= options.threshold) {
    fit.growth = Growth::kConstant;
  } else if (fit.logarithmic_residual <= options.threshold && b > 0) {
    fit.growth = Growth::kLogarithmic;
  } else {
    fit.growth = Growth::kSuperlogarithmic;
  }
  return fit;
}

Growth growth_classify(const std::vector<std::pair<double, double>>& samples,
                       const GrowthOptions& options) {
  return growth_fit(samples, options).growth;
}

}  // namespace attractorlab
