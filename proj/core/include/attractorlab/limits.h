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

#ifndef ATTRACTORLAB_LIMITS_H_
#define ATTRACTORLAB_LIMITS_H_

#include <cstddef>

namespace attractorlab {

inline constexpr std::size_t kDefaultMaxLength = std::size_t{1} << 20;

// Global cap on generated word lengths. Reads ATTRACTORLAB_MAX_LEN once;
// falls back to kDefaultMaxLength when unset or unparsable.
std::size_t default_max_length();

// Throws Error(kLengthOverflow) when `length` exceeds `cap`.
void check_length(std::size_t length, std::size_t cap, const char* what);

}  // namespace attractorlab

#endif  // ATTRACTORLAB_LIMITS_H_
