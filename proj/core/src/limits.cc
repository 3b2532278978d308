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

#include "attractorlab/limits.h"

#include <cstdlib>
#include <string>

#include "attractorlab/error.h"

namespace attractorlab {

std::size_t default_max_length() {
  static const std::size_t cap = [] {
    const char* env = std::getenv("ATTRACTORLAB_MAX_LEN");
    if (env == nullptr || *env == '\0') return kDefaultMaxLength;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return kDefaultMaxLength;
    return static_cast<std::size_t>(v);
  }();
  return cap;
}

void check_length(std::size_t length, std::size_t cap, const char* what) {
  if (length > cap) {
    throw Error(ErrorCode::kLengthOverflow,
                std::string(what) + " length " + std::to_string(length) +
                    " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace attractorlab
