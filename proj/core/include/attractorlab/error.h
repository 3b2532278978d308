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

#ifndef ATTRACTORLAB_ERROR_H_
#define ATTRACTORLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace attractorlab {

enum class ErrorCode {
  kInvalidArgument,
  kOutOfRange,
  kUnknownSymbol,
  kNotProlongable,
  kErasingRule,
  kLengthOverflow,
  kDirectiveExhausted,
  kSequenceExhausted,
  kInvalidSequence,
  kInvalidPattern,
  kGuardExceeded,
  kBudgetExceeded,
  kNotAnAttractor,
  kVacuousBound,
  kInsufficientSamples,
  kParse,
  kUnknownSuite,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// All recoverable failures in the library are reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace attractorlab

#endif  // ATTRACTORLAB_ERROR_H_
