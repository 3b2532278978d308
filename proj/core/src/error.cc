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

#include "attractorlab/error.h"

namespace attractorlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kUnknownSymbol: return "unknown-symbol";
    case ErrorCode::kNotProlongable: return "not-prolongable";
    case ErrorCode::kErasingRule: return "erasing-rule";
    case ErrorCode::kLengthOverflow: return "length-overflow";
    case ErrorCode::kDirectiveExhausted: return "directive-exhausted";
    case ErrorCode::kSequenceExhausted: return "sequence-exhausted";
    case ErrorCode::kInvalidSequence: return "invalid-sequence";
    case ErrorCode::kInvalidPattern: return "invalid-pattern";
    case ErrorCode::kGuardExceeded: return "guard-exceeded";
    case ErrorCode::kBudgetExceeded: return "budget-exceeded";
    case ErrorCode::kNotAnAttractor: return "not-an-attractor";
    case ErrorCode::kVacuousBound: return "vacuous-bound";
    case ErrorCode::kInsufficientSamples: return "insufficient-samples";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kUnknownSuite: return "unknown-suite";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace attractorlab
