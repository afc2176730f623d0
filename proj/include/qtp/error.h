// Copyright 2026 The qtp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QTP_ERROR_H_
#define QTP_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtp {

enum class ErrorCode {
  kNotAPrimePower,
  kInvalidElement,
  kSymbolOutOfRange,
  kDimensionMismatch,
  kSizeOverflow,
  kHypothesisViolated,
  kSeedInvalid,
  kAlphabetMismatch,
  kInvalidArray,
  kScaleExceeded,
  kMissingCoefficient,
  kOverflow,
  kLengthMismatch,
  kTooLarge,
  kInvalidParams,
  kInvalidArgument,
  kParseError,
  kIOError,
};

inline std::string_view ErrorCodeName(ErrorCode code);

// All library failures throw qtp::Error; code() identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAPrimePower: return "NotAPrimePower";
    case ErrorCode::kInvalidElement: return "InvalidElement";
    case ErrorCode::kSymbolOutOfRange: return "SymbolOutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSizeOverflow: return "SizeOverflow";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kSeedInvalid: return "SeedInvalid";
    case ErrorCode::kAlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::kInvalidArray: return "InvalidArray";
    case ErrorCode::kScaleExceeded: return "ScaleExceeded";
    case ErrorCode::kMissingCoefficient: return "MissingCoefficient";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIOError: return "IOError";
  }
  return "Unknown";
}

}  // namespace qtp

#endif  // QTP_ERROR_H_
