// Copyright 2026 The povm-tradeoff Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tradeoff {

enum class ErrorCode {
    InvalidArgument,
    NotHermitian,
    NoConvergence,
    NotPsd,
    NotUnitary,
    DimMismatch,
    InvalidState,
    BlochOutOfBall,
    NotResolution,
    IndexOutOfRange,
    ZeroProbabilityOutcome,
    DegenerateSqrt,
    SingularDenominator,
    SingularR0,
    OutOfCurveDomain,
    LengthMismatch,
    BadRank,
    SingularAlpha,
    BOutOfRange,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::NotPsd: return "NotPsd";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::InvalidState: return "InvalidState";
        case ErrorCode::BlochOutOfBall: return "BlochOutOfBall";
        case ErrorCode::NotResolution: return "NotResolution";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::ZeroProbabilityOutcome: return "ZeroProbabilityOutcome";
        case ErrorCode::DegenerateSqrt: return "DegenerateSqrt";
        case ErrorCode::SingularDenominator: return "SingularDenominator";
        case ErrorCode::SingularR0: return "SingularR0";
        case ErrorCode::OutOfCurveDomain: return "OutOfCurveDomain";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::BadRank: return "BadRank";
        case ErrorCode::SingularAlpha: return "SingularAlpha";
        case ErrorCode::BOutOfRange: return "BOutOfRange";
    }
    return "Unknown";
}

/// Exception type for every contract violation in the library. The code is
/// stable and meant for programmatic inspection; the message is for humans.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace tradeoff
