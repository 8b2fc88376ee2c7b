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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tradeoff/states.hpp"

namespace tradeoff::cli {

/// Exit codes: success, failed verification, bad usage or parameters.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char *kSeedEnvVar = "POVM_TRADEOFF_SEED";

enum class Format { Csv, JsonLines };

enum class Suite { Majorization, Concavity, ClosedForm, NoFeedback };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

/// Locale-independent shortest rendering with 12 significant digits.
std::string format_number(double v);

struct CurveOptions {
    double a = 0.0;
    double b = 0.0;
    double alpha = 1.0;
    std::size_t n = 101;
    Format format = Format::Csv;
};

struct VerifySummary {
    std::size_t samples = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    double max_violation = 0.0;
    std::optional<std::size_t> first_failure;
};

struct VerifyOptions {
    Suite suite = Suite::Majorization;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims{2, 3, 4};
    Format format = Format::Csv;
};

struct ClassifyOptions {
    double a = 0.0;
    double b = 0.0;
    std::size_t grid = 11;
    Format format = Format::Csv;
};

struct StrengthOptions {
    double k = 0.0;
    double a = 0.0;
    Format format = Format::Csv;
};

struct EntropyOptions {
    std::optional<double> a;
    std::vector<double> spectrum;
    Functional measure = Functional::VonNeumann;
    Format format = Format::Csv;
};

/// Runs one verification suite; `failures` receives one line per failing instance.
VerifySummary run_suite(const VerifyOptions &opts, std::ostream &failures);

int cmd_curve(const CurveOptions &opts, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err);
int cmd_classify(const ClassifyOptions &opts, std::ostream &out, std::ostream &err);
int cmd_strength(const StrengthOptions &opts, std::ostream &out, std::ostream &err);
int cmd_entropy(const EntropyOptions &opts, std::ostream &out, std::ostream &err);

/// Parses arguments and dispatches. `env_seed` is the value of the seed
/// environment variable, if set.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err,
        std::optional<std::string> env_seed = std::nullopt);

}  // namespace tradeoff::cli
