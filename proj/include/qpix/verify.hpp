// Copyright 2026 The qpix authors
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

/// \file
/// Randomized self-verification over the encode and search pipelines.
/// Each property draws fresh images from a seeded generator, so a run is
/// reproducible from (n_max, q_max, trials, seed) alone. Fault injection
/// deliberately drops a controlled-X from the encoding circuit to prove
/// the equivalence property can fail.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpix/image.hpp"

namespace qpix {

/// Circuit/analytic state agreement is exact arithmetic plus Hadamard
/// rounding, so the bound is tight.
inline constexpr double kEquivalenceTolerance = 1e-10;

/// Amplified success probability accumulates error across iterations.
inline constexpr double kSuccessLawTolerance = 1e-9;

enum class PropertyStatus { Pass, Fail, Vacuous };

const char* to_string(PropertyStatus status);

struct PropertyResult {
    std::string name;
    PropertyStatus status = PropertyStatus::Vacuous;
    std::uint64_t trials = 0;
    double tolerance = 0.0;
    /// Largest deviation seen across trials; for a failed property this is
    /// the deviation of the failing case.
    double max_deviation = 0.0;
    /// Human-readable failure description; empty on pass.
    std::string detail;
    /// Image that produced the failure, kept for replay.
    std::optional<GrayImage> failing_case;

    bool passed() const { return status != PropertyStatus::Fail; }
};

struct VerificationRun {
    int n_max = 0;
    int q_max = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool fault_injection = false;
    std::vector<PropertyResult> properties;

    bool all_passed() const;
};

/// Checks three properties over `trials` random images with side up to
/// 2^n_max and bit depth up to q_max:
///   - encode-circuit-analytic-equivalence: simulating the encoding
///     circuit reproduces the analytic state within kEquivalenceTolerance;
///   - amplified-success-law: the post-amplification probability mass on
///     minimum-intensity positions matches sin^2((2r+1) asin(sqrt(M/N)))
///     within kSuccessLawTolerance;
///   - decode-encode-identity: decoding ideal-proportion counts of the
///     analytic state returns the original image exactly.
/// With `inject_fault` set, one controlled-X is dropped from each encoding
/// circuit before the equivalence check; a passing run then reports that
/// property as failed, which callers surface as a nonzero exit.
VerificationRun run_verification(int n_max, int q_max, std::uint64_t trials,
                                 std::uint64_t seed, bool inject_fault);

}  // namespace qpix
