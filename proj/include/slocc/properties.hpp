// Copyright 2026 The slocc224 Authors
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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "slocc/orbits.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// Dense state with i.i.d. complex Gaussian amplitudes.
PureState random_gaussian_state(int n, std::mt19937_64& rng);

/// Gaussian state with psi_000 = psi_100 = psi_010 = psi_001 = psi_002 =
/// psi_003 = 0 (n = 4).
PureState random_dual_pattern_state(std::mt19937_64& rng);

/// Local triple in which at least one factor is rank deficient. The image of
/// `state` is guaranteed to be nonzero and well above round-off.
LocalOp random_noninvertible_op(const PureState& state, std::mt19937_64& rng);

struct PropertyResult {
    std::string name;
    bool passed = true;
    long trials = 0;
    long failures = 0;
    std::string detail;
};

/// Runs every property suite with `trials` random cases each.
std::vector<PropertyResult> run_property_suites(int trials, std::uint64_t seed);

}  // namespace slocc
