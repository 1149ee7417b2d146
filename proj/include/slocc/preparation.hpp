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

#include <array>
#include <vector>

#include "slocc/linalg.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// One outcome of Clare's measurement together with Alice's and Bob's
/// outcome-conditioned unitaries.
struct PovmBranch {
    ComplexMatrix m3;
    ComplexMatrix ua;
    ComplexMatrix ub;
    double probability = 0.0;
};

/// Sixteen branches indexed by mu * 4 + nu.
struct PovmEnsemble {
    std::vector<PovmBranch> branches;
};

struct PovmVerification {
    double completeness_residual = 0.0;
    double min_branch_fidelity = 0.0;
    double probability_sum = 0.0;
};

/// sigma^0 = I, sigma^1 = X, sigma^2 = Y, sigma^3 = Z.
const ComplexMatrix& pauli(int mu);

/// (1/16) sum_{mu,nu} (sigma^mu (x) sigma^nu)^dagger X (sigma^mu (x) sigma^nu); equals tr(X)/4 * I.
ComplexMatrix pauli_twirl(const ComplexMatrix& x);

/// Two Bell pairs |Phi+>_{A C1} |Phi+>_{B C2}, normalized, with Clare holding C1 C2 as a 4-level system.
PureState two_bell_pairs();

/// Clare's 16-outcome POVM M_i = (1/2) Psi~^T (sigma^mu (x) sigma^nu)^*, with
/// U_A = sigma^mu and U_B = sigma^nu. Targets with n < 4 are zero-padded to
/// n = 4; for n > 4 the Clare operators are n x 4.
PovmEnsemble build_povm(const PureState& target);

/// The branch (U_A (x) U_B (x) M_i) |two Bell pairs>, unnormalized.
PureState povm_branch_state(const PovmBranch& branch);

PovmVerification verify_povm(const PovmEnsemble& ensemble, const PureState& target);

}  // namespace slocc
