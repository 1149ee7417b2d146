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
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "slocc/classifier.hpp"
#include "slocc/linalg.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// One local operator per party: 2x2 for Alice and Bob, n_out x n for Clare.
struct LocalOp {
    ComplexMatrix m1;
    ComplexMatrix m2;
    ComplexMatrix m3;

    static LocalOp identity(int n);
    static LocalOp on_alice(ComplexMatrix m, int n);
    static LocalOp on_bob(ComplexMatrix m, int n);
    static LocalOp on_clare(ComplexMatrix m);

    /// Per-factor invertibility: square and of full numerical rank.
    std::array<bool, 3> invertible(const Tolerances& tol = {}) const;
    bool is_invertible(const Tolerances& tol = {}) const;
};

/// `first` followed by `second`.
LocalOp compose(const LocalOp& first, const LocalOp& second);

/// |psi'> = M1 (x) M2 (x) M3 |psi>, i.e. flatten(psi') = (M1 (x) M2) Psi~ M3^T.
PureState apply_local(const PureState& state, const LocalOp& op);

/// Normalized table representative, n = 4.
PureState representative(SloccClass c);

/// Random invertible triple (SL(2), SL(2), SL(n)) with every factor's
/// condition number at most `condition_cap`.
LocalOp random_invertible_op(int n, std::mt19937_64& rng, double condition_cap = 100.0);

/// representative(c) moved by a random invertible triple. Deterministic for a
/// fixed seed; the result is checked to classify as `c`.
PureState random_orbit_sample(SloccClass c, std::uint64_t seed, double condition_cap = 100.0);

struct WitnessStep {
    LocalOp op;
    std::string description;
};

/// A proven noninvertible conversion from representative(from) to a state of
/// class `to`. Every catalog witness lands exactly on the ray of
/// representative(to), so witnesses compose.
struct OrderEdge {
    SloccClass from;
    SloccClass to;
    LocalOp witness;
    std::string kind;
    std::vector<WitnessStep> steps;
};

/// The directly proven descents (the covering relation of the partial order).
const std::vector<OrderEdge>& direct_edges();

/// Direct or transitively composed witness; identity for from == to; nullopt
/// when no descent is proven.
std::optional<OrderEdge> conversion_witness(SloccClass from, SloccClass to);

/// Reachability in the reflexive-transitive closure of direct_edges().
bool dominates(SloccClass a, SloccClass b);

/// (rank R, rank R^T R, r1, r2) of the representative.
std::array<int, 4> dominance_signature(SloccClass c);

/// Component-wise dominance of dominance_signature. Implied by dominates().
bool necessary_condition(SloccClass a, SloccClass b);

/// 5 for Generic down to 1 for S: length of the longest descent to S, plus one.
int grade(SloccClass c);

/// Representative of MinorRank3 in the R-normal form
/// R = [e0; e1; e2; (i, 0, 0, 0)], i.e. Psi~ = T^dagger R. The minor-class
/// projections onto {|1>,|2>} and {|0>, |1>+|2>} act on this form.
PureState minor_normal_form();

/// Invertible op taking the (unnormalized) minor representative ket onto
/// minor_normal_form().
LocalOp minor_to_normal_form();

/// rho1 and rho2 within 1e-8 of 1/2 and rho3 within 1e-8 of its support
/// projector divided by r3 (Frobenius norm, state normalized first).
bool is_maximally_entangled_rep(const PureState& state, const Tolerances& tol = {});

/// Membership in the hyperplane tangent to the separable variety at |000>:
/// psi_000 = psi_100 = psi_010 = 0 and psi_00k = 0 for every k >= 1, each
/// within 1e-9 ||psi||.
bool dual_tangency_at_origin(const PureState& state);

/// The partial order as a Graphviz digraph: one node per class labeled with
/// its name and (rank R, rank R^T R, r1), one rank=same group per grade,
/// edges labeled with the witness kind.
std::string order_dot();

}  // namespace slocc
