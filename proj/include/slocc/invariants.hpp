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

#include <optional>
#include <span>

#include "slocc/linalg.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// Complete SLOCC-invariant data for one state.
///
/// hdet223 / hdet222 are only defined when Clare's local rank is at most 3 / 2.
/// Their complex phase depends on the basis chosen for Clare's support; the
/// modulus is the canonical invariant.
struct InvariantSignature {
    int rank_R = 0;
    int rank_RTR = 0;
    LocalRanks local_ranks;
    Complex det224;
    std::optional<Complex> hdet223;
    std::optional<Complex> hdet222;
};

/// The unitary
///
///            [ 1  0  0  1 ]
///   1/sqrt2  [ 0  i  i  0 ]
///            [ 0 -1  1  0 ]
///            [ i  0  0 -i ]
///
/// conjugating SL(2) (x) SL(2) onto SO(4, C).
const ComplexMatrix& magic_T();

/// R = T Psi~ of the state brought to Clare dimension 4.
ComplexMatrix r_matrix(const PureState& state);

struct RankPair {
    int rank_R = 0;
    int rank_RTR = 0;
};

/// (rank R, rank R^T R) of the normalized state. The transpose is the plain one: conjugating it would
/// destroy the complex-orthogonal structure the invariant rests on.
RankPair rank_pair(const PureState& state, const Tolerances& tol = {});

/// O = T (M1 (x) M2) T^dagger. Throws PreconditionError unless both
/// determinants are within 1e-8 of 1.
ComplexMatrix so4_from_sl2_pair(const ComplexMatrix& m1, const ComplexMatrix& m2);

/// det Psi~ in the 2x2x4 format (degree 4).
Complex det224(const PureState& state);

/// Degree-6 hyperdeterminant of the 2x2x3 format, after restricting Clare to a
/// 3-dimensional support. PreconditionError when r3 = 4.
Complex hdet223(const PureState& state, const Tolerances& tol = {});

/// Cayley's degree-4 hyperdeterminant of the 2x2x2 format. Its modulus times 4
/// is the 3-tangle of a normalized state. PreconditionError when r3 > 2.
Complex hdet222(const PureState& state, const Tolerances& tol = {});

/// Raw polynomials on an explicit tensor (row-major (i1,i2,i3), n = 3 / n = 2).
Complex hyperdet_2x2x3(const PureState& state);
Complex hyperdet_2x2x2(const PureState& state);

/// True iff k_i - 1 <= sum_{j != i} (k_j - 1) for every i.
bool admits_hyperdeterminant(std::span<const int> dims);

/// Scale-free size of the hyperdeterminant for the given Clare format (2 or 3):
/// the state is restricted to its Clare support, balanced by `sweeps` rounds of
/// determinant-one local filtering (each party multiplied by
/// (rho_i / det(rho_i)^{1/k})^{-1/2}), and |Det| / ||psi||^degree is returned.
/// Filtering leaves Det unchanged while pulling stable orbits toward their
/// minimal-norm point, which is what makes a fixed zero threshold usable.
double balanced_hyperdet_ratio(const PureState& state, int clare_dim, const Tolerances& tol = {},
                               int sweeps = 2);

InvariantSignature compute_signature(const PureState& state, const Tolerances& tol = {});

}  // namespace slocc
