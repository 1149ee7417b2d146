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
#include <initializer_list>
#include <span>
#include <vector>

#include "slocc/linalg.hpp"

namespace slocc {

/// Pure state of C^2 (x) C^2 (x) C^n, stored unnormalized.
///
/// Amplitudes are row-major over (i1, i2, i3) with Alice slowest, so the
/// amplitude of |i1 i2 i3> lives at index (2 * i1 + i2) * n + i3. Rays are
/// what matter physically; operations document how they scale.
class PureState {
   public:
    struct Term {
        std::array<int, 3> index;
        Complex amplitude;
    };

    /// Throws ShapeError on a length mismatch, InvalidInput on non-finite or
    /// all-zero amplitudes.
    PureState(int n, std::vector<Complex> amplitudes);

    /// Builds a state from a sparse ket expansion, e.g. {{{0,0,0}, 1}, {{1,1,1}, 1}}.
    static PureState from_terms(int n, std::initializer_list<Term> terms);
    static PureState from_terms(int n, std::span<const Term> terms);

    int n() const { return n_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex at(int i1, int i2, int i3) const { return amplitudes_[index(i1, i2, i3)]; }
    std::size_t index(int i1, int i2, int i3) const {
        return static_cast<std::size_t>((2 * i1 + i2) * n_ + i3);
    }

    double norm_squared() const;
    double norm() const;
    PureState normalized() const;
    PureState scaled(Complex factor) const;

    bool operator==(const PureState& other) const = default;

   private:
    int n_;
    std::vector<Complex> amplitudes_;
};

struct LocalRanks {
    int r1 = 0;
    int r2 = 0;
    int r3 = 0;

    bool operator==(const LocalRanks&) const = default;
};

/// Psi~ : 4 x n matrix, row (i1 i2) in order 00, 01, 10, 11, column i3.
ComplexMatrix flatten(const PureState& state);

/// Inverse of flatten; `m` must have 4 rows.
PureState unflatten(const ComplexMatrix& m);

/// Matrix whose rows are indexed by party `party` (1, 2 or 3) and whose
/// columns run over the other two indices. Its Gram matrix is rho_party.
ComplexMatrix unfolding(const PureState& state, int party);

/// Partial trace onto one party. Trace equals norm_squared().
ComplexMatrix reduced_density(const PureState& state, int party);

/// Ranks of rho_1, rho_2, rho_3 of the normalized state.
LocalRanks local_ranks(const PureState& state, const Tolerances& tol = {});

/// Brings Clare's space to dimension 4. n < 4 is zero-padded, n == 4 is
/// returned as is, and n > 4 is rotated into the right-singular basis of Psi~
/// and truncated to the first four columns.
PureState clare_normal_support(const PureState& state);

/// Restricts to k Clare columns. When Clare's support already lies inside the
/// leading k columns they are kept verbatim; otherwise the state is first
/// rotated into the right-singular basis of Psi~. Columns are zero-padded when
/// n < k. Throws PreconditionError when r3 > k.
PureState clare_support_columns(const PureState& state, int k, const Tolerances& tol = {});

/// Acts with `m` on one party: a 2x2 matrix for Alice or Bob, an n_out x n
/// matrix for Clare. flatten(result) is (m (x) 1) Psi~, (1 (x) m) Psi~ or
/// Psi~ m^T respectively. Throws ShapeError on mismatched sizes and
/// InvalidInput when the image is the zero vector.
PureState apply_on_party(const PureState& state, int party, const ComplexMatrix& m);

/// <a|b>, conjugating a.
Complex overlap(const PureState& a, const PureState& b);

/// |<a|b>|^2 / (<a|a><b|b>).
double fidelity(const PureState& a, const PureState& b);

}  // namespace slocc
