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

#include "slocc/invariants.hpp"

#include <cmath>
#include <string>

#include "slocc/errors.hpp"

namespace slocc {

namespace {

constexpr double kUnitDetTolerance = 1e-8;

Complex det3(const ComplexMatrix& rows, int a, int b, int c) {
    ComplexMatrix m(3, 3);
    m.row(0) = rows.row(a);
    m.row(1) = rows.row(b);
    m.row(2) = rows.row(c);
    return det(m);
}

// One filtering step on `party`; returns the state unchanged when rho is
// singular (the caller only filters full-local-rank states).
PureState balance_party(const PureState& state, int party) {
    const ComplexMatrix rho = reduced_density(state, party);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho);
    Eigen::VectorXd w = eig.eigenvalues();
    if (w.minCoeff() <= 0.0) {
        return state;
    }
    const auto k = static_cast<double>(w.size());
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        log_det += std::log(w(i));
    }
    w *= std::exp(-log_det / k);
    const Eigen::VectorXd inv_sqrt = w.cwiseSqrt().cwiseInverse();
    const ComplexMatrix& v = eig.eigenvectors();
    const ComplexMatrix filter = v * inv_sqrt.cast<Complex>().asDiagonal() * v.adjoint();
    return apply_on_party(state, party, filter);
}

}  // namespace

const ComplexMatrix& magic_T() {
    static const ComplexMatrix t = [] {
        const double s = 1.0 / std::sqrt(2.0);
        const Complex i(0.0, 1.0);
        ComplexMatrix m(4, 4);
        m << 1.0, 0.0, 0.0, 1.0,
             0.0, i, i, 0.0,
             0.0, -1.0, 1.0, 0.0,
             i, 0.0, 0.0, -i;
        return ComplexMatrix(s * m);
    }();
    return t;
}

ComplexMatrix r_matrix(const PureState& state) { return magic_T() * flatten(clare_normal_support(state)); }

RankPair rank_pair(const PureState& state, const Tolerances& tol) {
    // On the unit sphere round-off in R^T R sits far below the absolute floor.
    const ComplexMatrix r = r_matrix(state.normalized());
    return {numerical_rank(r, tol), numerical_rank(r.transpose() * r, tol)};
}

ComplexMatrix so4_from_sl2_pair(const ComplexMatrix& m1, const ComplexMatrix& m2) {
    if (m1.rows() != 2 || m1.cols() != 2 || m2.rows() != 2 || m2.cols() != 2) {
        throw ShapeError("so4_from_sl2_pair takes two 2x2 matrices");
    }
    if (std::abs(det(m1) - 1.0) > kUnitDetTolerance || std::abs(det(m2) - 1.0) > kUnitDetTolerance) {
        throw PreconditionError("so4_from_sl2_pair needs det(M1) = det(M2) = 1");
    }
    const ComplexMatrix& t = magic_T();
    return t * kron(m1, m2) * t.adjoint();
}

Complex det224(const PureState& state) { return det(flatten(clare_normal_support(state))); }

Complex hyperdet_2x2x3(const PureState& state) {
    if (state.n() != 3) {
        throw ShapeError("hyperdet_2x2x3 needs n = 3");
    }
    // Rows of Psi~ are indexed 00, 01, 10, 11.
    const ComplexMatrix rows = flatten(state);
    return det3(rows, 0, 1, 2) * det3(rows, 1, 2, 3) - det3(rows, 0, 1, 3) * det3(rows, 0, 2, 3);
}

Complex hyperdet_2x2x2(const PureState& state) {
    if (state.n() != 2) {
        throw ShapeError("hyperdet_2x2x2 needs n = 2");
    }
    const auto p = [&](int a, int b, int c) { return state.at(a, b, c); };
    const Complex p000 = p(0, 0, 0), p001 = p(0, 0, 1), p010 = p(0, 1, 0), p011 = p(0, 1, 1);
    const Complex p100 = p(1, 0, 0), p101 = p(1, 0, 1), p110 = p(1, 1, 0), p111 = p(1, 1, 1);
    const Complex squares = p000 * p000 * p111 * p111 + p001 * p001 * p110 * p110 +
                            p010 * p010 * p101 * p101 + p100 * p100 * p011 * p011;
    const Complex pairs = p000 * p001 * p110 * p111 + p000 * p010 * p101 * p111 +
                          p000 * p100 * p011 * p111 + p001 * p010 * p101 * p110 +
                          p001 * p100 * p011 * p110 + p010 * p100 * p011 * p101;
    const Complex quads = p000 * p011 * p101 * p110 + p001 * p010 * p100 * p111;
    return squares - 2.0 * pairs + 4.0 * quads;
}

Complex hdet223(const PureState& state, const Tolerances& tol) {
    return hyperdet_2x2x3(clare_support_columns(state, 3, tol));
}

Complex hdet222(const PureState& state, const Tolerances& tol) {
    return hyperdet_2x2x2(clare_support_columns(state, 2, tol));
}

bool admits_hyperdeterminant(std::span<const int> dims) {
    long total = 0;
    for (int k : dims) {
        if (k < 1) {
            throw PreconditionError("tensor dimensions must be >= 1");
        }
        total += k - 1;
    }
    for (int k : dims) {
        if (k - 1 > total - (k - 1)) {
            return false;
        }
    }
    return true;
}

double balanced_hyperdet_ratio(const PureState& state, int clare_dim, const Tolerances& tol, int sweeps) {
    if (clare_dim != 2 && clare_dim != 3) {
        throw PreconditionError("hyperdeterminants are implemented for Clare dimension 2 or 3");
    }
    PureState psi = clare_support_columns(state, clare_dim, tol).normalized();
    for (int s = 0; s < sweeps; ++s) {
        for (int party = 1; party <= 3; ++party) {
            psi = balance_party(psi, party);
        }
    }
    const double norm = psi.norm();
    if (clare_dim == 2) {
        return std::abs(hyperdet_2x2x2(psi)) / std::pow(norm, 4);
    }
    return std::abs(hyperdet_2x2x3(psi)) / std::pow(norm, 6);
}

InvariantSignature compute_signature(const PureState& state, const Tolerances& tol) {
    InvariantSignature sig;
    const RankPair ranks = rank_pair(state, tol);
    sig.rank_R = ranks.rank_R;
    sig.rank_RTR = ranks.rank_RTR;
    sig.local_ranks = local_ranks(state, tol);
    sig.det224 = det224(state);
    if (numerical_rank(flatten(state), tol) <= 3) {
        sig.hdet223 = hdet223(state, tol);
    }
    if (numerical_rank(flatten(state), tol) <= 2) {
        sig.hdet222 = hdet222(state, tol);
    }
    return sig;
}

}  // namespace slocc
