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

#include "slocc/preparation.hpp"

#include <algorithm>
#include <cmath>

#include "slocc/errors.hpp"

namespace slocc {

namespace {

constexpr double kNormalizationTolerance = 1e-9;
constexpr int kBellDim = 4;

std::array<ComplexMatrix, 4> make_paulis() {
    std::array<ComplexMatrix, 4> s;
    const Complex i(0.0, 1.0);
    s[0] = ComplexMatrix::Identity(2, 2);
    s[1] = ComplexMatrix::Zero(2, 2);
    s[1](0, 1) = 1.0;
    s[1](1, 0) = 1.0;
    s[2] = ComplexMatrix::Zero(2, 2);
    s[2](0, 1) = -i;
    s[2](1, 0) = i;
    s[3] = ComplexMatrix::Identity(2, 2);
    s[3](1, 1) = -1.0;
    return s;
}

PureState pad_to_four(const PureState& state) {
    if (state.n() >= kBellDim) {
        return state;
    }
    ComplexMatrix padded = ComplexMatrix::Zero(4, kBellDim);
    padded.leftCols(state.n()) = flatten(state);
    return unflatten(padded);
}

ComplexMatrix branch_flattening(const PovmBranch& branch) {
    if (branch.m3.cols() != kBellDim) {
        throw ShapeError("Clare's POVM element must act on the 4-dimensional Bell halves");
    }
    return kron(branch.ua, branch.ub) * (0.5 * ComplexMatrix::Identity(4, kBellDim)) * branch.m3.transpose();
}

}  // namespace

const ComplexMatrix& pauli(int mu) {
    static const std::array<ComplexMatrix, 4> paulis = make_paulis();
    if (mu < 0 || mu > 3) {
        throw PreconditionError("Pauli index must be in 0..3, got " + std::to_string(mu));
    }
    return paulis[static_cast<std::size_t>(mu)];
}

ComplexMatrix pauli_twirl(const ComplexMatrix& x) {
    if (x.rows() != 4 || x.cols() != 4) {
        throw ShapeError("pauli_twirl expects a 4x4 matrix");
    }
    ComplexMatrix acc = ComplexMatrix::Zero(4, 4);
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const ComplexMatrix u = kron(pauli(mu), pauli(nu));
            acc += u.adjoint() * x * u;
        }
    }
    return acc / 16.0;
}

PureState two_bell_pairs() {
    return unflatten(0.5 * ComplexMatrix::Identity(4, kBellDim));
}

PovmEnsemble build_povm(const PureState& target) {
    if (std::abs(target.norm_squared() - 1.0) > kNormalizationTolerance) {
        throw PreconditionError("build_povm requires a normalized target (|psi|^2 = " +
                                std::to_string(target.norm_squared()) + ")");
    }
    const ComplexMatrix psi = flatten(pad_to_four(target));
    PovmEnsemble out;
    out.branches.reserve(16);
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const ComplexMatrix u = kron(pauli(mu), pauli(nu));
            PovmBranch b;
            b.ua = pauli(mu);
            b.ub = pauli(nu);
            b.m3 = 0.5 * psi.transpose() * u.conjugate();
            b.probability = branch_flattening(b).squaredNorm();
            out.branches.push_back(std::move(b));
        }
    }
    return out;
}

PureState povm_branch_state(const PovmBranch& branch) { return unflatten(branch_flattening(branch)); }

PovmVerification verify_povm(const PovmEnsemble& ensemble, const PureState& target) {
    PovmVerification report;
    ComplexMatrix completeness = ComplexMatrix::Zero(kBellDim, kBellDim);
    const ComplexMatrix reference = flatten(pad_to_four(target).normalized());
    report.min_branch_fidelity = ensemble.branches.empty() ? 0.0 : 1.0;
    for (const PovmBranch& b : ensemble.branches) {
        if (b.m3.cols() != kBellDim || b.m3.rows() != reference.cols()) {
            throw ShapeError("POVM element shape does not match the target");
        }
        completeness += b.m3.adjoint() * b.m3;
        const ComplexMatrix branch = branch_flattening(b);
        const double p = branch.squaredNorm();
        report.probability_sum += p;
        // A vanishing branch cannot reproduce the target ray.
        const double f = p > 0.0 ? std::norm((reference.conjugate().cwiseProduct(branch)).sum()) / p : 0.0;
        report.min_branch_fidelity = std::min(report.min_branch_fidelity, f);
    }
    report.completeness_residual = (completeness - ComplexMatrix::Identity(kBellDim, kBellDim)).norm();
    return report;
}

}  // namespace slocc
