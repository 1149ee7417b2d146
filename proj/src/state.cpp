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

#include "slocc/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slocc/errors.hpp"

namespace slocc {

PureState::PureState(int n, std::vector<Complex> amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
    if (n < 1) {
        throw ShapeError("Clare dimension must be >= 1, got " + std::to_string(n));
    }
    if (amplitudes_.size() != static_cast<std::size_t>(4 * n)) {
        throw ShapeError("expected " + std::to_string(4 * n) + " amplitudes, got " +
                         std::to_string(amplitudes_.size()));
    }
    bool any_nonzero = false;
    for (const Complex& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw InvalidInput("state has a non-finite amplitude");
        }
        any_nonzero = any_nonzero || a != Complex(0.0, 0.0);
    }
    if (!any_nonzero) {
        throw InvalidInput("state is identically zero");
    }
}

PureState PureState::from_terms(int n, std::initializer_list<Term> terms) {
    return from_terms(n, std::span<const Term>(terms.begin(), terms.size()));
}

PureState PureState::from_terms(int n, std::span<const Term> terms) {
    std::vector<Complex> amps(static_cast<std::size_t>(4 * std::max(n, 0)));
    for (const Term& t : terms) {
        const auto [i1, i2, i3] = t.index;
        if (i1 < 0 || i1 > 1 || i2 < 0 || i2 > 1 || i3 < 0 || i3 >= n) {
            throw ShapeError("ket index out of range for n = " + std::to_string(n));
        }
        amps[static_cast<std::size_t>((2 * i1 + i2) * n + i3)] += t.amplitude;
    }
    return PureState(n, std::move(amps));
}

double PureState::norm_squared() const {
    double total = 0.0;
    for (const Complex& a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

double PureState::norm() const { return std::sqrt(norm_squared()); }

PureState PureState::normalized() const { return scaled(1.0 / norm()); }

PureState PureState::scaled(Complex factor) const {
    std::vector<Complex> amps(amplitudes_);
    for (Complex& a : amps) {
        a *= factor;
    }
    return PureState(n_, std::move(amps));
}

ComplexMatrix flatten(const PureState& state) {
    const int n = state.n();
    ComplexMatrix m(4, n);
    const auto amps = state.amplitudes();
    for (int row = 0; row < 4; ++row) {
        for (int col = 0; col < n; ++col) {
            m(row, col) = amps[static_cast<std::size_t>(row * n + col)];
        }
    }
    return m;
}

PureState unflatten(const ComplexMatrix& m) {
    if (m.rows() != 4) {
        throw ShapeError("a flattened 2x2xn state has 4 rows, got " + std::to_string(m.rows()));
    }
    const auto n = static_cast<int>(m.cols());
    std::vector<Complex> amps(static_cast<std::size_t>(4 * n));
    for (int row = 0; row < 4; ++row) {
        for (int col = 0; col < n; ++col) {
            amps[static_cast<std::size_t>(row * n + col)] = m(row, col);
        }
    }
    return PureState(n, std::move(amps));
}

ComplexMatrix unfolding(const PureState& state, int party) {
    const int n = state.n();
    switch (party) {
        case 1:
        case 2: {
            ComplexMatrix m(2, 2 * n);
            for (int i1 = 0; i1 < 2; ++i1) {
                for (int i2 = 0; i2 < 2; ++i2) {
                    for (int i3 = 0; i3 < n; ++i3) {
                        if (party == 1) {
                            m(i1, i2 * n + i3) = state.at(i1, i2, i3);
                        } else {
                            m(i2, i1 * n + i3) = state.at(i1, i2, i3);
                        }
                    }
                }
            }
            return m;
        }
        case 3:
            return flatten(state).transpose();
        default:
            throw PreconditionError("party must be 1, 2 or 3, got " + std::to_string(party));
    }
}

ComplexMatrix reduced_density(const PureState& state, int party) {
    const ComplexMatrix a = unfolding(state, party);
    return a * a.adjoint();
}

LocalRanks local_ranks(const PureState& state, const Tolerances& tol) {
    const PureState psi = state.normalized();
    return {numerical_rank(reduced_density(psi, 1), tol), numerical_rank(reduced_density(psi, 2), tol),
            numerical_rank(reduced_density(psi, 3), tol)};
}

PureState clare_normal_support(const PureState& state) {
    const int n = state.n();
    const ComplexMatrix psi = flatten(state);
    if (n == 4) {
        return state;
    }
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    if (n < 4) {
        out.leftCols(n) = psi;
    } else {
        // Psi~ V = U Sigma: every column past the fourth is exactly zero.
        out = (psi * svd(psi).right).leftCols(4);
    }
    return unflatten(out);
}

PureState clare_support_columns(const PureState& state, int k, const Tolerances& tol) {
    const int n = state.n();
    const ComplexMatrix psi = flatten(state);
    const int r3 = numerical_rank(psi, tol);
    if (r3 > k) {
        throw PreconditionError("Clare's local rank " + std::to_string(r3) + " exceeds " + std::to_string(k));
    }
    ComplexMatrix out = ComplexMatrix::Zero(4, k);
    const int kept = std::min(n, k);
    const double tail = n > k ? psi.rightCols(n - k).norm() : 0.0;
    if (tail <= std::max(tol.rank_rel * psi.norm(), tol.rank_abs)) {
        out.leftCols(kept) = psi.leftCols(kept);
    } else {
        out = (psi * svd(psi).right).leftCols(k);
    }
    return unflatten(out);
}

PureState apply_on_party(const PureState& state, int party, const ComplexMatrix& m) {
    require_finite(m, "local operator");
    const ComplexMatrix psi = flatten(state);
    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    switch (party) {
        case 1:
        case 2:
            if (m.rows() != 2 || m.cols() != 2) {
                throw ShapeError("Alice and Bob act with 2x2 matrices");
            }
            return unflatten((party == 1 ? kron(m, id2) : kron(id2, m)) * psi);
        case 3:
            if (m.cols() != state.n()) {
                throw ShapeError("Clare's operator has " + std::to_string(m.cols()) +
                                 " columns but n = " + std::to_string(state.n()));
            }
            return unflatten(psi * m.transpose());
        default:
            throw PreconditionError("party must be 1, 2 or 3, got " + std::to_string(party));
    }
}

Complex overlap(const PureState& a, const PureState& b) {
    if (a.n() != b.n()) {
        throw ShapeError("overlap of states with n = " + std::to_string(a.n()) + " and n = " +
                         std::to_string(b.n()));
    }
    Complex total(0.0, 0.0);
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        total += std::conj(x[i]) * y[i];
    }
    return total;
}

double fidelity(const PureState& a, const PureState& b) {
    return std::norm(overlap(a, b)) / (a.norm_squared() * b.norm_squared());
}

}  // namespace slocc
