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

#include <gtest/gtest.h>

#include "slocc/linalg.hpp"
#include "slocc/state.hpp"

namespace slocc::testing {

inline ::testing::AssertionResult MatrixNear(const ComplexMatrix& actual, const ComplexMatrix& expected, double tol) {
    if (actual.rows() != expected.rows() || actual.cols() != expected.cols()) {
        return ::testing::AssertionFailure() << "shape " << actual.rows() << "x" << actual.cols() << " vs "
                                             << expected.rows() << "x" << expected.cols();
    }
    const double diff = (actual - expected).norm();
    if (diff <= tol) {
        return ::testing::AssertionSuccess();
    }
    return ::testing::AssertionFailure() << "Frobenius distance " << diff << " > " << tol << "\nactual:\n"
                                         << actual << "\nexpected:\n"
                                         << expected;
}

inline ComplexMatrix Diag(std::initializer_list<Complex> d) {
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (Complex v : d) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

inline PureState Ghz(int n = 2) { return PureState::from_terms(n, {{{0, 0, 0}, 1.0}, {{1, 1, 1}, 1.0}}); }

inline PureState WState(int n = 2) {
    return PureState::from_terms(n, {{{0, 0, 1}, 1.0}, {{0, 1, 0}, 1.0}, {{1, 0, 0}, 1.0}});
}

inline PureState TwoBellPairs() {
    return PureState::from_terms(4, {{{0, 0, 0}, 1.0}, {{0, 1, 1}, 1.0}, {{1, 0, 2}, 1.0}, {{1, 1, 3}, 1.0}});
}

}  // namespace slocc::testing
