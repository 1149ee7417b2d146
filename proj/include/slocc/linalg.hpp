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

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace slocc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds shared by every rank and zero decision.
///
/// A singular value counts toward the rank when it exceeds
/// max(rank_rel * sigma_max, rank_abs). A homogeneous polynomial invariant
/// of degree d is declared zero when |value| <= poly_zero * ||psi||^d.
struct Tolerances {
    double rank_rel = 1e-9;
    double rank_abs = 1e-12;
    double poly_zero = 1e-8;
};

struct Svd {
    RealVector singular_values;  // descending
    ComplexMatrix left;
    ComplexMatrix right;
};

/// Throws InvalidInput when any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const char* what = "matrix");

Svd svd(const ComplexMatrix& m);
RealVector singular_values(const ComplexMatrix& m);

/// Number of singular values above max(tol.rank_rel * sigma_max, tol.rank_abs).
int numerical_rank(const ComplexMatrix& m, const Tolerances& tol = {});

/// Rank threshold actually applied to `m` (useful for reporting margins).
double rank_threshold(const RealVector& singular_values, const Tolerances& tol = {});

Complex det(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// sigma_max / sigma_min; infinity for singular input.
double condition_number(const ComplexMatrix& m);

/// Samples a k x k complex matrix with unit determinant and condition number at
/// most `condition_cap`. Entries are i.i.d. complex standard normal, rescaled by
/// the principal k-th root of the determinant. Deterministic for a fixed seed.
ComplexMatrix random_sl(int k, std::uint64_t seed, double condition_cap = 100.0);

ComplexMatrix random_sl(int k, std::mt19937_64& rng, double condition_cap = 100.0);

/// Matrix of i.i.d. complex standard normal entries (E|z|^2 = 1).
ComplexMatrix random_gaussian(int rows, int cols, std::mt19937_64& rng);

}  // namespace slocc
