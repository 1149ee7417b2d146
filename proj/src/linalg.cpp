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

#include "slocc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "slocc/errors.hpp"

namespace slocc {

namespace {

constexpr int kMaxSamplingAttempts = 10000;

}  // namespace

void require_finite(const ComplexMatrix& m, const char* what) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const Complex z = m(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw InvalidInput(std::string(what) + " has a non-finite entry");
            }
        }
    }
}

Svd svd(const ComplexMatrix& m) {
    require_finite(m);
    Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return {solver.singularValues(), solver.matrixU(), solver.matrixV()};
}

RealVector singular_values(const ComplexMatrix& m) {
    require_finite(m);
    if (m.size() == 0) {
        return RealVector();
    }
    return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
}

double rank_threshold(const RealVector& sv, const Tolerances& tol) {
    const double top = sv.size() > 0 ? sv(0) : 0.0;
    return std::max(tol.rank_rel * top, tol.rank_abs);
}

int numerical_rank(const ComplexMatrix& m, const Tolerances& tol) {
    const RealVector sv = singular_values(m);
    const double threshold = rank_threshold(sv, tol);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) {
            ++rank;
        }
    }
    return rank;
}

Complex det(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw ShapeError("det of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " matrix");
    }
    require_finite(m);
    if (m.rows() == 0) {
        return {1.0, 0.0};
    }
    return m.partialPivLu().determinant();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double condition_number(const ComplexMatrix& m) {
    const RealVector sv = singular_values(m);
    if (sv.size() == 0) {
        return 1.0;
    }
    const double smallest = sv(sv.size() - 1);
    if (smallest == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return sv(0) / smallest;
}

ComplexMatrix random_gaussian(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

ComplexMatrix random_sl(int k, std::mt19937_64& rng, double condition_cap) {
    if (k < 1) {
        throw PreconditionError("random_sl needs k >= 1");
    }
    if (!(condition_cap > 1.0)) {
        throw PreconditionError("random_sl needs condition_cap > 1");
    }
    for (int attempt = 0; attempt < kMaxSamplingAttempts; ++attempt) {
        ComplexMatrix m = random_gaussian(k, k, rng);
        const Complex d = det(m);
        if (std::abs(d) == 0.0) {
            continue;
        }
        m /= std::pow(d, 1.0 / k);
        if (condition_number(m) <= condition_cap) {
            return m;
        }
    }
    throw SamplingError("random_sl: no sample with condition number <= " +
                        std::to_string(condition_cap) + " after " +
                        std::to_string(kMaxSamplingAttempts) + " attempts");
}

ComplexMatrix random_sl(int k, std::uint64_t seed, double condition_cap) {
    std::mt19937_64 rng(seed);
    return random_sl(k, rng, condition_cap);
}

}  // namespace slocc
