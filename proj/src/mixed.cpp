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

#include "slocc/mixed.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "slocc/errors.hpp"
#include "slocc/invariants.hpp"
#include "slocc/orbits.hpp"

namespace slocc {

namespace {

constexpr double kWeightTolerance = 1e-10;
constexpr double kLemmaSlack = 1e-9;

double spectrum_distance(const RealVector& a, const RealVector& b) {
    return (a - b).norm();
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return out;
}

}  // namespace

std::string_view to_string(MixedClass c) {
    switch (c) {
        case MixedClass::S: return "S";
        case MixedClass::Biseparable: return "Biseparable";
        case MixedClass::W: return "W";
        case MixedClass::GHZ: return "GHZ";
        case MixedClass::MinorRank3: return "MinorRank3";
        case MixedClass::MajorRank3: return "MajorRank3";
        case MixedClass::Generic: return "Generic";
    }
    return "?";
}

std::optional<MixedClass> parse_mixed_class(std::string_view name) {
    const std::string key = lowercase(name);
    for (MixedClass c : kAllMixedClasses) {
        if (lowercase(to_string(c)) == key) {
            return c;
        }
    }
    return std::nullopt;
}

MixedClass level(SloccClass c) {
    switch (c) {
        case SloccClass::Generic: return MixedClass::Generic;
        case SloccClass::MajorRank3: return MixedClass::MajorRank3;
        case SloccClass::MinorRank3: return MixedClass::MinorRank3;
        case SloccClass::GHZ: return MixedClass::GHZ;
        case SloccClass::W: return MixedClass::W;
        case SloccClass::B1:
        case SloccClass::B2:
        case SloccClass::B3: return MixedClass::Biseparable;
        case SloccClass::S: return MixedClass::S;
    }
    throw PreconditionError("unknown class");
}

MixedEnsemble::MixedEnsemble(std::vector<MixedComponent> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw InvalidInput("ensemble has no components");
    }
    double total = 0.0;
    for (const MixedComponent& c : components_) {
        if (!(c.weight > 0.0) || !std::isfinite(c.weight)) {
            throw InvalidInput("ensemble weights must be finite and > 0");
        }
        if (c.state.n() != components_.front().state.n()) {
            throw InvalidInput("ensemble components have different Clare dimensions");
        }
        total += c.weight;
    }
    if (std::abs(total - 1.0) > kWeightTolerance) {
        throw InvalidInput("ensemble weights sum to " + std::to_string(total) + ", expected 1");
    }
}

ComplexMatrix MixedEnsemble::density_matrix() const {
    const Eigen::Index dim = 4 * n();
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (const MixedComponent& c : components_) {
        const PureState psi = c.state.normalized();
        const auto amps = psi.amplitudes();
        const Eigen::Map<const ComplexVector> v(amps.data(), dim);
        rho += c.weight * v * v.adjoint();
    }
    return rho;
}

MixedReport mixed_class_of_decomposition(const MixedEnsemble& ensemble, const Tolerances& tol) {
    MixedReport report{MixedClass::S, {}};
    for (const MixedComponent& c : ensemble.components()) {
        const SloccClass cls = classify(c.state, tol).cls;
        report.component_classes.push_back(cls);
        report.cls = std::max(report.cls, level(cls));
    }
    return report;
}

LemmaReport lemma_bounds(const ComplexMatrix& a_in, const ComplexMatrix& b_in) {
    if (a_in.rows() != b_in.rows() || a_in.cols() != b_in.cols()) {
        throw ShapeError("lemma_bounds: matrices differ in shape");
    }
    require_finite(a_in, "A");
    require_finite(b_in, "B");
    const bool swap = a_in.norm() < b_in.norm();
    const ComplexMatrix& a = swap ? b_in : a_in;
    const ComplexMatrix& b = swap ? a_in : b_in;

    LemmaReport r;
    r.distance = (a - b).norm();
    r.bound_sv = spectrum_distance(singular_values(a), singular_values(b));
    const double norm_a = a.norm();
    const double prefactor = norm_a / (2.0 * (1.0 + norm_a));
    r.bound_tau = prefactor * spectrum_distance(singular_values(a.transpose() * a),
                                                singular_values(b.transpose() * b));
    r.holds = r.distance >= r.bound_sv - kLemmaSlack && r.distance >= r.bound_tau - kLemmaSlack;
    return r;
}

double class_separation_evidence(SloccClass a, SloccClass b, int samples, std::uint64_t seed) {
    const TableRow ra = table_row(a);
    const TableRow rb = table_row(b);
    if (ra.rank_R == rb.rank_R && ra.rank_RTR == rb.rank_RTR) {
        std::string why = "classes " + std::string(to_string(a)) + " and " + std::string(to_string(b)) +
                          " share (rank R, rank R^T R) = (" + std::to_string(ra.rank_R) + "," +
                          std::to_string(ra.rank_RTR) + ")";
        if (ra.r1 != rb.r1) {
            why += "; they are separated by the local rank r1 (" + std::to_string(ra.r1) + " vs " +
                   std::to_string(rb.r1) + "), not by the R-matrix bounds";
        }
        throw PreconditionError(why);
    }
    if (samples < 1) {
        throw PreconditionError("class_separation_evidence needs at least one sample");
    }
    double smallest = std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        const std::uint64_t s = seed + 2 * static_cast<std::uint64_t>(k);
        const ComplexMatrix r_a = r_matrix(random_orbit_sample(a, s).normalized());
        const ComplexMatrix r_b = r_matrix(random_orbit_sample(b, s + 1).normalized());
        const LemmaReport rep = lemma_bounds(r_a, r_b);
        smallest = std::min(smallest, std::max(rep.bound_sv, rep.bound_tau));
    }
    return smallest;
}

}  // namespace slocc
