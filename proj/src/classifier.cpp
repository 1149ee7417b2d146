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

#include "slocc/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace slocc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ClassInfo {
    SloccClass cls;
    std::string_view name;
    TableRow row;
    LocalRanks ranks;
};

constexpr std::array<ClassInfo, 9> kClassInfo = {{
    {SloccClass::Generic, "Generic", {4, 4, 2}, {2, 2, 4}},
    {SloccClass::MajorRank3, "MajorRank3", {3, 3, 2}, {2, 2, 3}},
    {SloccClass::MinorRank3, "MinorRank3", {3, 2, 2}, {2, 2, 3}},
    {SloccClass::GHZ, "GHZ", {2, 2, 2}, {2, 2, 2}},
    {SloccClass::W, "W", {2, 1, 2}, {2, 2, 2}},
    {SloccClass::B1, "B1", {2, 0, 1}, {1, 2, 2}},
    {SloccClass::B2, "B2", {2, 0, 2}, {2, 1, 2}},
    {SloccClass::B3, "B3", {1, 1, 2}, {2, 2, 1}},
    {SloccClass::S, "S", {1, 0, 1}, {1, 1, 1}},
}};

const ClassInfo& info(SloccClass c) { return kClassInfo[static_cast<std::size_t>(c)]; }

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return out;
}

DecisionMargin rank_margin(std::string quantity, const ComplexMatrix& m, const Tolerances& tol) {
    const RealVector sv = singular_values(m);
    DecisionMargin d;
    d.quantity = std::move(quantity);
    d.threshold = rank_threshold(sv, tol);
    double above = kInf;
    double below = -1.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > d.threshold) {
            above = std::min(above, sv(i));
        } else {
            below = std::max(below, sv(i));
        }
    }
    const double upper = above == kInf ? kInf : std::log10(above / d.threshold);
    const double lower_side = below < 0.0 ? kInf : (below == 0.0 ? kInf : std::log10(d.threshold / below));
    d.smallest_above = above == kInf ? 0.0 : above;
    d.largest_below = below < 0.0 ? 0.0 : below;
    d.margin_decades = std::min(upper, lower_side);
    return d;
}

DecisionMargin zero_margin(std::string quantity, double value, double threshold) {
    DecisionMargin d;
    d.quantity = std::move(quantity);
    d.threshold = threshold;
    if (value > threshold) {
        d.smallest_above = value;
        d.margin_decades = std::log10(value / threshold);
    } else {
        d.largest_below = value;
        d.margin_decades = value == 0.0 ? kInf : std::log10(threshold / value);
    }
    return d;
}

}  // namespace

std::string_view to_string(SloccClass c) { return info(c).name; }

std::optional<SloccClass> parse_slocc_class(std::string_view name) {
    const std::string key = lower(name);
    for (const ClassInfo& ci : kClassInfo) {
        if (lower(ci.name) == key) {
            return ci.cls;
        }
    }
    if (key == "major") {
        return SloccClass::MajorRank3;
    }
    if (key == "minor") {
        return SloccClass::MinorRank3;
    }
    return std::nullopt;
}

TableRow table_row(SloccClass c) { return info(c).row; }

std::optional<SloccClass> class_from_table(TableRow row) {
    for (const ClassInfo& ci : kClassInfo) {
        if (ci.row == row) {
            return ci.cls;
        }
    }
    return std::nullopt;
}

LocalRanks expected_local_ranks(SloccClass c) { return info(c).ranks; }

std::string_view to_string(ClassificationMethod m) {
    switch (m) {
        case ClassificationMethod::RankTable:
            return "rank-table";
        case ClassificationMethod::HyperdetRecursive:
            return "hyperdet-recursive";
        case ClassificationMethod::CrossChecked:
            return "cross-checked";
    }
    return "unknown";
}

bool ClassificationReport::confident() const {
    return std::all_of(margins.begin(), margins.end(), [](const DecisionMargin& d) { return d.margin_decades > 0.0; });
}

ClassifierDisagreement::ClassifierDisagreement(ClassificationReport by_ranks, ClassificationReport by_hyperdets)
    : Error("classifiers disagree: rank table says " + std::string(to_string(by_ranks.cls)) +
            ", hyperdeterminant criterion says " + std::string(to_string(by_hyperdets.cls))),
      by_ranks_(std::move(by_ranks)),
      by_hyperdets_(std::move(by_hyperdets)) {}

ClassificationReport classify_by_ranks(const PureState& state, const Tolerances& tol) {
    const PureState psi = clare_normal_support(state.normalized());
    const ComplexMatrix r = r_matrix(psi);
    const ComplexMatrix rtr = r.transpose() * r;
    const ComplexMatrix rho1 = reduced_density(psi, 1);

    ClassificationReport report;
    report.method = ClassificationMethod::RankTable;
    report.margins = {rank_margin("R", r, tol), rank_margin("R^T R", rtr, tol), rank_margin("rho1", rho1, tol)};
    const TableRow row{numerical_rank(r, tol), numerical_rank(rtr, tol), numerical_rank(rho1, tol)};
    const auto cls = class_from_table(row);
    if (!cls) {
        throw AmbiguousClassification("rank triple (" + std::to_string(row.rank_R) + "," +
                                          std::to_string(row.rank_RTR) + "," + std::to_string(row.r1) +
                                          ") is not in the classification table",
                                      report.margins);
    }
    report.cls = *cls;
    report.signature = compute_signature(psi, tol);
    return report;
}

ClassificationReport classify_by_hyperdets(const PureState& state, const Tolerances& tol) {
    const PureState psi = state.normalized();
    const LocalRanks ranks = local_ranks(psi, tol);

    ClassificationReport report;
    report.method = ClassificationMethod::HyperdetRecursive;
    for (int party = 1; party <= 3; ++party) {
        report.margins.push_back(
            rank_margin("rho" + std::to_string(party), reduced_density(psi, party), tol));
    }

    const auto triple = [&](int a, int b, int c) { return ranks == LocalRanks{a, b, c}; };
    if ((triple(2, 2, 3) || triple(2, 2, 2)) && numerical_rank(flatten(psi), tol) != ranks.r3) {
        // rho_3 squares the singular values of Psi~, so the two rank tests can
        // split on a component lying between the thresholds.
        report.margins.push_back(rank_margin("Psi~", flatten(psi), tol));
        throw AmbiguousClassification("Clare's rank is " + std::to_string(numerical_rank(flatten(psi), tol)) +
                                          " for Psi~ but " + std::to_string(ranks.r3) + " for rho3",
                                      report.margins);
    }
    if (triple(2, 2, 4)) {
        report.cls = SloccClass::Generic;
    } else if (triple(2, 2, 3)) {
        const double ratio = balanced_hyperdet_ratio(psi, 3, tol);
        report.margins.push_back(zero_margin("balanced |Det 2x2x3|", ratio, tol.poly_zero));
        report.cls = ratio > tol.poly_zero ? SloccClass::MajorRank3 : SloccClass::MinorRank3;
    } else if (triple(2, 2, 2)) {
        const double ratio = balanced_hyperdet_ratio(psi, 2, tol);
        report.margins.push_back(zero_margin("balanced |Det 2x2x2|", ratio, tol.poly_zero));
        report.cls = ratio > tol.poly_zero ? SloccClass::GHZ : SloccClass::W;
    } else if (triple(1, 2, 2)) {
        report.cls = SloccClass::B1;
    } else if (triple(2, 1, 2)) {
        report.cls = SloccClass::B2;
    } else if (triple(2, 2, 1)) {
        report.cls = SloccClass::B3;
    } else if (triple(1, 1, 1)) {
        report.cls = SloccClass::S;
    } else {
        throw InvalidState("local ranks (" + std::to_string(ranks.r1) + "," + std::to_string(ranks.r2) + "," +
                           std::to_string(ranks.r3) + ") are impossible for a 2x2xn pure state");
    }
    report.signature = compute_signature(psi, tol);
    return report;
}

ClassificationReport classify(const PureState& state, const Tolerances& tol) {
    ClassificationReport by_ranks = classify_by_ranks(state, tol);
    ClassificationReport by_hyperdets = classify_by_hyperdets(state, tol);
    if (by_ranks.cls != by_hyperdets.cls) {
        throw ClassifierDisagreement(std::move(by_ranks), std::move(by_hyperdets));
    }
    ClassificationReport out = std::move(by_ranks);
    out.method = ClassificationMethod::CrossChecked;
    out.margins.insert(out.margins.end(), by_hyperdets.margins.begin(), by_hyperdets.margins.end());
    return out;
}

}  // namespace slocc
