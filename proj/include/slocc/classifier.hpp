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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slocc/errors.hpp"
#include "slocc/invariants.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// The nine SLOCC classes of 2x2xn pure states, listed from the top of the
/// five-graded order downward.
enum class SloccClass {
    Generic,     // |000> + |011> + |102> + |113>
    MajorRank3,  // |000> + (|011> + |101>)/sqrt2 + |112>
    MinorRank3,  // |000> + |011> + |112>
    GHZ,         // |000> + |111>
    W,           // |001> + |010> + |100>
    B1,          // |000> + |011>   (Bob-Clare entangled)
    B2,          // |000> + |101>   (Alice-Clare entangled)
    B3,          // |000> + |110>   (Alice-Bob entangled)
    S,           // |000>
};

inline constexpr std::array<SloccClass, 9> kAllClasses = {
    SloccClass::Generic, SloccClass::MajorRank3, SloccClass::MinorRank3, SloccClass::GHZ, SloccClass::W,
    SloccClass::B1,      SloccClass::B2,         SloccClass::B3,         SloccClass::S,
};

std::string_view to_string(SloccClass c);

/// Accepts the canonical names ("Generic", "MajorRank3", "GHZ", ...) and the
/// short aliases "Major" / "Minor". Case-insensitive.
std::optional<SloccClass> parse_slocc_class(std::string_view name);

/// (rank R, rank R^T R, r1) as listed in the classification table.
struct TableRow {
    int rank_R;
    int rank_RTR;
    int r1;

    bool operator==(const TableRow&) const = default;
};

TableRow table_row(SloccClass c);

/// Inverse of table_row; nullopt for triples not in the table.
std::optional<SloccClass> class_from_table(TableRow row);

/// Local ranks (r1, r2, r3) of each class in the 2x2x4 picture.
LocalRanks expected_local_ranks(SloccClass c);

enum class ClassificationMethod { RankTable, HyperdetRecursive, CrossChecked };

std::string_view to_string(ClassificationMethod m);

/// Distance of one numerical decision from its threshold. `margin_decades` is
/// min(log10(smallest_above / threshold), log10(threshold / largest_below)),
/// +infinity for a side with no values; positive means the decision is
/// clear of the threshold.
struct DecisionMargin {
    std::string quantity;
    double threshold = 0.0;
    double smallest_above = 0.0;  // 0 when nothing lies above
    double largest_below = 0.0;   // 0 when nothing lies below
    double margin_decades = 0.0;
};

struct ClassificationReport {
    SloccClass cls = SloccClass::S;
    InvariantSignature signature;
    ClassificationMethod method = ClassificationMethod::RankTable;
    std::vector<DecisionMargin> margins;

    bool confident() const;
};

/// The rank triple did not match any row of the table.
class AmbiguousClassification : public Error {
   public:
    AmbiguousClassification(const std::string& what, std::vector<DecisionMargin> margins)
        : Error(what), margins_(std::move(margins)) {}
    const std::vector<DecisionMargin>& margins() const { return margins_; }

   private:
    std::vector<DecisionMargin> margins_;
};

/// The two classifiers returned different classes.
class ClassifierDisagreement : public Error {
   public:
    ClassifierDisagreement(ClassificationReport by_ranks, ClassificationReport by_hyperdets);
    const ClassificationReport& by_ranks() const { return by_ranks_; }
    const ClassificationReport& by_hyperdets() const { return by_hyperdets_; }

   private:
    ClassificationReport by_ranks_;
    ClassificationReport by_hyperdets_;
};

/// Table lookup on (rank R, rank R^T R, r1).
ClassificationReport classify_by_ranks(const PureState& state, const Tolerances& tol = {});

/// Recursive criterion: local ranks first, then the 2x2x3 or 2x2x2
/// hyperdeterminant for the (2,2,3) and (2,2,2) cases.
ClassificationReport classify_by_hyperdets(const PureState& state, const Tolerances& tol = {});

/// Runs both classifiers and insists they agree.
ClassificationReport classify(const PureState& state, const Tolerances& tol = {});

}  // namespace slocc
