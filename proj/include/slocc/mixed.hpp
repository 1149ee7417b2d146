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
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "slocc/classifier.hpp"
#include "slocc/linalg.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// Totally ordered convex classes; the three biseparable classes merge.
enum class MixedClass { S, Biseparable, W, GHZ, MinorRank3, MajorRank3, Generic };

inline constexpr std::array<MixedClass, 7> kAllMixedClasses = {
    MixedClass::S,          MixedClass::Biseparable, MixedClass::W,      MixedClass::GHZ,
    MixedClass::MinorRank3, MixedClass::MajorRank3,  MixedClass::Generic};

std::string_view to_string(MixedClass c);
std::optional<MixedClass> parse_mixed_class(std::string_view name);

MixedClass level(SloccClass c);

struct MixedComponent {
    double weight;
    PureState state;
};

/// A pure-state decomposition rho = sum_i p_i |psi_i><psi_i|.
class MixedEnsemble {
public:
    /// Throws InvalidInput unless nonempty, every weight > 0, weights sum to 1
    /// within 1e-10, and every state has the same n.
    explicit MixedEnsemble(std::vector<MixedComponent> components);

    const std::vector<MixedComponent>& components() const { return components_; }
    int n() const { return components_.front().state.n(); }

    /// rho built from the normalized components.
    ComplexMatrix density_matrix() const;

private:
    std::vector<MixedComponent> components_;
};

struct MixedReport {
    MixedClass cls;
    std::vector<SloccClass> component_classes;
};

/// Highest level present among the components. This is an upper bound on the
/// class of rho: other decompositions may reach a lower level.
MixedReport mixed_class_of_decomposition(const MixedEnsemble& ensemble, const Tolerances& tol = {});

struct LemmaReport {
    double distance = 0.0;
    double bound_sv = 0.0;
    double bound_tau = 0.0;
    bool holds = true;
};

/// Hilbert-Schmidt distance ||A - B|| against the singular-value bound and the
/// bound on the singular values of A^T A, B^T B (plain transpose). A and B are
/// swapped so that ||A|| >= ||B||.
LemmaReport lemma_bounds(const ComplexMatrix& a, const ComplexMatrix& b);

/// Smallest Lemma lower bound max(bound_sv, bound_tau) between R-matrices of
/// `samples` pairs of normalized orbit samples of the two classes. Throws
/// PreconditionError when the classes share (rank R, rank R^T R).
double class_separation_evidence(SloccClass a, SloccClass b, int samples, std::uint64_t seed = 0);

}  // namespace slocc
