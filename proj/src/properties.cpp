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

#include "slocc/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "slocc/errors.hpp"
#include "slocc/invariants.hpp"
#include "slocc/mixed.hpp"
#include "slocc/preparation.hpp"

namespace slocc {

namespace {

constexpr double kInvarianceRelTol = 1e-8;
constexpr double kCompletenessTol = 1e-10;
constexpr double kFidelityTol = 1e-9;
constexpr double kProbabilityTol = 1e-10;
constexpr double kTwirlTol = 1e-10;
constexpr double kImageFloor = 1e-3;

ComplexMatrix rank_deficient(int k, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(1, k - 1);
    const int r = pick(rng);
    return random_gaussian(k, r, rng) * random_gaussian(r, k, rng);
}

// |det224| is a degree-4 polynomial; a vanishing value is compared against ||psi||^4.
bool det_preserved(const PureState& before, const PureState& after) {
    const double a = std::abs(det224(before));
    const double b = std::abs(det224(after));
    const double scale = std::max({a, b, std::pow(after.norm(), 4) * 1e-6});
    return std::abs(a - b) <= kInvarianceRelTol * scale;
}

SloccClass class_of_trial(int t) { return kAllClasses[static_cast<std::size_t>(t) % kAllClasses.size()]; }

// Runs `trial` for each index; a trial returns false or throws to fail.
PropertyResult run(const std::string& name, int trials, const std::function<bool(int)>& trial) {
    PropertyResult r{name, true, trials, 0, {}};
    for (int t = 0; t < trials; ++t) {
        bool ok = false;
        try {
            ok = trial(t);
        } catch (const Error& e) {
            if (r.detail.empty()) {
                r.detail = std::string("trial ") + std::to_string(t) + ": " + e.what();
            }
        }
        if (!ok) {
            ++r.failures;
            if (r.detail.empty()) {
                r.detail = "first failing trial " + std::to_string(t);
            }
        }
    }
    r.passed = r.failures == 0;
    return r;
}

}  // namespace

PureState random_gaussian_state(int n, std::mt19937_64& rng) {
    const ComplexMatrix m = random_gaussian(4, n, rng);
    return unflatten(m);
}

PureState random_dual_pattern_state(std::mt19937_64& rng) {
    ComplexMatrix m = random_gaussian(4, 4, rng);
    m(0, 0) = m(2, 0) = m(1, 0) = 0.0;  // psi_000, psi_100, psi_010
    m(0, 1) = m(0, 2) = m(0, 3) = 0.0;  // psi_001, psi_002, psi_003
    return unflatten(m);
}

LocalOp random_noninvertible_op(const PureState& state, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> mask(1, 7);
    const ComplexMatrix psi = flatten(state);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int deficient = mask(rng);
        LocalOp op;
        op.m1 = (deficient & 1) ? rank_deficient(2, rng) : random_gaussian(2, 2, rng);
        op.m2 = (deficient & 2) ? rank_deficient(2, rng) : random_gaussian(2, 2, rng);
        op.m3 = (deficient & 4) ? rank_deficient(state.n(), rng) : random_gaussian(state.n(), state.n(), rng);
        if (state.n() == 1 && (deficient & 4)) {
            continue;
        }
        const double scale = op.m1.norm() * op.m2.norm() * op.m3.norm() * psi.norm();
        const double image = (kron(op.m1, op.m2) * psi * op.m3.transpose()).norm();
        if (image >= kImageFloor * scale) {
            return op;
        }
    }
    throw SamplingError("random_noninvertible_op: every draw annihilated the state");
}

std::vector<PropertyResult> run_property_suites(int trials, std::uint64_t seed) {
    if (trials < 1) {
        throw PreconditionError("verify-suite needs at least one trial");
    }
    std::mt19937_64 rng(seed);
    std::vector<PropertyResult> out;

    out.push_back(run("table reproduction", static_cast<int>(kAllClasses.size()), [&](int t) {
        const SloccClass c = class_of_trial(t);
        const PureState rep = representative(c);
        const RankPair rp = rank_pair(rep);
        return TableRow{rp.rank_R, rp.rank_RTR, local_ranks(rep).r1} == table_row(c) &&
               local_ranks(rep) == expected_local_ranks(c);
    }));

    out.push_back(run("classifier agreement", trials, [&](int t) {
        const PureState psi = (t % 10 == 9) ? random_gaussian_state(4, rng)
                                            : random_orbit_sample(class_of_trial(t), seed + 1000003ULL * t);
        return classify_by_ranks(psi).cls == classify_by_hyperdets(psi).cls;
    }));

    out.push_back(run("SLOCC invariance", trials, [&](int t) {
        const SloccClass c = class_of_trial(t);
        const PureState rep = representative(c);
        const PureState moved = apply_local(rep, random_invertible_op(4, rng));
        return classify(moved).cls == c && det_preserved(rep, moved);
    }));

    out.push_back(run("scale invariance", trials, [&](int t) {
        const PureState psi = random_orbit_sample(class_of_trial(t), seed + 7919ULL * t);
        std::uniform_real_distribution<double> exponent(-6.0, 6.0);
        std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
        const Complex factor = std::polar(std::pow(10.0, exponent(rng)), phase(rng));
        return classify(psi.scaled(factor)).cls == classify(psi).cls;
    }));

    out.push_back(run("conversion witnesses", static_cast<int>(kAllClasses.size() * kAllClasses.size()), [&](int t) {
        const SloccClass from = kAllClasses[static_cast<std::size_t>(t) / kAllClasses.size()];
        const SloccClass to = kAllClasses[static_cast<std::size_t>(t) % kAllClasses.size()];
        const auto w = conversion_witness(from, to);
        if (!w) {
            return true;
        }
        return classify(apply_local(representative(from), w->witness)).cls == to && necessary_condition(from, to);
    }));

    out.push_back(run("rank monotonicity", trials, [&](int t) {
        const PureState psi = (t % 10 == 9) ? random_gaussian_state(4, rng)
                                            : random_orbit_sample(class_of_trial(t), seed + 104729ULL * t);
        const PureState image = apply_local(psi, random_noninvertible_op(psi, rng)).normalized();
        const RankPair before = rank_pair(psi.normalized());
        const RankPair after = rank_pair(image);
        const LocalRanks lb = local_ranks(psi.normalized());
        const LocalRanks la = local_ranks(image);
        return after.rank_R <= before.rank_R && after.rank_RTR <= before.rank_RTR && la.r1 <= lb.r1 &&
               la.r2 <= lb.r2 && la.r3 <= lb.r3;
    }));

    out.push_back(run("Pauli twirl", trials, [&](int) {
        const ComplexMatrix x = random_gaussian(4, 4, rng);
        const ComplexMatrix expected = x.trace() / 4.0 * ComplexMatrix::Identity(4, 4);
        return (pauli_twirl(x) - expected).norm() <= kTwirlTol * std::max(1.0, x.norm());
    }));

    out.push_back(run("preparation", trials, [&](int t) {
        const PureState target = random_orbit_sample(class_of_trial(t), seed + 15485863ULL * t).normalized();
        const PovmVerification v = verify_povm(build_povm(target), target);
        return v.completeness_residual <= kCompletenessTol && v.min_branch_fidelity >= 1.0 - kFidelityTol &&
               std::abs(v.probability_sum - 1.0) <= kProbabilityTol;
    }));

    out.push_back(run("Lemma bounds", trials, [&](int t) {
        ComplexMatrix a = random_gaussian(4, 4, rng);
        ComplexMatrix b = (t % 3 == 0) ? rank_deficient(4, rng) : random_gaussian(4, 4, rng);
        if (t % 5 == 0) {
            b = a + 1e-3 * random_gaussian(4, 4, rng);
        }
        // The second bound is a statement about the unit ball.
        a /= std::max(1.0, a.norm());
        b /= std::max(1.0, b.norm());
        return lemma_bounds(a, b).holds;
    }));

    out.push_back(run("dual pattern", trials, [&](int) {
        const PureState psi = random_dual_pattern_state(rng);
        return dual_tangency_at_origin(psi) && classify(psi).cls == SloccClass::MinorRank3;
    }));

    out.push_back(run("generic fullness", trials, [&](int) {
        return classify(random_gaussian_state(4, rng)).cls == SloccClass::Generic;
    }));

    out.push_back(run("mixed monotonicity", trials, [&](int t) {
        const SloccClass a = class_of_trial(t);
        const SloccClass b = class_of_trial(t * 7 + 3);
        const MixedEnsemble one({{1.0, representative(a)}});
        const MixedEnsemble two({{0.5, representative(a)}, {0.5, representative(b)}});
        const MixedClass la = mixed_class_of_decomposition(one).cls;
        const MixedClass lab = mixed_class_of_decomposition(two).cls;
        return lab >= la && (!dominates(a, b) || level(a) >= level(b));
    }));

    out.push_back(run("hyperdeterminant formats", 1, [&](int) {
        const std::array<int, 3> f222{2, 2, 2}, f223{2, 2, 3}, f224{2, 2, 4}, f225{2, 2, 5};
        return admits_hyperdeterminant(f222) && admits_hyperdeterminant(f223) && !admits_hyperdeterminant(f224) &&
               !admits_hyperdeterminant(f225);
    }));

    return out;
}

}  // namespace slocc
