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

#include "slocc/orbits.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <sstream>

#include "slocc/errors.hpp"
#include "slocc/invariants.hpp"

namespace slocc {

namespace {

constexpr double kMaxEntangledTolerance = 1e-8;
constexpr double kTangencyTolerance = 1e-9;
constexpr int kOrbitSampleAttempts = 16;

const double kS = 1.0 / std::sqrt(2.0);
const double kSqrt2 = std::sqrt(2.0);
const Complex kI(0.0, 1.0);

ComplexMatrix rows(std::initializer_list<std::initializer_list<Complex>> entries) {
    const auto r = static_cast<Eigen::Index>(entries.size());
    const auto c = static_cast<Eigen::Index>(entries.begin()->size());
    ComplexMatrix m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : entries) {
        Eigen::Index j = 0;
        for (const Complex& v : row) {
            m(i, j++) = v;
        }
        ++i;
    }
    return m;
}

// Matrix whose j-th column is the image of basis vector j.
ComplexMatrix columns(std::initializer_list<std::initializer_list<Complex>> images) {
    return rows(images).transpose();
}

ComplexMatrix diag(std::initializer_list<Complex> d) {
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (const Complex& v : d) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

const ComplexMatrix kPauliX = rows({{0.0, 1.0}, {1.0, 0.0}});
const ComplexMatrix kKeepZero2 = diag({1.0, 0.0});
const ComplexMatrix kPlusProjector2 = rows({{0.5, 0.5}, {0.5, 0.5}});
// Invertible; sends |0> + |1> to |0>.
const ComplexMatrix kCollapsePlus2 = columns({{1.0, -1.0}, {0.0, 1.0}});

ComplexMatrix clare_swap01() { return columns({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}); }

PureState representative_ket(SloccClass c) {
    switch (c) {
        case SloccClass::Generic:
            return PureState::from_terms(4, {{{0, 0, 0}, 1.0}, {{0, 1, 1}, 1.0}, {{1, 0, 2}, 1.0}, {{1, 1, 3}, 1.0}});
        case SloccClass::MajorRank3:
            return PureState::from_terms(4, {{{0, 0, 0}, 1.0}, {{0, 1, 1}, kS}, {{1, 0, 1}, kS}, {{1, 1, 2}, 1.0}});
        case SloccClass::MinorRank3:
            return PureState::from_terms(4, {{{0, 0, 0}, 1.0}, {{0, 1, 1}, 1.0}, {{1, 1, 2}, 1.0}});
        case SloccClass::GHZ:
            return PureState::from_terms(4, {{{0, 0, 0}, 1.0}, {{1, 1, 1}, 1.0}});
        case SloccClass::W:
            return PureState::from_terms(4, {{{0, 0, 1}, 1.0}, {{0, 1, 0}, 1.0}, {{1, 0, 0}, 1.0}});
        case SloccClass::B1:
            return PureState::from_terms(4, {{{0, 0, 0}, 1.0}, {{0, 1, 1}, 1.0}});
        case SloccClass::B2:
            return PureState::from_terms(4, {{{0, 0, 0}, 1.0}, {{1, 0, 1}, 1.0}});
        case SloccClass::B3:
            return PureState::from_terms(4, {{{0, 0, 0}, 1.0}, {{1, 1, 0}, 1.0}});
        case SloccClass::S:
            return PureState::from_terms(4, {{{0, 0, 0}, 1.0}});
    }
    throw PreconditionError("unknown class");
}

OrderEdge make_edge(SloccClass from, SloccClass to, std::string kind, std::vector<WitnessStep> steps) {
    LocalOp combined = LocalOp::identity(4);
    for (const WitnessStep& s : steps) {
        combined = compose(combined, s.op);
    }
    return {from, to, std::move(combined), std::move(kind), std::move(steps)};
}

std::vector<OrderEdge> build_catalog() {
    using C = SloccClass;
    const auto clare = [](ComplexMatrix m) { return LocalOp::on_clare(std::move(m)); };
    const auto alice = [](ComplexMatrix m) { return LocalOp::on_alice(std::move(m), 4); };
    const auto bob = [](ComplexMatrix m) { return LocalOp::on_bob(std::move(m), 4); };

    std::vector<OrderEdge> edges;

    // A rank-deficient Clare filter M3 = Psi~_target^T turns Psi~ = 1 into any rank-3 target.
    edges.push_back(make_edge(C::Generic, C::MajorRank3, "rank-deficient Clare filter",
                              {{clare(flatten(representative_ket(C::MajorRank3)).transpose()),
                                "Clare filter of rank 3 (M3 = Psi~_major^T)"}}));
    edges.push_back(make_edge(C::Generic, C::MinorRank3, "rank-deficient Clare filter",
                              {{clare(flatten(representative_ket(C::MinorRank3)).transpose()),
                                "Clare filter of rank 3 (M3 = Psi~_minor^T)"}}));

    edges.push_back(make_edge(
        C::MajorRank3, C::GHZ, "Clare projection",
        {{clare(diag({1, 0, 1, 0})), "Clare projection onto span{|0>,|2>}"},
         {clare(columns({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}})), "relabel Clare |2> -> |1>"}}));

    edges.push_back(make_edge(
        C::MajorRank3, C::W, "Clare POVM element",
        {{clare(rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, kI, 0, 0}, {0, 0, 0, 0}})),
          "Clare POVM element [[1,0,0,0],[0,1,0,0],[0,i,0,0],[0,0,0,0]]"},
         {clare(columns({{0, kS, 0, 0}, {1, 0, -kI, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})),
          "Clare |0> -> |1>/sqrt2, |1>+i|2> -> |0>"}}));

    const LocalOp to_normal_form = minor_to_normal_form();
    edges.push_back(make_edge(
        C::MinorRank3, C::GHZ, "Clare projection",
        {{to_normal_form, "invertible map onto the R-normal form of the minor class"},
         {clare(diag({0, 1, 1, 0})), "Clare projection onto span{|1>,|2>}"},
         {compose(bob(kPauliX), clare(columns({{0, 0, 1, 0},
                                               {kI * kS, kI * kS, 0, 0},
                                               {-kS, kS, 0, 0},
                                               {0, 0, 0, 1}}))),
          "Bob X; Clare -i|1>-|2> -> sqrt2|0>, -i|1>+|2> -> sqrt2|1>"}}));

    const Complex alpha = -kS * Complex(1.0, 1.0) / 2.0;
    const Complex beta = kS * Complex(1.0, -1.0) / 2.0;
    edges.push_back(make_edge(
        C::MinorRank3, C::W, "Clare projection",
        {{to_normal_form, "invertible map onto the R-normal form of the minor class"},
         {clare(rows({{1, 0, 0, 0}, {0, 0.5, 0.5, 0}, {0, 0.5, 0.5, 0}, {0, 0, 0, 0}})),
          "Clare projection onto span{|0>, |1>+|2>}"},
         {compose(compose(alice(diag({1.0, 1.0 / beta})), bob(diag({1.0, 1.0 / alpha}))),
                  clare(columns({{0, kS, 0, 0}, {1, 0, -1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}))),
          "diagonal Alice/Bob rescaling; Clare |0> -> |1>/sqrt2, |1>+|2> -> |0>"}}));

    const ComplexMatrix clare_plus = rows({{0.5, 0.5, 0, 0}, {0.5, 0.5, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    const ComplexMatrix clare_collapse_plus = columns({{1, -1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    edges.push_back(make_edge(C::GHZ, C::B1, "Alice projection",
                              {{alice(kPlusProjector2), "Alice projection onto |0>+|1>"},
                               {alice(kCollapsePlus2), "Alice |0>+|1> -> |0>"}}));
    edges.push_back(make_edge(C::GHZ, C::B2, "Bob projection",
                              {{bob(kPlusProjector2), "Bob projection onto |0>+|1>"},
                               {bob(kCollapsePlus2), "Bob |0>+|1> -> |0>"}}));
    edges.push_back(make_edge(C::GHZ, C::B3, "Clare projection",
                              {{clare(clare_plus), "Clare projection onto |0>+|1>"},
                               {clare(clare_collapse_plus), "Clare |0>+|1> -> |0>"}}));

    edges.push_back(make_edge(C::W, C::B1, "Alice projection",
                              {{alice(kKeepZero2), "Alice projection onto |0>"},
                               {clare(clare_swap01()), "Clare X on {|0>,|1>}"}}));
    edges.push_back(make_edge(C::W, C::B2, "Bob projection",
                              {{bob(kKeepZero2), "Bob projection onto |0>"},
                               {clare(clare_swap01()), "Clare X on {|0>,|1>}"}}));
    edges.push_back(make_edge(C::W, C::B3, "Clare projection",
                              {{clare(diag({1, 0, 0, 0})), "Clare projection onto |0>"},
                               {bob(kPauliX), "Bob X"}}));

    edges.push_back(make_edge(C::B1, C::S, "Bob projection", {{bob(kKeepZero2), "Bob projection onto |0>"}}));
    edges.push_back(make_edge(C::B2, C::S, "Alice projection", {{alice(kKeepZero2), "Alice projection onto |0>"}}));
    edges.push_back(make_edge(C::B3, C::S, "Alice projection", {{alice(kKeepZero2), "Alice projection onto |0>"}}));
    return edges;
}

std::vector<SloccClass> successors(SloccClass c) {
    std::vector<SloccClass> out;
    for (const OrderEdge& e : direct_edges()) {
        if (e.from == c) {
            out.push_back(e.to);
        }
    }
    return out;
}

}  // namespace

LocalOp LocalOp::identity(int n) {
    return {ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(n, n)};
}

LocalOp LocalOp::on_alice(ComplexMatrix m, int n) {
    LocalOp op = identity(n);
    op.m1 = std::move(m);
    return op;
}

LocalOp LocalOp::on_bob(ComplexMatrix m, int n) {
    LocalOp op = identity(n);
    op.m2 = std::move(m);
    return op;
}

LocalOp LocalOp::on_clare(ComplexMatrix m) {
    LocalOp op = identity(static_cast<int>(m.cols()));
    op.m3 = std::move(m);
    return op;
}

std::array<bool, 3> LocalOp::invertible(const Tolerances& tol) const {
    const auto full = [&](const ComplexMatrix& m) {
        return m.rows() == m.cols() && numerical_rank(m, tol) == m.rows();
    };
    return {full(m1), full(m2), full(m3)};
}

bool LocalOp::is_invertible(const Tolerances& tol) const {
    const auto flags = invertible(tol);
    return flags[0] && flags[1] && flags[2];
}

LocalOp compose(const LocalOp& first, const LocalOp& second) {
    if (second.m3.cols() != first.m3.rows()) {
        throw ShapeError("cannot compose Clare operators of incompatible sizes");
    }
    return {second.m1 * first.m1, second.m2 * first.m2, second.m3 * first.m3};
}

PureState apply_local(const PureState& state, const LocalOp& op) {
    if (op.m1.rows() != 2 || op.m1.cols() != 2 || op.m2.rows() != 2 || op.m2.cols() != 2) {
        throw ShapeError("Alice and Bob act with 2x2 matrices");
    }
    if (op.m3.cols() != state.n()) {
        throw ShapeError("Clare's operator has " + std::to_string(op.m3.cols()) + " columns but n = " +
                         std::to_string(state.n()));
    }
    require_finite(op.m1, "M1");
    require_finite(op.m2, "M2");
    require_finite(op.m3, "M3");
    return unflatten(kron(op.m1, op.m2) * flatten(state) * op.m3.transpose());
}

PureState representative(SloccClass c) { return representative_ket(c).normalized(); }

LocalOp random_invertible_op(int n, std::mt19937_64& rng, double condition_cap) {
    ComplexMatrix m1 = random_sl(2, rng, condition_cap);
    ComplexMatrix m2 = random_sl(2, rng, condition_cap);
    ComplexMatrix m3 = random_sl(n, rng, condition_cap);
    return {std::move(m1), std::move(m2), std::move(m3)};
}

PureState random_orbit_sample(SloccClass c, std::uint64_t seed, double condition_cap) {
    std::mt19937_64 rng(seed);
    const PureState rep = representative(c);
    for (int attempt = 0; attempt < kOrbitSampleAttempts; ++attempt) {
        PureState sample = apply_local(rep, random_invertible_op(rep.n(), rng, condition_cap));
        try {
            if (classify(sample).cls == c) {
                return sample;
            }
        } catch (const Error&) {
            // numerically borderline draw; take another
        }
    }
    throw SamplingError("random_orbit_sample: no sample of class " + std::string(to_string(c)) +
                        " verified after " + std::to_string(kOrbitSampleAttempts) + " attempts");
}

PureState minor_normal_form() {
    ComplexMatrix r = ComplexMatrix::Zero(4, 4);
    r(0, 0) = 1.0;
    r(1, 1) = 1.0;
    r(2, 2) = 1.0;
    r(3, 0) = kI;
    return unflatten(magic_T().adjoint() * r);
}

LocalOp minor_to_normal_form() {
    // Bob's X sends rows (00,01,11) of the minor ket to (01,00,10); M3 then
    // rewrites Clare's basis so Psi~ matches T^dagger R row by row.
    ComplexMatrix m3_transposed = rows({{0, -kI * kS, -kS, 0},
                                        {kSqrt2, 0, 0, 0},
                                        {0, -kI * kS, kS, 0},
                                        {0, 0, 0, 1}});
    LocalOp op = LocalOp::on_bob(kPauliX, 4);
    op.m3 = m3_transposed.transpose();
    return op;
}

const std::vector<OrderEdge>& direct_edges() {
    static const std::vector<OrderEdge> catalog = build_catalog();
    return catalog;
}

std::optional<OrderEdge> conversion_witness(SloccClass from, SloccClass to) {
    if (from == to) {
        return OrderEdge{from, to, LocalOp::identity(4), "identity", {}};
    }
    // Breadth-first search; remembers the edge used to reach each class.
    std::map<SloccClass, const OrderEdge*> via;
    std::deque<SloccClass> queue{from};
    while (!queue.empty()) {
        const SloccClass cur = queue.front();
        queue.pop_front();
        for (const OrderEdge& e : direct_edges()) {
            if (e.from != cur || e.to == from || via.count(e.to)) {
                continue;
            }
            via[e.to] = &e;
            queue.push_back(e.to);
        }
    }
    if (!via.count(to)) {
        return std::nullopt;
    }
    std::vector<const OrderEdge*> path;
    for (SloccClass c = to; c != from; c = via.at(c)->from) {
        path.insert(path.begin(), via.at(c));
    }
    if (path.size() == 1) {
        return *path.front();
    }
    OrderEdge out{from, to, LocalOp::identity(4), "composite", {}};
    std::string chain(to_string(from));
    for (const OrderEdge* e : path) {
        out.witness = compose(out.witness, e->witness);
        out.steps.insert(out.steps.end(), e->steps.begin(), e->steps.end());
        chain += " -> " + std::string(to_string(e->to));
    }
    out.kind = "composite (" + chain + ")";
    return out;
}

bool dominates(SloccClass a, SloccClass b) { return conversion_witness(a, b).has_value(); }

std::array<int, 4> dominance_signature(SloccClass c) {
    const PureState rep = representative(c);
    const RankPair rp = rank_pair(rep);
    const LocalRanks lr = local_ranks(rep);
    return {rp.rank_R, rp.rank_RTR, lr.r1, lr.r2};
}

bool necessary_condition(SloccClass a, SloccClass b) {
    const auto sa = dominance_signature(a);
    const auto sb = dominance_signature(b);
    for (std::size_t i = 0; i < sa.size(); ++i) {
        if (sa[i] < sb[i]) {
            return false;
        }
    }
    return true;
}

int grade(SloccClass c) {
    int longest = 0;
    for (SloccClass next : successors(c)) {
        longest = std::max(longest, grade(next));
    }
    return longest + 1;
}

bool is_maximally_entangled_rep(const PureState& state, const Tolerances& tol) {
    const PureState psi = state.normalized();
    const ComplexMatrix half = 0.5 * ComplexMatrix::Identity(2, 2);
    if ((reduced_density(psi, 1) - half).norm() > kMaxEntangledTolerance ||
        (reduced_density(psi, 2) - half).norm() > kMaxEntangledTolerance) {
        return false;
    }
    const ComplexMatrix rho3 = reduced_density(psi, 3);
    const Svd dec = svd(rho3);
    const int r3 = numerical_rank(rho3, tol);
    const ComplexMatrix support = dec.left.leftCols(r3);
    const ComplexMatrix target = support * support.adjoint() / static_cast<double>(r3);
    return (rho3 - target).norm() <= kMaxEntangledTolerance;
}

bool dual_tangency_at_origin(const PureState& state) {
    const double bound = kTangencyTolerance * state.norm();
    const auto vanishes = [&](int a, int b, int c) { return std::abs(state.at(a, b, c)) <= bound; };
    if (!vanishes(0, 0, 0) || !vanishes(1, 0, 0) || !vanishes(0, 1, 0)) {
        return false;
    }
    for (int k = 1; k < state.n(); ++k) {
        if (!vanishes(0, 0, k)) {
            return false;
        }
    }
    return true;
}

std::string order_dot() {
    std::ostringstream out;
    out << "digraph slocc_order {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=box];\n";
    for (SloccClass c : kAllClasses) {
        const TableRow row = table_row(c);
        out << "  \"" << to_string(c) << "\" [label=\"" << to_string(c) << "\\n(" << row.rank_R << ","
            << row.rank_RTR << "," << row.r1 << ")\"];\n";
    }
    for (int g = 5; g >= 1; --g) {
        out << "  { rank=same;";
        for (SloccClass c : kAllClasses) {
            if (grade(c) == g) {
                out << " \"" << to_string(c) << "\";";
            }
        }
        out << " }\n";
    }
    for (const OrderEdge& e : direct_edges()) {
        out << "  \"" << to_string(e.from) << "\" -> \"" << to_string(e.to) << "\" [style=dashed, label=\""
            << e.kind << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace slocc
