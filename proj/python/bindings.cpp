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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "slocc/classifier.hpp"
#include "slocc/errors.hpp"
#include "slocc/invariants.hpp"
#include "slocc/mixed.hpp"
#include "slocc/orbits.hpp"
#include "slocc/preparation.hpp"
#include "slocc/state.hpp"

namespace py = pybind11;
using namespace slocc;

namespace {

Tolerances tolerances(double rank_rel) {
    Tolerances tol;
    tol.rank_rel = rank_rel;
    return tol;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "SLOCC classification of 2x2xn pure states";

    auto base = py::register_exception<Error>(m, "SloccError", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<AmbiguousClassification>(m, "AmbiguousClassification", base.ptr());
    py::register_exception<ClassifierDisagreement>(m, "ClassifierDisagreement", base.ptr());

    py::enum_<SloccClass> cls(m, "SloccClass");
    for (SloccClass c : kAllClasses) {
        cls.value(std::string(to_string(c)).c_str(), c);
    }
    py::enum_<MixedClass> mixed(m, "MixedClass");
    for (MixedClass c : kAllMixedClasses) {
        mixed.value(std::string(to_string(c)).c_str(), c);
    }

    py::class_<PureState>(m, "PureState")
        .def(py::init<int, std::vector<Complex>>(), py::arg("n"), py::arg("amplitudes"))
        .def_property_readonly("n", &PureState::n)
        .def_property_readonly("amplitudes",
                               [](const PureState& s) {
                                   return std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end());
                               })
        .def("at", &PureState::at)
        .def("norm", &PureState::norm)
        .def("normalized", &PureState::normalized)
        .def("flatten", [](const PureState& s) { return flatten(s); });

    py::class_<LocalRanks>(m, "LocalRanks")
        .def_readonly("r1", &LocalRanks::r1)
        .def_readonly("r2", &LocalRanks::r2)
        .def_readonly("r3", &LocalRanks::r3)
        .def("__repr__", [](const LocalRanks& r) {
            return "LocalRanks(" + std::to_string(r.r1) + ", " + std::to_string(r.r2) + ", " +
                   std::to_string(r.r3) + ")";
        });

    py::class_<InvariantSignature>(m, "InvariantSignature")
        .def_readonly("rank_R", &InvariantSignature::rank_R)
        .def_readonly("rank_RTR", &InvariantSignature::rank_RTR)
        .def_readonly("local_ranks", &InvariantSignature::local_ranks)
        .def_readonly("det224", &InvariantSignature::det224)
        .def_readonly("hdet223", &InvariantSignature::hdet223)
        .def_readonly("hdet222", &InvariantSignature::hdet222);

    py::class_<ClassificationReport>(m, "ClassificationReport")
        .def_readonly("cls", &ClassificationReport::cls)
        .def_readonly("signature", &ClassificationReport::signature)
        .def_property_readonly("method", [](const ClassificationReport& r) { return std::string(to_string(r.method)); })
        .def("confident", &ClassificationReport::confident);

    py::class_<LemmaReport>(m, "LemmaReport")
        .def_readonly("distance", &LemmaReport::distance)
        .def_readonly("bound_sv", &LemmaReport::bound_sv)
        .def_readonly("bound_tau", &LemmaReport::bound_tau)
        .def_readonly("holds", &LemmaReport::holds);

    py::class_<PovmVerification>(m, "PovmVerification")
        .def_readonly("completeness_residual", &PovmVerification::completeness_residual)
        .def_readonly("min_branch_fidelity", &PovmVerification::min_branch_fidelity)
        .def_readonly("probability_sum", &PovmVerification::probability_sum);

    py::class_<PovmBranch>(m, "PovmBranch")
        .def_readonly("m3", &PovmBranch::m3)
        .def_readonly("ua", &PovmBranch::ua)
        .def_readonly("ub", &PovmBranch::ub)
        .def_readonly("probability", &PovmBranch::probability);

    py::class_<PovmEnsemble>(m, "PovmEnsemble").def_readonly("branches", &PovmEnsemble::branches);

    m.def("unflatten", &unflatten, py::arg("psi"));
    m.def("representative", &representative, py::arg("cls"));
    m.def("table_row", [](SloccClass c) {
        const TableRow r = table_row(c);
        return py::make_tuple(r.rank_R, r.rank_RTR, r.r1);
    });
    m.def("local_ranks", [](const PureState& s, double rel) { return local_ranks(s, tolerances(rel)); },
          py::arg("state"), py::arg("rank_rel") = Tolerances{}.rank_rel);
    m.def("r_matrix", &r_matrix);
    m.def("det224", &det224);
    m.def("compute_signature",
          [](const PureState& s, double rel) { return compute_signature(s, tolerances(rel)); },
          py::arg("state"), py::arg("rank_rel") = Tolerances{}.rank_rel);
    m.def("classify", [](const PureState& s, double rel) { return classify(s, tolerances(rel)); },
          py::arg("state"), py::arg("rank_rel") = Tolerances{}.rank_rel);
    m.def("classify_by_ranks",
          [](const PureState& s, double rel) { return classify_by_ranks(s, tolerances(rel)); },
          py::arg("state"), py::arg("rank_rel") = Tolerances{}.rank_rel);
    m.def("classify_by_hyperdets",
          [](const PureState& s, double rel) { return classify_by_hyperdets(s, tolerances(rel)); },
          py::arg("state"), py::arg("rank_rel") = Tolerances{}.rank_rel);
    m.def("admits_hyperdeterminant", [](std::vector<int> dims) { return admits_hyperdeterminant(dims); });
    m.def("dominates", &dominates);
    m.def("grade", &grade);
    m.def("order_dot", &order_dot);
    m.def("conversion_witness", [](SloccClass from, SloccClass to) -> py::object {
        const auto w = conversion_witness(from, to);
        if (!w) {
            return py::none();
        }
        return py::make_tuple(w->witness.m1, w->witness.m2, w->witness.m3, w->kind);
    });
    m.def("apply_local", [](const PureState& s, const ComplexMatrix& m1, const ComplexMatrix& m2,
                            const ComplexMatrix& m3) { return apply_local(s, LocalOp{m1, m2, m3}); });
    m.def("random_orbit_sample", &random_orbit_sample, py::arg("cls"), py::arg("seed"),
          py::arg("condition_cap") = 100.0);
    m.def("two_bell_pairs", &two_bell_pairs);
    m.def("build_povm", &build_povm);
    m.def("verify_povm", &verify_povm);
    m.def("lemma_bounds", &lemma_bounds);
    m.def("mixed_class_of_decomposition", [](const std::vector<std::pair<double, PureState>>& parts) {
        std::vector<MixedComponent> components;
        for (const auto& [w, s] : parts) {
            components.push_back({w, s});
        }
        return mixed_class_of_decomposition(MixedEnsemble(std::move(components))).cls;
    });
}
