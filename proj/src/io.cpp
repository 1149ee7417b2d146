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

#include "slocc/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "slocc/errors.hpp"

namespace slocc {

namespace {

// JSON has no infinity; unbounded margins travel as null.
Json real_to_json(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double real_from_json(const Json& j) {
    if (j.is_null()) {
        return std::numeric_limits<double>::infinity();
    }
    if (!j.is_number()) {
        throw InvalidInput("expected a number, got " + j.dump());
    }
    return j.get<double>();
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) {
        throw InvalidInput(std::string("field \"") + key + "\" must be an integer");
    }
    return v.get<int>();
}

SloccClass class_from_json(const Json& j) {
    if (!j.is_string()) {
        throw InvalidInput("class label must be a string");
    }
    const auto c = parse_slocc_class(j.get<std::string>());
    if (!c) {
        throw InvalidInput("unknown class label \"" + j.get<std::string>() + "\"");
    }
    return *c;
}

ClassificationMethod method_from_json(const Json& j) {
    for (ClassificationMethod m : {ClassificationMethod::RankTable, ClassificationMethod::HyperdetRecursive,
                                   ClassificationMethod::CrossChecked}) {
        if (j.is_string() && j.get<std::string>() == to_string(m)) {
            return m;
        }
    }
    throw InvalidInput("unknown classification method " + j.dump());
}

Json optional_complex(const std::optional<Complex>& z) { return z ? complex_to_json(*z) : Json(nullptr); }

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidInput("complex numbers are [re, im] pairs, got " + j.dump());
    }
    const Complex z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InvalidInput("non-finite complex entry");
    }
    return z;
}

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            row.push_back(complex_to_json(m(i, k)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
        throw InvalidInput("matrices are nonempty arrays of rows");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw InvalidInput("matrix rows have different lengths");
        }
        for (Eigen::Index k = 0; k < cols; ++k) {
            m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
        }
    }
    return m;
}

Json state_to_json(const PureState& state) {
    Json amps = Json::array();
    for (const Complex& z : state.amplitudes()) {
        amps.push_back(complex_to_json(z));
    }
    return Json{{"dims", Json::array({2, 2, state.n()})}, {"amplitudes", std::move(amps)}};
}

PureState state_from_json(const Json& j) {
    const Json& dims = field(j, "dims");
    if (!dims.is_array() || dims.size() != 3 || !dims[0].is_number_integer() || !dims[1].is_number_integer() ||
        !dims[2].is_number_integer()) {
        throw InvalidInput("\"dims\" must be [2, 2, n]");
    }
    if (dims[0].get<int>() != 2 || dims[1].get<int>() != 2 || dims[2].get<int>() < 1) {
        throw InvalidInput("\"dims\" must be [2, 2, n] with n >= 1, got " + dims.dump());
    }
    const int n = dims[2].get<int>();
    const Json& amps = field(j, "amplitudes");
    if (!amps.is_array() || amps.size() != static_cast<std::size_t>(4 * n)) {
        throw InvalidInput("\"amplitudes\" must hold 4n = " + std::to_string(4 * n) + " [re, im] pairs");
    }
    std::vector<Complex> values;
    values.reserve(amps.size());
    for (const Json& a : amps) {
        values.push_back(complex_from_json(a));
    }
    return PureState(n, std::move(values));
}

Json signature_to_json(const InvariantSignature& s) {
    Json j{{"rank_R", s.rank_R},
           {"rank_RTR", s.rank_RTR},
           {"local_ranks", Json::array({s.local_ranks.r1, s.local_ranks.r2, s.local_ranks.r3})},
           {"det224", complex_to_json(s.det224)},
           {"det224_abs", std::abs(s.det224)},
           {"hdet223", optional_complex(s.hdet223)},
           {"hdet223_abs", s.hdet223 ? Json(std::abs(*s.hdet223)) : Json(nullptr)},
           {"hdet222", optional_complex(s.hdet222)},
           {"hdet222_abs", s.hdet222 ? Json(std::abs(*s.hdet222)) : Json(nullptr)}};
    return j;
}

InvariantSignature signature_from_json(const Json& j) {
    InvariantSignature s;
    s.rank_R = int_field(j, "rank_R");
    s.rank_RTR = int_field(j, "rank_RTR");
    const Json& lr = field(j, "local_ranks");
    if (!lr.is_array() || lr.size() != 3) {
        throw InvalidInput("\"local_ranks\" must hold three integers");
    }
    s.local_ranks = {lr[0].get<int>(), lr[1].get<int>(), lr[2].get<int>()};
    s.det224 = complex_from_json(field(j, "det224"));
    if (j.contains("hdet223") && !j.at("hdet223").is_null()) {
        s.hdet223 = complex_from_json(j.at("hdet223"));
    }
    if (j.contains("hdet222") && !j.at("hdet222").is_null()) {
        s.hdet222 = complex_from_json(j.at("hdet222"));
    }
    return s;
}

Json report_to_json(const ClassificationReport& r) {
    Json margins = Json::array();
    for (const DecisionMargin& m : r.margins) {
        margins.push_back({{"quantity", m.quantity},
                           {"threshold", real_to_json(m.threshold)},
                           {"smallest_above", real_to_json(m.smallest_above)},
                           {"largest_below", real_to_json(m.largest_below)},
                           {"margin_decades", real_to_json(m.margin_decades)}});
    }
    return Json{{"tool", kToolName},
                {"version", kToolVersion},
                {"class", to_string(r.cls)},
                {"method", to_string(r.method)},
                {"signature", signature_to_json(r.signature)},
                {"margins", std::move(margins)}};
}

ClassificationReport report_from_json(const Json& j) {
    ClassificationReport r;
    r.cls = class_from_json(field(j, "class"));
    r.method = method_from_json(field(j, "method"));
    r.signature = signature_from_json(field(j, "signature"));
    const Json& margins = field(j, "margins");
    if (!margins.is_array()) {
        throw InvalidInput("\"margins\" must be an array");
    }
    for (const Json& m : margins) {
        const Json& q = field(m, "quantity");
        if (!q.is_string()) {
            throw InvalidInput("margin quantity must be a string");
        }
        r.margins.push_back({q.get<std::string>(), real_from_json(field(m, "threshold")),
                             real_from_json(field(m, "smallest_above")), real_from_json(field(m, "largest_below")),
                             real_from_json(field(m, "margin_decades"))});
    }
    return r;
}

Json povm_to_json(const PovmEnsemble& e) {
    Json branches = Json::array();
    for (std::size_t i = 0; i < e.branches.size(); ++i) {
        const PovmBranch& b = e.branches[i];
        branches.push_back({{"index", i},
                            {"m3", matrix_to_json(b.m3)},
                            {"ua", matrix_to_json(b.ua)},
                            {"ub", matrix_to_json(b.ub)},
                            {"probability", b.probability}});
    }
    return Json{{"branches", std::move(branches)}};
}

PovmEnsemble povm_from_json(const Json& j) {
    const Json& branches = field(j, "branches");
    if (!branches.is_array()) {
        throw InvalidInput("\"branches\" must be an array");
    }
    PovmEnsemble e;
    for (const Json& b : branches) {
        e.branches.push_back({matrix_from_json(field(b, "m3")), matrix_from_json(field(b, "ua")),
                              matrix_from_json(field(b, "ub")), real_from_json(field(b, "probability"))});
    }
    return e;
}

Json verification_to_json(const PovmVerification& v) {
    return Json{{"completeness_residual", v.completeness_residual},
                {"min_branch_fidelity", v.min_branch_fidelity},
                {"probability_sum", v.probability_sum}};
}

Json ensemble_to_json(const MixedEnsemble& e) {
    Json components = Json::array();
    for (const MixedComponent& c : e.components()) {
        components.push_back({{"weight", c.weight}, {"state", state_to_json(c.state)}});
    }
    return Json{{"components", std::move(components)}};
}

MixedEnsemble ensemble_from_json(const Json& j) {
    const Json& components = field(j, "components");
    if (!components.is_array()) {
        throw InvalidInput("\"components\" must be an array");
    }
    std::vector<MixedComponent> out;
    for (const Json& c : components) {
        const Json& w = field(c, "weight");
        if (!w.is_number()) {
            throw InvalidInput("component weight must be a number");
        }
        out.push_back({w.get<double>(), state_from_json(field(c, "state"))});
    }
    return MixedEnsemble(std::move(out));
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidInput("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
}

}  // namespace slocc
