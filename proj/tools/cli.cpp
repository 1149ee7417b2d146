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

#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "slocc/classifier.hpp"
#include "slocc/errors.hpp"
#include "slocc/invariants.hpp"
#include "slocc/io.hpp"
#include "slocc/mixed.hpp"
#include "slocc/orbits.hpp"
#include "slocc/preparation.hpp"
#include "slocc/properties.hpp"

namespace slocc::cli {

namespace {

struct Options {
    double tolerance = Tolerances{}.rank_rel;
    std::string input;
    std::string output;
    std::string class_name;
    std::string target_class;
    bool json = false;
    bool dot = false;
    int count = 1;
    int trials = 100;
    std::uint64_t seed = 0;
};

SloccClass require_class(const std::string& name) {
    const auto c = parse_slocc_class(name);
    if (!c) {
        throw InvalidInput("unknown class \"" + name + "\"");
    }
    return *c;
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << '\n';
    } else {
        write_json_file(path, j);
    }
}

std::string summary_line(const ClassificationReport& r) {
    const TableRow row = table_row(r.cls);
    const LocalRanks& lr = r.signature.local_ranks;
    std::ostringstream s;
    s << to_string(r.cls) << " (" << row.rank_R << "," << row.rank_RTR << "," << row.r1 << ") - signature ("
      << lr.r1 << "," << lr.r2 << "," << lr.r3 << ")/r(R)=" << r.signature.rank_R
      << "/r(R^T R)=" << r.signature.rank_RTR;
    return s.str();
}

int cmd_classify(const Options& o, const Tolerances& tol, std::ostream& out) {
    const ClassificationReport r = classify(state_from_json(read_json_file(o.input)), tol);
    if (o.json) {
        out << report_to_json(r).dump(2) << '\n';
    } else {
        out << summary_line(r) << '\n';
    }
    return kOk;
}

int cmd_invariants(const Options& o, const Tolerances& tol, std::ostream& out) {
    const PureState psi = state_from_json(read_json_file(o.input));
    Json j = signature_to_json(compute_signature(psi, tol));
    j["norm"] = psi.norm();
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_representative(const Options& o, std::ostream& out) {
    const SloccClass c = require_class(o.class_name);
    emit(state_to_json(representative(c)), o.output, out);
    return kOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
    const SloccClass c = require_class(o.class_name);
    if (o.count < 1) {
        throw InvalidInput("--count must be positive");
    }
    const std::filesystem::path dir = o.output.empty() ? std::filesystem::path(".") : std::filesystem::path(o.output);
    std::filesystem::create_directories(dir);
    for (int k = 0; k < o.count; ++k) {
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
        Json j = state_to_json(random_orbit_sample(c, seed));
        j["class"] = to_string(c);
        j["seed"] = seed;
        const auto path = dir / (std::string(to_string(c)) + "_" + std::to_string(k) + ".json");
        write_json_file(path, j);
        out << path.string() << '\n';
    }
    return kOk;
}

int cmd_convert(const Options& o, const Tolerances& tol, std::ostream& out, std::ostream& err) {
    const PureState psi = state_from_json(read_json_file(o.input));
    const SloccClass to = require_class(o.target_class);
    const SloccClass from = classify(psi, tol).cls;
    const auto witness = conversion_witness(from, to);
    if (!witness) {
        std::ostringstream why;
        if (!necessary_condition(from, to)) {
            why << "no upward conversion; dominates(" << to_string(from) << ", " << to_string(to) << ") = false";
        } else {
            why << "no proven witness; dominates(" << to_string(from) << ", " << to_string(to)
                << ") = false (not excluded by the rank invariants)";
        }
        err << "refused: " << why.str() << '\n';
        return kRefused;
    }
    std::string applied_to = "input";
    std::optional<PureState> image;
    try {
        PureState candidate = apply_local(psi, witness->witness);
        if (classify(candidate, tol).cls == to) {
            image = std::move(candidate);
        }
    } catch (const Error&) {
        // the witness annihilated a non-canonical input
    }
    if (!image) {
        applied_to = "representative";
        image = apply_local(representative(from), witness->witness);
    }
    Json j = state_to_json(*image);
    j["from"] = to_string(from);
    j["to"] = to_string(to);
    j["applied_to"] = applied_to;
    j["witness"] = witness->kind;
    Json steps = Json::array();
    for (const WitnessStep& s : witness->steps) {
        steps.push_back(s.description);
    }
    j["steps"] = std::move(steps);
    emit(j, o.output, out);
    if (!o.output.empty()) {
        out << to_string(from) << " -> " << to_string(to) << " (" << witness->kind << ", applied to " << applied_to
            << ")\n";
    }
    return kOk;
}

int cmd_prepare(const Options& o, std::ostream& out) {
    // State files are rays; the preparation needs the normalized vector.
    const PureState target = state_from_json(read_json_file(o.input)).normalized();
    const PovmEnsemble povm = build_povm(target);
    const PovmVerification v = verify_povm(povm, target);
    Json j = povm_to_json(povm);
    j["verification"] = verification_to_json(v);
    emit(j, o.output, out);
    if (!o.output.empty()) {
        out << verification_to_json(v).dump() << '\n';
    }
    return kOk;
}

int cmd_mixed(const Options& o, const Tolerances& tol, std::ostream& out) {
    const MixedReport r = mixed_class_of_decomposition(ensemble_from_json(read_json_file(o.input)), tol);
    if (o.json) {
        Json comps = Json::array();
        for (SloccClass c : r.component_classes) {
            comps.push_back(to_string(c));
        }
        out << Json{{"class", to_string(r.cls)}, {"bound", "upper"}, {"component_classes", comps}}.dump(2) << '\n';
        return kOk;
    }
    out << to_string(r.cls) << " (upper bound from this decomposition; components:";
    for (SloccClass c : r.component_classes) {
        out << ' ' << to_string(c);
    }
    out << ")\n";
    return kOk;
}

int cmd_order(const Options& o, std::ostream& out) {
    if (o.dot) {
        out << order_dot();
        return kOk;
    }
    for (SloccClass c : kAllClasses) {
        out << "grade " << grade(c) << ": " << to_string(c) << '\n';
    }
    for (const OrderEdge& e : direct_edges()) {
        out << to_string(e.from) << " -> " << to_string(e.to) << " [" << e.kind << "]\n";
    }
    return kOk;
}

int cmd_verify_suite(const Options& o, std::ostream& out) {
    bool all = true;
    for (const PropertyResult& r : run_property_suites(o.trials, o.seed)) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.trials - r.failures << "/" << r.trials << ")";
        if (!r.passed) {
            out << ": " << r.detail;
        }
        out << '\n';
        all = all && r.passed;
    }
    return all ? kOk : kSuiteFailure;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"SLOCC classification of 2x2xn pure states", "slocc"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--tolerance", o.tolerance, "relative singular-value threshold for numerical ranks")
        ->check(CLI::PositiveNumber);
    app.set_version_flag("--version", std::string(kToolVersion));

    auto* classify_cmd = app.add_subcommand("classify", "classify a state file");
    classify_cmd->add_option("state", o.input)->required();
    classify_cmd->add_flag("--json", o.json, "print the full report as JSON");

    auto* invariants_cmd = app.add_subcommand("invariants", "dump the invariant signature");
    invariants_cmd->add_option("state", o.input)->required();

    auto* rep_cmd = app.add_subcommand("representative", "write the canonical state of a class");
    rep_cmd->add_option("class", o.class_name)->required();
    rep_cmd->add_option("-o,--output", o.output);

    auto* sample_cmd = app.add_subcommand("sample", "write random orbit samples of a class");
    sample_cmd->add_option("--class", o.class_name)->required();
    sample_cmd->add_option("--count", o.count);
    sample_cmd->add_option("--seed", o.seed);
    sample_cmd->add_option("-o,--output", o.output);

    auto* convert_cmd = app.add_subcommand("convert", "apply a conversion witness");
    convert_cmd->add_option("state", o.input)->required();
    convert_cmd->add_option("--to", o.target_class)->required();
    convert_cmd->add_option("-o,--output", o.output);

    auto* prepare_cmd = app.add_subcommand("prepare", "build the preparation POVM from two Bell pairs");
    prepare_cmd->add_option("target", o.input)->required();
    prepare_cmd->add_option("-o,--output", o.output);

    auto* mixed_cmd = app.add_subcommand("mixed-class", "classify a pure-state decomposition");
    mixed_cmd->add_option("ensemble", o.input)->required();
    mixed_cmd->add_flag("--json", o.json);

    auto* order_cmd = app.add_subcommand("order", "print the partial order of classes");
    order_cmd->add_flag("--dot", o.dot, "Graphviz output");

    auto* suite_cmd = app.add_subcommand("verify-suite", "run the property suites");
    suite_cmd->add_option("--trials", o.trials);
    suite_cmd->add_option("--seed", o.seed);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kMalformedInput;
    }

    Tolerances tol;
    tol.rank_rel = o.tolerance;
    try {
        if (classify_cmd->parsed()) return cmd_classify(o, tol, out);
        if (invariants_cmd->parsed()) return cmd_invariants(o, tol, out);
        if (rep_cmd->parsed()) return cmd_representative(o, out);
        if (sample_cmd->parsed()) return cmd_sample(o, out);
        if (convert_cmd->parsed()) return cmd_convert(o, tol, out, err);
        if (prepare_cmd->parsed()) return cmd_prepare(o, out);
        if (mixed_cmd->parsed()) return cmd_mixed(o, tol, out);
        if (order_cmd->parsed()) return cmd_order(o, out);
        if (suite_cmd->parsed()) return cmd_verify_suite(o, out);
    } catch (const ClassifierDisagreement& e) {
        err << "error: " << e.what() << '\n';
        return kAmbiguous;
    } catch (const AmbiguousClassification& e) {
        err << "error: " << e.what() << '\n';
        return kAmbiguous;
    } catch (const InvalidState& e) {
        err << "error: " << e.what() << '\n';
        return kAmbiguous;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kMalformedInput;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed JSON: " << e.what() << '\n';
        return kMalformedInput;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kMalformedInput;
    }
    return kMalformedInput;
}

}  // namespace slocc::cli
