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

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "slocc/classifier.hpp"
#include "slocc/mixed.hpp"
#include "slocc/preparation.hpp"
#include "slocc/state.hpp"

namespace slocc {

using Json = nlohmann::json;

inline constexpr std::string_view kToolName = "slocc";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Every complex number is a [re, im] pair; matrices are arrays of rows.
// Malformed documents raise InvalidInput.

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// {"dims": [2, 2, n], "amplitudes": [[re, im], ...]} with 4n row-major entries.
Json state_to_json(const PureState& state);
PureState state_from_json(const Json& j);

Json signature_to_json(const InvariantSignature& s);
InvariantSignature signature_from_json(const Json& j);

Json report_to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const Json& j);

Json povm_to_json(const PovmEnsemble& e);
PovmEnsemble povm_from_json(const Json& j);

Json verification_to_json(const PovmVerification& v);

/// {"components": [{"weight": w, "state": <state>}, ...]}
Json ensemble_to_json(const MixedEnsemble& e);
MixedEnsemble ensemble_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace slocc
