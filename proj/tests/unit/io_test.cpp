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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "slocc/errors.hpp"
#include "slocc/io.hpp"
#include "slocc/orbits.hpp"
#include "slocc/properties.hpp"
#include "test_support.hpp"

namespace slocc {
namespace {

TEST(StateJson, RoundTripIsExact) {
    std::mt19937_64 rng(91);
    for (int n = 1; n <= 6; ++n) {
        const PureState s = random_gaussian_state(n, rng);
        const Json j = state_to_json(s);
        EXPECT_EQ(j["dims"], Json::array({2, 2, n}));
        EXPECT_EQ(state_from_json(Json::parse(j.dump())), s);
    }
}

TEST(StateJson, Layout) {
    const Json j = state_to_json(testing::Ghz(2));
    EXPECT_EQ(j["amplitudes"].size(), 8u);
    EXPECT_EQ(j["amplitudes"][0], Json::array({1.0, 0.0}));
    EXPECT_EQ(j["amplitudes"][7], Json::array({1.0, 0.0}));
    EXPECT_EQ(j["amplitudes"][1], Json::array({0.0, 0.0}));
}

TEST(StateJson, Malformed) {
    EXPECT_THROW(state_from_json(Json::parse(R"({"dims":[2,2]})")), InvalidInput);
    EXPECT_THROW(state_from_json(Json::parse(R"({"dims":[2,3,1],"amplitudes":[]})")), InvalidInput);
    EXPECT_THROW(state_from_json(Json::parse(R"({"dims":[2,2,1],"amplitudes":[[1,0],[0,0],[0,0]]})")),
                 InvalidInput);
    EXPECT_THROW(state_from_json(Json::parse(R"({"dims":[2,2,1],"amplitudes":[[1,0],[0,0],[0,0],[0]]})")),
                 InvalidInput);
    EXPECT_THROW(state_from_json(Json::parse(R"({"dims":[2,2,1],"amplitudes":[[0,0],[0,0],[0,0],[0,0]]})")),
                 InvalidInput);
    EXPECT_THROW(state_from_json(Json::parse(R"({"amplitudes":[]})")), InvalidInput);
}

TEST(ReportJson, RoundTrip) {
    for (SloccClass c : kAllClasses) {
        const ClassificationReport r = classify(random_orbit_sample(c, 17));
        const Json j = report_to_json(r);
        const ClassificationReport back = report_from_json(Json::parse(j.dump()));
        EXPECT_EQ(back.cls, r.cls);
        EXPECT_EQ(back.method, r.method);
        EXPECT_EQ(back.signature.rank_R, r.signature.rank_R);
        EXPECT_EQ(back.signature.rank_RTR, r.signature.rank_RTR);
        EXPECT_EQ(back.signature.local_ranks, r.signature.local_ranks);
        EXPECT_EQ(back.signature.det224, r.signature.det224);
        EXPECT_EQ(back.signature.hdet223, r.signature.hdet223);
        EXPECT_EQ(back.signature.hdet222, r.signature.hdet222);
        ASSERT_EQ(back.margins.size(), r.margins.size());
        for (std::size_t i = 0; i < r.margins.size(); ++i) {
            EXPECT_EQ(back.margins[i].quantity, r.margins[i].quantity);
            EXPECT_EQ(back.margins[i].threshold, r.margins[i].threshold);
            EXPECT_EQ(back.margins[i].smallest_above, r.margins[i].smallest_above);
            EXPECT_EQ(back.margins[i].largest_below, r.margins[i].largest_below);
            EXPECT_EQ(back.margins[i].margin_decades, r.margins[i].margin_decades);
        }
        EXPECT_EQ(report_to_json(back).dump(), j.dump());
        EXPECT_EQ(j["tool"], "slocc");
        EXPECT_EQ(j["version"], std::string(kToolVersion));
    }
}

TEST(PovmJson, RoundTrip) {
    const PovmEnsemble e = build_povm(representative(SloccClass::MajorRank3));
    const PovmEnsemble back = povm_from_json(Json::parse(povm_to_json(e).dump()));
    ASSERT_EQ(back.branches.size(), 16u);
    for (std::size_t i = 0; i < 16; ++i) {
        EXPECT_EQ(back.branches[i].m3, e.branches[i].m3);
        EXPECT_EQ(back.branches[i].ua, e.branches[i].ua);
        EXPECT_EQ(back.branches[i].ub, e.branches[i].ub);
        EXPECT_EQ(back.branches[i].probability, e.branches[i].probability);
    }
}

TEST(EnsembleJson, RoundTripAndValidation) {
    const MixedEnsemble e({{0.25, representative(SloccClass::W)}, {0.75, representative(SloccClass::B3)}});
    const MixedEnsemble back = ensemble_from_json(Json::parse(ensemble_to_json(e).dump()));
    ASSERT_EQ(back.components().size(), 2u);
    EXPECT_EQ(back.components()[1].state, e.components()[1].state);
    Json bad = ensemble_to_json(e);
    bad["components"][0]["weight"] = 0.5;
    EXPECT_THROW(ensemble_from_json(bad), InvalidInput);
}

TEST(Files, ReadWrite) {
    const auto path = std::filesystem::temp_directory_path() / "slocc_io_test_state.json";
    write_json_file(path, state_to_json(testing::WState(3)));
    EXPECT_EQ(state_from_json(read_json_file(path)), testing::WState(3));
    std::filesystem::remove(path);
    EXPECT_THROW(read_json_file(path), InvalidInput);
}

}  // namespace
}  // namespace slocc
