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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "slocc/io.hpp"
#include "slocc/orbits.hpp"
#include "test_support.hpp"

namespace slocc {
namespace {

namespace fs = std::filesystem;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun Invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "slocc");
    std::ostringstream out, err;
    const int code = cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("slocc_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string Path(const std::string& name) const { return (dir_ / name).string(); }

    std::string WriteState(const std::string& name, const PureState& s) const {
        write_json_file(Path(name), state_to_json(s));
        return Path(name);
    }

    fs::path dir_;
};

TEST_F(CliTest, ClassifyGhz) {
    const CliRun r = Invoke({"classify", WriteState("ghz.json", testing::Ghz(2))});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "GHZ (2,2,2) - signature (2,2,2)/r(R)=2/r(R^T R)=2\n");
}

TEST_F(CliTest, ClassifyJsonRoundTrips) {
    const CliRun r = Invoke({"classify", WriteState("w.json", representative(SloccClass::W)), "--json"});
    ASSERT_EQ(r.code, 0);
    const ClassificationReport back = report_from_json(Json::parse(r.out));
    EXPECT_EQ(back.cls, SloccClass::W);
    EXPECT_EQ(report_to_json(back).dump(2) + "\n", r.out);
}

TEST_F(CliTest, OutputIsDeterministic) {
    const std::string in = WriteState("m.json", random_orbit_sample(SloccClass::MajorRank3, 5));
    EXPECT_EQ(Invoke({"classify", in, "--json"}).out, Invoke({"classify", in, "--json"}).out);
    EXPECT_EQ(Invoke({"invariants", in}).out, Invoke({"invariants", in}).out);
}

TEST_F(CliTest, Invariants) {
    const CliRun r = Invoke({"invariants", WriteState("g.json", testing::TwoBellPairs())});
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["rank_R"], 4);
    EXPECT_DOUBLE_EQ(j["det224_abs"].get<double>(), 1.0);
    EXPECT_TRUE(j["hdet223"].is_null());
}

TEST_F(CliTest, RepresentativeClassifyRoundTrip) {
    for (SloccClass c : kAllClasses) {
        const std::string out = Path(std::string(to_string(c)) + ".json");
        ASSERT_EQ(Invoke({"representative", std::string(to_string(c)), "-o", out}).code, 0);
        const CliRun r = Invoke({"classify", out});
        EXPECT_EQ(r.out.substr(0, r.out.find(' ')), to_string(c));
    }
    EXPECT_EQ(Invoke({"representative", "Bell"}).code, 1);
}

TEST_F(CliTest, SampleWritesSeededFiles) {
    const CliRun r = Invoke({"sample", "--class", "W", "--count", "3", "--seed", "9", "-o", Path("samples")});
    ASSERT_EQ(r.code, 0);
    for (int k = 0; k < 3; ++k) {
        const Json j = read_json_file(Path("samples/W_" + std::to_string(k) + ".json"));
        EXPECT_EQ(j["seed"], 9 + k);
        EXPECT_EQ(state_from_json(j), random_orbit_sample(SloccClass::W, 9 + k));
    }
}

TEST_F(CliTest, ConvertDownAndRefuseUp) {
    const std::string w = WriteState("w.json", representative(SloccClass::W));
    const CliRun up = Invoke({"convert", w, "--to", "Generic"});
    EXPECT_EQ(up.code, cli::kRefused);
    EXPECT_NE(up.err.find("no upward conversion; dominates(W, Generic) = false"), std::string::npos);

    const CliRun down = Invoke({"convert", w, "--to", "B3", "-o", Path("b3.json")});
    ASSERT_EQ(down.code, 0);
    const Json j = read_json_file(Path("b3.json"));
    EXPECT_EQ(j["applied_to"], "input");
    EXPECT_EQ(classify(state_from_json(j)).cls, SloccClass::B3);

    const CliRun open = Invoke({"convert", WriteState("maj.json", representative(SloccClass::MajorRank3)), "--to",
                             "MinorRank3"});
    EXPECT_EQ(open.code, cli::kRefused);
    EXPECT_NE(open.err.find("no proven witness"), std::string::npos);
}

TEST_F(CliTest, ConvertNonCanonicalInputFallsBackToRepresentative) {
    const std::string in = WriteState("ghz.json", random_orbit_sample(SloccClass::GHZ, 3));
    const CliRun r = Invoke({"convert", in, "--to", "S", "-o", Path("s.json")});
    ASSERT_EQ(r.code, 0);
    const Json j = read_json_file(Path("s.json"));
    EXPECT_EQ(classify(state_from_json(j)).cls, SloccClass::S);
    EXPECT_TRUE(j["applied_to"] == "input" || j["applied_to"] == "representative");
}

TEST_F(CliTest, Prepare) {
    const CliRun r = Invoke({"prepare", WriteState("w.json", testing::WState(4)), "-o", Path("povm.json")});
    ASSERT_EQ(r.code, 0);
    const Json j = read_json_file(Path("povm.json"));
    EXPECT_EQ(j["branches"].size(), 16u);
    EXPECT_LE(j["verification"]["completeness_residual"].get<double>(), 1e-10);
    EXPECT_GE(j["verification"]["min_branch_fidelity"].get<double>(), 1.0 - 1e-9);
}

TEST_F(CliTest, MixedClass) {
    const MixedEnsemble e({{0.5, representative(SloccClass::B1)}, {0.5, representative(SloccClass::B2)}});
    write_json_file(Path("e.json"), ensemble_to_json(e));
    const CliRun r = Invoke({"mixed-class", Path("e.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("Biseparable", 0), 0u);
    const CliRun j = Invoke({"mixed-class", Path("e.json"), "--json"});
    EXPECT_EQ(Json::parse(j.out)["class"], "Biseparable");
}

TEST_F(CliTest, OrderDot) {
    const CliRun r = Invoke({"order", "--dot"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, order_dot());
}

TEST_F(CliTest, MalformedInputExitsOne) {
    std::ofstream(Path("bad.json")) << "{ not json";
    EXPECT_EQ(Invoke({"classify", Path("bad.json")}).code, cli::kMalformedInput);
    std::ofstream(Path("short.json")) << R"({"dims":[2,2,2],"amplitudes":[[1,0]]})";
    EXPECT_EQ(Invoke({"classify", Path("short.json")}).code, cli::kMalformedInput);
    EXPECT_EQ(Invoke({"classify", Path("missing.json")}).code, cli::kMalformedInput);
    EXPECT_EQ(Invoke({"frobnicate"}).code, cli::kMalformedInput);
    EXPECT_EQ(Invoke({}).code, cli::kMalformedInput);
}

TEST_F(CliTest, AmbiguousExitsTwo) {
    const PureState psi = PureState::from_terms(
        4, {{{0, 0, 0}, 1.0}, {{0, 1, 1}, 1.0}, {{1, 0, 2}, 2e-9}, {{1, 1, 3}, 2e-9}});
    const CliRun r = Invoke({"classify", WriteState("amb.json", psi)});
    EXPECT_EQ(r.code, cli::kAmbiguous);
}

TEST_F(CliTest, ToleranceFlag) {
    const PureState psi = PureState::from_terms(
        4, {{{0, 0, 0}, 1.0}, {{0, 1, 1}, 1.0}, {{1, 0, 2}, 1.0}, {{1, 1, 3}, 1e-5}});
    const std::string in = WriteState("t.json", psi);
    // sigma_4 = 1e-5 clears the Psi~ threshold but its square does not clear
    // the rho_3 threshold: the default verdict is ambiguous.
    EXPECT_EQ(Invoke({"classify", in}).code, cli::kAmbiguous);
    EXPECT_EQ(Invoke({"--tolerance", "1e-11", "classify", in}).out.substr(0, 7), "Generic");
    const CliRun loose = Invoke({"--tolerance", "1e-4", "classify", in});
    EXPECT_EQ(loose.code, 0);
    EXPECT_EQ(loose.out.substr(0, 10), "MinorRank3");
}

TEST_F(CliTest, VerifySuite) {
    const CliRun r = Invoke({"verify-suite", "--trials", "20", "--seed", "4"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(Invoke({"verify-suite", "--trials", "0"}).code, cli::kMalformedInput);
}

}  // namespace
}  // namespace slocc
