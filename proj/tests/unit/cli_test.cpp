#include "paralie_tools/cli.hpp"
#include "paralie_tools/json_io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace paralie {
namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "paralie");
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, {in, out, err});
    return {code, out.str(), err.str()};
}

TEST(JsonIo, Mat3RoundTrip) {
    const Mat3 m{{0.1, -2.0 / 3.0, 1e-300}, {4, 5, 6}, {7, 8, 9.5}};
    EXPECT_EQ(io::mat3_from_json(io::parse(io::to_json(m).dump())), m);
}

TEST(JsonIo, StructureConstantsRoundTrip) {
    const StructureConstants c = class_algebra({ClassId::F8, 0.3, 0});
    EXPECT_EQ(io::structure_constants_from_json(io::parse(io::to_json(c).dump())), c);
}

TEST(JsonIo, ConstructorObject) {
    const auto c = io::structure_constants_from_json(io::parse(R"({"class":"f11","alpha":1,"beta":2})"));
    EXPECT_EQ(c, class_algebra({ClassId::F11, 1, 2}));
}

TEST(JsonIo, Errors) {
    EXPECT_THROW(io::parse("{"), io::ParseError);
    EXPECT_THROW(io::mat3_from_json(io::parse("[[1,2],[3,4]]")), io::ParseError);
    EXPECT_THROW(io::structure_constants_from_json(io::parse(R"({"x":1})")), io::ParseError);
    io::json bad = io::to_json(StructureConstants{});
    bad["C"][0][1][2] = 1.0;
    EXPECT_THROW(io::structure_constants_from_json(bad), NotALieAlgebra);
}

TEST(JsonIo, ExpResultSchema) {
    const io::json j = io::to_json(with_oracle(closed_form({ClassId::F8, 1, 0}, 1, 0, 0)));
    for (const char* key : {"A", "t", "u", "branch", "expA", "oracle_residual"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["branch"], "generic");
}

TEST(Cli, ConstructThenClassifyRoundTrip) {
    for (ClassId id : kBasicClasses) {
        const std::string name{to_string(id)};
        const CliRun c = run_cli({"construct", "--class", name, "--alpha", "-0.5", "--beta", "2", "--format", "json"});
        ASSERT_EQ(c.code, cli::kOk) << c.err;
        const CliRun r = run_cli({"classify", "-", "--format", "json"}, c.out);
        ASSERT_EQ(r.code, cli::kOk) << r.err;
        const io::json j = io::parse(r.out);
        ASSERT_EQ(j["verdict"].size(), 1u);
        EXPECT_EQ(j["verdict"][0], name);
        EXPECT_NEAR(j["alpha"].get<double>(), -0.5, 1e-12);
        EXPECT_NEAR(j["beta"].get<double>(), has_beta(id) ? 2.0 : 0.0, 1e-12);
    }
}

TEST(Cli, ClassifyFromFile) {
    const std::string path = ::testing::TempDir() + "paralie_cli_f9.json";
    {
        std::ofstream f(path);
        f << io::to_json(class_algebra({ClassId::F9, 2, 0})).dump();
    }
    const CliRun r = run_cli({"classify", path});
    EXPECT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_NE(r.out.find("F9"), std::string::npos);
    std::remove(path.c_str());
}

TEST(Cli, ClassNamesAreCaseInsensitive) {
    const CliRun lower = run_cli({"construct", "--class", "f8", "--alpha", "1", "--format", "json"});
    const CliRun upper = run_cli({"construct", "--class", "F8", "--alpha", "1", "--format", "json"});
    EXPECT_EQ(lower.code, cli::kOk);
    EXPECT_EQ(lower.out, upper.out);
}

TEST(Cli, ExpWithOracle) {
    const CliRun r = run_cli({"exp", "--class", "F8", "--alpha", "1", "--coords", "1,0,0", "--oracle", "--format", "json"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const io::json j = io::parse(r.out);
    EXPECT_EQ(j["branch"], "generic");
    EXPECT_LE(j["oracle_residual"].get<double>(), 1e-15);
    EXPECT_NEAR(j["expA"][1][1].get<double>(), std::cos(1.0), 1e-15);
}

TEST(Cli, TableDefaults) {
    const CliRun r = run_cli({"table", "--format", "json"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_NE(r.out.find("-10"), std::string::npos);
    const CliRun text = run_cli({"table"});
    EXPECT_EQ(text.code, cli::kOk);
    EXPECT_NE(text.out.find("F11"), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
    EXPECT_EQ(run_cli({"verify", "--grid", "small"}).code, cli::kOk);
    EXPECT_EQ(run_cli({"verify", "--grid", "small", "--tol", "1e-30"}).code, cli::kVerifyFailed);
}

TEST(Cli, VerifyGridSizes) {
    const auto small = cli::run_verify_grid(cli::Grid::Small);
    ASSERT_EQ(small.size(), kBasicClasses.size());
    for (std::size_t i = 0; i < small.size(); ++i) {
        EXPECT_EQ(small[i].id, kBasicClasses[i]);
        EXPECT_GT(small[i].points, 0u);
        EXPECT_TRUE(small[i].roundtrip_pure);
    }
    EXPECT_EQ(cli::parameter_grid(cli::Grid::Full).size(), 5u);
    EXPECT_EQ(cli::coordinate_grid(cli::Grid::Full).size(), 5u);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"construct", "--class", "F3"}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"exp", "--class", "F4", "--coords", "1,2"}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"classify", "-"}, "not json").code, cli::kUsage);
    EXPECT_EQ(run_cli({"classify", "/nonexistent/file.json"}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"verify", "--tol", "-1"}).code, cli::kUsage);
}

TEST(Cli, InvalidLieAlgebraExitCode) {
    // Antisymmetric but violating Jacobi.
    StructureConstants c;
    c.add_bracket(0, 1, 1, 1.0);
    c.add_bracket(1, 2, 0, 1.0);
    EXPECT_EQ(run_cli({"classify", "-"}, io::to_json(c).dump()).code, cli::kNotLieAlgebra);
    io::json asym = io::to_json(StructureConstants{});
    asym["C"][0][1][2] = 1.0;
    EXPECT_EQ(run_cli({"classify", "-"}, asym.dump()).code, cli::kNotLieAlgebra);
}

}  // namespace
}  // namespace paralie
