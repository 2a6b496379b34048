#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "ajtorus/cli.hpp"
#include "ajtorus/errors.hpp"

namespace ajt {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path fresh_dir(const std::string& name) {
    const fs::path d = fs::temp_directory_path() / ("ajtorus_test_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

TEST(Report, JsonRoundTrip) {
    VerifyOptions opt;
    opt.scan_degree = 2;
    const AJReport r = verify_sum({3, 2}, {3, 2}, opt);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.case_id, "C9");
    EXPECT_EQ(r.l_degree, 3);
    EXPECT_TRUE(r.scan.ran);
    EXPECT_EQ(r.scan.kernel_dimension, 0);
    const json j = to_json(r);
    for (const char* key : {"knot", "case", "l_degree", "alpha_at_minus1", "factors", "repeated_factors",
                            "squarefree_part", "a_polynomial", "match", "unit", "certificates", "scan"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(report_from_json(j), r);
    EXPECT_EQ(report_from_json(json::parse(j.dump())), r);
    EXPECT_EQ(to_json(report_from_json(j)).dump(), j.dump());
}

TEST(Report, WitnessRoundTrip) {
    VerifyOptions opt;
    opt.scan_degree = 3;
    const AJReport r = verify_sum({3, 2}, {3, 2}, opt);
    ASSERT_TRUE(r.scan.witness);
    EXPECT_TRUE(r.scan.witness_matches_candidate);
    EXPECT_EQ(report_from_json(json::parse(to_json(r).dump(2))), r);
}

TEST(Cli, Jones) {
    CommandResult r = run_command([] { return cmd_jones("T(3,2)", 2, Format::Json); });
    ASSERT_EQ(r.exit_code, kExitOk);
    const json j = json::parse(r.out);
    const json& row = j.at("rows").at(1);
    EXPECT_EQ(row.at("value"), "t^-2 + t^-6 + t^-10 - t^-18");
    EXPECT_EQ(row.at("degrees"), json({-18, -2}));
    EXPECT_EQ(row.at("check"), "PASS");
    r = run_command([] { return cmd_jones("U", 3, Format::Json); });
    ASSERT_EQ(r.exit_code, kExitOk);
    const json u = json::parse(r.out).at("rows");
    EXPECT_EQ(u.at(0).at("value"), "1");
    EXPECT_EQ(u.at(1).at("value"), "t^2 + t^-2");
    EXPECT_EQ(u.at(2).at("value"), "t^4 + 1 + t^-4");
    EXPECT_EQ(u.at(0).at("check").get<std::string>().rfind("warning", 0), 0u);
    EXPECT_EQ(run_command([] { return cmd_jones("T(2,3)", 2, Format::Text); }).exit_code, kExitUsage);
    EXPECT_EQ(run_command([] { return cmd_jones("T(3,2)", 0, Format::Text); }).exit_code, kExitUsage);
}

TEST(Cli, VerifyExitCodes) {
    CommandResult r = run_command([] { return cmd_verify("T(3,2)#T(5,2)", {}, Format::Json); });
    EXPECT_EQ(r.exit_code, kExitOk);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j.at("match").get<bool>());
    EXPECT_TRUE(j.at("repeated_factors").empty());
    EXPECT_EQ(run_command([] { return cmd_verify("T(3,2)#T(-5,2)", {}, Format::Text); }).exit_code, kExitOutOfScope);
    EXPECT_EQ(run_command([] { return cmd_verify("T(3,2)", {}, Format::Text); }).exit_code, kExitUsage);
    EXPECT_EQ(run_command([] { return cmd_verify("T(3,2)#T(3", {}, Format::Text); }).exit_code, kExitUsage);
}

TEST(Cli, Scan) {
    CommandResult r = run_command([] { return cmd_scan("T(3,2)#T(3,2)", 2, std::nullopt, Format::Json); });
    ASSERT_EQ(r.exit_code, kExitOk);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("m_window"), json({0, 34}));
    EXPECT_EQ(j.at("kernel_dimension"), 0);
    EXPECT_EQ(run_command([] { return cmd_scan("T(3,2)", 1, std::nullopt, Format::Text); }).exit_code, kExitUsage);
    r = run_command([] { return cmd_scan("U", 1, std::make_pair(0, 2), Format::Text); });
    EXPECT_NE(r.out.find("kernel dimension: 1"), std::string::npos);
}

TEST(Cli, Windows) {
    EXPECT_EQ(parse_window("0:34"), std::make_pair(0, 34));
    EXPECT_EQ(parse_window("-4:-1"), std::make_pair(-4, -1));
    EXPECT_THROW(parse_window("3:1"), ParseError);
    EXPECT_THROW(parse_window("3"), ParseError);
    EXPECT_THROW(parse_window("a:b"), ParseError);
    EXPECT_THROW(parse_window("1:2x"), ParseError);
}

TEST(Cli, JonesCacheRoundTrip) {
    const fs::path dir = fresh_dir("cache");
    ::setenv("AJTORUS_JONES_CACHE", dir.c_str(), 1);
    const KnotExpr k = KnotExpr::sum({3, 2}, {5, 2});
    {
        JonesSequence s(k);
        for (long n = 1; n <= 5; ++n) s(n);
        save_jones_cache(s);
    }
    std::ifstream in(dir / "T_3_2__T_5_2_.txt");
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "T(3,2)#T(5,2);5");
    JonesSequence loaded(k);
    load_jones_cache(loaded);
    EXPECT_EQ(loaded.materialized().size(), 5u);
    for (long n = 1; n <= 5; ++n) EXPECT_EQ(loaded(n), jones_connected_sum({3, 2}, {5, 2}, n));
    // A file for another knot is rejected.
    fs::copy_file(dir / "T_3_2__T_5_2_.txt", dir / "T_3_2__T_7_2_.txt");
    JonesSequence other(KnotExpr::sum({3, 2}, {7, 2}));
    EXPECT_THROW(load_jones_cache(other), ParseError);
    ::unsetenv("AJTORUS_JONES_CACHE");
    fs::remove_all(dir);
}

TEST(Cli, SelftestGoldenFiles) {
    const fs::path dir = fresh_dir("golden");
    const CommandResult v = cmd_verify("T(3,2)#T(3,2)", {}, Format::Json);
    ASSERT_EQ(v.exit_code, kExitOk);
    std::ofstream(dir / "c9.json") << v.out;
    CommandResult r = cmd_selftest({3}, dir.string());
    EXPECT_EQ(r.exit_code, kExitOk) << r.out;
    EXPECT_NE(r.out.find("PASS  golden c9.json"), std::string::npos) << r.out;
    std::string corrupted = v.out;
    corrupted.replace(corrupted.find("\"match\": true"), 13, "\"match\": false");
    std::ofstream(dir / "c9.json") << corrupted;
    r = cmd_selftest({3}, dir.string());
    EXPECT_EQ(r.exit_code, kExitMismatch);
    EXPECT_NE(r.out.find("FAIL  golden c9.json"), std::string::npos) << r.out;
    fs::remove_all(dir);
}

}  // namespace
}  // namespace ajt
