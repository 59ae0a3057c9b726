#include <algorithm>
#include <cstdio>
#include <regex>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "support.hpp"
#include "cuspidal/report.hpp"

using namespace cusp;
using namespace cusp::test;

namespace {

nlohmann::ordered_json only_json(const CommandOutput& out) {
    for (const auto& [name, content] : out.files)
        if (name.size() > 5 && name.substr(name.size() - 5) == ".json") return nlohmann::ordered_json::parse(content);
    throw std::runtime_error("no json file");
}

std::string only_file(const CommandOutput& out, const std::string& suffix) {
    for (const auto& [name, content] : out.files)
        if (name.size() >= suffix.size() && name.substr(name.size() - suffix.size()) == suffix) return content;
    throw std::runtime_error("no " + suffix + " file");
}

}  // namespace

TEST(Report, VerifyFPlusPassesNineChecks) {
    const CommandOutput out = run_verify(fixture("fplus"), {});
    EXPECT_EQ(out.exit_code, kExitPass) << out.message;
    const auto j = only_json(out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"surface", "curves", "classifications", "checks", "tolerances", "version"}));
    int passed = 0;
    for (const auto& c : j["checks"]) passed += c["status"] == "passed";
    EXPECT_EQ(passed, 9);
    EXPECT_EQ(j["classifications"][0]["class"], "cusp");
    EXPECT_EQ(j["classifications"][0]["cusp_sign"], "zig");
}

TEST(Report, VerifyCycloidIncludesConePoint) {
    const auto j = only_json(run_verify(fixture("cycloid"), {}));
    bool cone = false;
    for (const auto& c : j["checks"])
        if (c["name"] == "cone_point") cone = c["status"] == "passed";
    EXPECT_TRUE(cone);
    EXPECT_EQ(j["classifications"][0]["class"], "nondegenerate_other");
}

TEST(Report, UnboundedCurvatureSkipsTheorems) {
    const CommandOutput out = run_verify(fixture("unbounded"), {});
    EXPECT_EQ(out.exit_code, kExitPass);
    const auto j = only_json(out);
    EXPECT_FALSE(j["curves"][0]["bounded_K"].get<bool>());
    std::set<std::string> theorem = {"sign_of_K", "cusp_sign", "cusp_sign_from_K", "cone_point"};
    for (const auto& c : j["checks"]) {
        if (theorem.count(c["name"])) {
            EXPECT_EQ(c["status"], "hypotheses_not_met") << c["name"];
        }
    }
    EXPECT_EQ(j["classifications"][0]["K_limit"], "unbounded");
    EXPECT_FALSE(j["classifications"][0]["supported"].get<bool>());
}

TEST(Report, NotAFrontIsRejected) {
    const CommandOutput out = run_verify(fixture("not_front"), {});
    EXPECT_EQ(out.exit_code, kExitInputError);
    EXPECT_NE(out.message.find("not a front"), std::string::npos);
}

TEST(Report, NothingToAnalyze) {
    const CommandOutput out = run_analyze(fixture("sphere"), {});
    EXPECT_EQ(out.exit_code, kExitNothing);
    EXPECT_EQ(only_file(out, ".csv"), "t,u,v,kappa_s,kappa_nu,kappa_c,kappa_t,kappa_nu_p,kappa_t_p,K_limit\n");
}

TEST(Report, CsvHasOneRowPerSample) {
    RunOptions opt;
    opt.samples = 37;
    const std::string csv = only_file(run_analyze(fixture("cycloid"), opt), ".csv");
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "t,u,v,kappa_s,kappa_nu,kappa_c,kappa_t,kappa_nu_p,kappa_t_p,K_limit");
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 9);
    }
    EXPECT_EQ(rows, 37);
}

TEST(Report, UnboundedKLimitIsOmittedFromCsv) {
    const std::string csv = only_file(run_analyze(fixture("unbounded"), {}), ".csv");
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    std::getline(is, line);
    EXPECT_EQ(line.back(), ',');
}

TEST(Report, OutputsAreDeterministicAndFinite) {
    for (const char* name : {"fplus", "cycloid", "unbounded", "normal_form"}) {
        const auto s = fixture(name);
        const CommandOutput a = run_verify(s, {}), b = run_verify(s, {});
        EXPECT_EQ(a.files, b.files) << name;
        const CommandOutput c = run_analyze(s, {}), d = run_analyze(s, {});
        EXPECT_EQ(c.files, d.files) << name;
        const std::regex non_finite(R"(\b-?(nan|inf|infinity)\b)", std::regex::icase);
        for (const auto* out : {&a, &c}) {
            for (const auto& [file, content] : out->files) {
                EXPECT_FALSE(std::regex_search(content, non_finite)) << file;
            }
        }
    }
}

TEST(Report, SerialRunMatchesParallel) {
    RunOptions serial;
    serial.analysis.parallel = false;
    const auto s = fixture("fminus");
    EXPECT_EQ(run_verify(s, serial).files, run_verify(s, {}).files);
}

TEST(Report, ClassifyEntries) {
    const auto j = only_json(run_classify(fixture("fminus"), {}));
    const auto& c = j["classifications"][0];
    EXPECT_EQ(c["class"], "cusp");
    EXPECT_EQ(c["cusp_sign"], "zag");
    EXPECT_NEAR(c["mu_nu"].get<double>(), -6.0, 1e-6);
    EXPECT_TRUE(c.contains("witnesses"));
    EXPECT_TRUE(j["checks"].empty());
}

TEST(Report, MeshContainsOnlyVertexFaceAndLineRecords) {
    RunOptions opt;
    opt.analysis.grid = 12;
    const CommandOutput out = run_mesh(fixture("cycloid"), opt);
    ASSERT_EQ(out.files.size(), 2u);
    for (const auto& [name, content] : out.files) {
        std::istringstream is(content);
        std::string line;
        int v = 0, f = 0, l = 0;
        while (std::getline(is, line)) {
            ASSERT_FALSE(line.empty());
            const char k = line[0];
            ASSERT_TRUE((k == 'v' || k == 'f' || k == 'l') && line[1] == ' ') << line;
            v += k == 'v';
            f += k == 'f';
            l += k == 'l';
        }
        EXPECT_EQ(v, 13 * 13 + 50) << name;
        EXPECT_EQ(f, 2 * 12 * 12) << name;
        EXPECT_EQ(l, 1) << name;
    }
    EXPECT_EQ(run_mesh(fixture("cycloid"), opt).files, out.files);
}

TEST(Report, SphereMeshNormalsAreTheSurfacePoints) {
    RunOptions opt;
    opt.analysis.grid = 6;
    const CommandOutput out = run_mesh(fixture("sphere"), opt);
    const std::string surf = only_file(out, "_surface.obj"), gauss = only_file(out, "_gauss.obj");
    std::istringstream a(surf), b(gauss);
    std::string la, lb;
    while (std::getline(a, la) && std::getline(b, lb)) {
        if (la[0] != 'v') break;
        double x, y, z, p, q, r;
        std::sscanf(la.c_str(), "v %lf %lf %lf", &x, &y, &z);
        std::sscanf(lb.c_str(), "v %lf %lf %lf", &p, &q, &r);
        EXPECT_NEAR(std::abs(x * p + y * q + z * r), 1.0, 1e-12);
    }
}
