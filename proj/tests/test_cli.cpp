#include "twistkit/cli.hpp"
#include "twistkit/disc_enumeration.hpp"
#include "twistkit/forest.hpp"
#include "twistkit/io.hpp"
#include "twistkit/presets.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace twistkit;

namespace
{

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

const std::filesystem::path golden_dir = TWISTKIT_GOLDEN_DIR;

} // namespace

TEST_CASE("classes preset")
{
    auto r = run({"classes", "--preset", "theta_s2xs2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("5 candidate classes") != std::string::npos);
    CHECK(r.out.find("(-1,-1,1,0)") != std::string::npos);
    CHECK(run({"classes", "--preset", "theta_s2xs2", "--expect", "5"}).code == 0);
    CHECK(run({"classes", "--preset", "theta_s2xs2", "--expect", "4"}).code == 1);
}

TEST_CASE("iso")
{
    auto r = run({"iso", "twist(1;1@1)", "((L L) L)"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("isomorphic: true\n", 0) == 0);
    CHECK(run({"iso", "(L L L)", "((L L) L)", "--expect", "true"}).code == 1);
    auto bad = run({"iso", "(L L", "L"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("ParseError") != std::string::npos);
}

TEST_CASE("certify")
{
    auto r = run({"certify", "--preset", "theta_s2xs2", "--expect", "certified"});
    CHECK(r.code == 0);
    CHECK(r.out.find("non-displaceability certified") != std::string::npos);
    CHECK(r.out.find("R^2 + R + 1") != std::string::npos);
    CHECK(run({"certify", "--preset", "theta_s2xs2", "--search", "--expect", "certified"}).code == 0);
}

TEST_CASE("germ")
{
    auto r = run({"germ", "clifford_2", "theta", "--expect", "NotEquivalent"});
    CHECK(r.code == 0);
    CHECK(r.out.find("covector counts 4 ≠ 3") != std::string::npos);
    auto v = run({"germ", "theta_s0", "--param", "1/2", "--at", "1,1"});
    CHECK(v.code == 0);
    CHECK(v.out.find("= 3/2") != std::string::npos);
    CHECK(run({"germ", "theta_s0", "--at", "0,0", "--expect", "undefined-at-origin"}).code == 0);
}

TEST_CASE("trees and pearl")
{
    auto r = run({"trees", "5", "--format", "json"});
    CHECK(r.code == 0);
    auto j = io::json::parse(r.out);
    CHECK(j["count"] == 12);
    CHECK(j["schema"] == "1");
    CHECK(run({"trees", "17"}).code == 2);
    auto p = run({"pearl", "--preset", "theta_s2xs2"});
    CHECK(p.code == 0);
    CHECK(p.out.find("d2 D_tau* = R^-1*T*S2 + R^-1*T^-1*S1") != std::string::npos);
}

TEST_CASE("input errors exit 2 with structured diagnostics")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"classes", "--in", "/nonexistent.json"}).code == 2);
    auto j = run({"classes", "--in", "/nonexistent.json", "--format", "json"});
    auto diag = io::json::parse(j.err);
    CHECK(diag["error"]["kind"] == "InvalidInput");
    CHECK(run({"classes", "--format", "yaml"}).code == 2);
}

TEST_CASE("file inputs round-trip through the JSON formats")
{
    auto dir = std::filesystem::temp_directory_path() / "twistkit_cli_test";
    std::filesystem::create_directories(dir);

    io::ProblemFile problem{presets::theta_s2xs2_table(), std::nullopt};
    std::ofstream(dir / "theta.json") << io::problem_to_json(problem).dump(2);
    auto a = run({"classes", "--in", (dir / "theta.json").string(), "--format", "json"});
    auto b = run({"classes", "--preset", "theta_s2xs2", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    io::PotentialFile pot{presets::theta_s2xs2_potential(), {presets::theta_phi()}, {presets::theta_regularity()}};
    std::ofstream(dir / "potential.json") << io::potential_to_json(pot).dump(2);
    auto c = run({"certify", "--in", (dir / "potential.json").string(), "--format", "json"});
    auto d = run({"certify", "--preset", "theta_s2xs2", "--format", "json"});
    CHECK(c.code == 0);
    CHECK(c.out == d.out);

    std::ofstream(dir / "germ.json") << io::germ_to_json(presets::theta()).dump();
    auto e = run({"germ", (dir / "germ.json").string(), "theta", "--expect", "Equivalent"});
    CHECK(e.code == 0);

    // unbounded tables need bounds
    io::json open = {{"basis", {"a", "b"}}, {"boundary", {{1, 0}}}, {"rows", io::json::array()}, {"maslov", {2, 0}}};
    std::ofstream(dir / "open.json") << open.dump();
    auto u = run({"classes", "--in", (dir / "open.json").string()});
    CHECK(u.code == 2);
    CHECK(u.err.find("UnboundedRegion") != std::string::npos);
    auto bounded = run({"classes", "--in", (dir / "open.json").string(), "--bounds", "-1,1", "--expect", "3"});
    CHECK(bounded.code == 0);

    auto o = run({"classes", "--preset", "theta_s2xs2", "--out", (dir / "report.txt").string()});
    CHECK(o.out.empty());
    CHECK(slurp(dir / "report.txt").find("5 candidate classes") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("reports are byte-identical across runs and match the golden files")
{
    const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
        {"classes.json", {"classes", "--preset", "theta_s2xs2", "--format", "json"}},
        {"pearl.json", {"pearl", "--preset", "theta_s2xs2", "--format", "json"}},
        {"certify.json", {"certify", "--preset", "theta_s2xs2", "--format", "json"}},
        {"germ.json", {"germ", "clifford_2", "theta", "--format", "json"}},
        {"trees6.json", {"trees", "6", "--format", "json", "--seed", "7"}},
    };
    for (const auto& [file, args] : cases)
    {
        auto first = run(args);
        auto second = run(args);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
        CHECK_MESSAGE(first.out == slurp(golden_dir / file), file);
    }
}

TEST_CASE("the CLI is a thin adapter")
{
    auto j = io::json::parse(run({"classes", "--preset", "theta_s2xs2", "--format", "json"}).out);
    auto direct = enumerate_candidate_classes(presets::theta_s2xs2_table());
    REQUIRE(j["classes"].size() == direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i)
        CHECK(j["classes"][i]["coefficients"].get<IntVector>() == direct[i].coefficients);

    auto t = io::json::parse(run({"trees", "7", "--format", "json"}).out);
    auto trees = enumerate_ample_trees(7);
    REQUIRE(t["trees"].size() == trees.size());
    for (std::size_t i = 0; i < trees.size(); ++i)
        CHECK(t["trees"][i]["canonical"] == canonical_form(trees[i]));
}
