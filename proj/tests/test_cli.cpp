#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "slq/blowup.hpp"
#include "slq/cli.hpp"
#include "slq/dot.hpp"
#include "slq/error.hpp"
#include "slq/pairdoc.hpp"
#include "slq/stabilize.hpp"
#include "slq/verify.hpp"

using namespace slq;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("pair documents round-trip for every constructed pair") {
    for (const InputCase& input : all_cases()) {
        CAPTURE(input.describe());
        LogPair pair = build_case(input);
        CHECK(parse_pair(render_pair(pair)) == pair);
        StablePairRecord rec = stabilize(input);
        CHECK(parse_pair(render_pair(rec.final_pair)) == rec.final_pair);
    }
}

TEST_CASE("pair documents reject decimals and malformed input") {
    CHECK_THROWS_WITH_AS(parse_pair("pair\ncomponent X\n  curve a self=0.5\n"),
                         doctest::Contains("decimal"), Error);
    CHECK_THROWS_WITH_AS(parse_pair("component X\n"), doctest::Contains("pair"), Error);
    CHECK_THROWS_WITH_AS(parse_pair("pair\nnonsense here\n"),
                         doctest::Contains("unknown directive"), Error);
}

TEST_CASE("cover documents round-trip") {
    CoverDescriptor cover;
    cover.components.push_back({"P1", 1, 3, Rat(4, 3), Rat(5, 3)});
    cover.components.push_back({"P2", 1, 3, Rat(4, 3), Rat(5, 3)});
    for (int i = 0; i < 6; ++i) {
        cover.branch_points.push_back({"a" + std::to_string(i), "P1", 1});
        cover.branch_points.push_back({"b" + std::to_string(i), "P2", 1});
    }
    cover.topology = {CurveTopology::GenusTwoTotallyRamified,
                      CurveTopology::GenusTwoTotallyRamified};
    CoverDescriptor parsed = parse_cover(render_cover(cover));
    CHECK(render_cover(parsed) == render_cover(cover));
    CHECK(classify_cover(parsed) == CaseTag::StableChainThirdThird);
}

TEST_CASE("stabilize subcommand prints the record") {
    CliRun r = cli({"stabilize", "hyperelliptic", "--sub", "unramified"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1/9(1,2)") != std::string::npos);
    CHECK(r.out.find("Z4") != std::string::npos);
    CHECK(r.out.find("Q-Gorenstein smoothing") != std::string::npos);
    CHECK(r.out.find("transform log") != std::string::npos);

    CliRun bad = cli({"stabilize", "no-such-case"});
    CHECK(bad.code == 2);
}

TEST_CASE("flip subcommand applies a type I flip from a file") {
    LogPair pair = build_case(parse_case("hyperelliptic", {"unramified"}));
    auto path = write_temp("slq_f4pair.slq", render_pair(pair));
    CliRun r = cli({"flip", "type1", path.string(), "--curve", "sigma"});
    CHECK(r.code == 0);
    CHECK(r.out.find("contract_chain") != std::string::npos);
    CHECK(r.out.find("self=-4/9") != std::string::npos);

    // A (-3) directrix is rejected with the violated clause on stderr.
    LogPair bad = pair;
    bad.components[0].curve("sigma").self_int = Rat(-3);
    bad.components[0].set_product("sigma", "H", Rat(1));
    auto bad_path = write_temp("slq_badpair.slq", render_pair(bad));
    CliRun rb = cli({"flip", "type1", bad_path.string(), "--curve", "sigma"});
    CHECK(rb.code == 1);
    CHECK(rb.err.find("self-intersection -4 required") != std::string::npos);
}

TEST_CASE("flip subcommand with staging routes to the staged pipelines") {
    LogPair pair = build_case(parse_case("hyperelliptic", {"unramified"}));
    auto path = write_temp("slq_staged.slq", render_pair(pair));
    CliRun direct = cli({"flip", "type1", path.string(), "--curve", "sigma"});
    CliRun staged = cli({"flip", "type1", path.string(), "--curve", "sigma", "--staging", "2"});
    CHECK(staged.code == 0);
    // Identical final pair document after the log section.
    auto tail = [](const std::string& s) { return s.substr(s.find("\npair")); };
    CHECK(tail(staged.out) == tail(direct.out));
}

TEST_CASE("parse errors exit with code 2") {
    auto path = write_temp("slq_broken.slq", "pair\ncomponent X\n  curve a self=1/0\n");
    CliRun r = cli({"dot", path.string()});
    CHECK(r.code == 2);
    CliRun missing = cli({"dot", "/nonexistent/file.slq"});
    CHECK(missing.code == 2);
}

TEST_CASE("usage errors exit with code 64") {
    CHECK(cli({}).code == 64);
    CHECK(cli({"frobnicate"}).code == 64);
    CHECK(cli({"flip", "type1"}).code == 64);
    CHECK(cli({"help"}).code == 0);
}

TEST_CASE("table subcommand matches the embedded rows") {
    CliRun r = cli({"table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all 8 rows match the embedded table") != std::string::npos);
    CHECK(r.out.find("P(9,1,2)") != std::string::npos);
    CHECK(r.out.find("(xy=0) in 1/3(2,1,1)") != std::string::npos);
}

TEST_CASE("verify subcommand mirrors the acceptance suite") {
    bool all = true;
    for (const CriterionResult& c : run_acceptance()) all = all && c.passed;
    CliRun r = cli({"verify"});
    CHECK(r.code == (all ? 0 : 1));
    CHECK(r.out.find("criterion 1") != std::string::npos);
    CHECK(r.out.find("criterion 11") != std::string::npos);
}

TEST_CASE("classify-cover and slc-check commands") {
    CoverDescriptor tail;
    tail.components.push_back({"P", 0, 1, Rat(1), Rat(5)});
    for (int i = 0; i < 12; ++i)
        tail.branch_points.push_back({"b" + std::to_string(i), "P", 1});
    tail.topology = {CurveTopology::HyperellipticTail};
    auto path = write_temp("slq_cover.slq", render_cover(tail));

    CliRun r = cli({"classify-cover", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("case: hyperelliptic") != std::string::npos);
    CHECK(r.out.find("maroni 4") != std::string::npos);

    CliRun slc = cli({"slc-check", path.string(), "--weight", "2/3"});
    CHECK(slc.code == 0);
    CHECK(slc.out.find("slc at weight 2/3: true") != std::string::npos);
}

TEST_CASE("dot export is deterministic and draws the blown-up dual graph") {
    LogPair pair = build_case(parse_case("hyperelliptic", {"unramified"}));
    pair = blow_up_at(pair, "X", "p", "E1");
    std::string q;
    for (const MarkedPoint& p : pair.points)
        if (p.contains("H") && p.contains("E1")) q = p.id;
    pair = blow_up_at(pair, "X", q, "E2");

    std::string dot = export_dot(pair);
    CHECK(dot == export_dot(pair));  // byte-identical
    CHECK(dot.find("\"X:sigma\" [label=\"sigma (-5)\"]") != std::string::npos);
    CHECK(dot.find("\"X:E1\" [label=\"E1 (-2)\"]") != std::string::npos);
    CHECK(dot.find("\"X:E2\" [label=\"E2 (-1)\"]") != std::string::npos);
    CHECK(dot.find("\"X:F\" [label=\"F (-1)\"]") != std::string::npos);
    CHECK(dot.find("\"X:E1\" -- \"X:sigma\"") != std::string::npos);
    CHECK(dot.find("\"X:E1\" -- \"X:E2\"") != std::string::npos);

    CHECK(export_dot(LogPair{}) == "graph pair {\n}\n");
}

TEST_CASE("dot export of the double-flip exceptional chain") {
    // The composite of the type II and type I blow-ups on the F1 side of
    // the intersecting-directrix configuration: the exceptional locus is
    // the chain G2, G1, sigma2, E3, E2, E1 with self-intersections
    // (-1, -2, -5, -1, -2, -2).
    LogPair pair = build_case(parse_case("f3f1", {"intersecting"}));
    std::string at = "p";
    for (const Label& e : {Label("E1"), Label("E2"), Label("E3")}) {
        pair = blow_up_at(pair, "X2", at, e);
        at.clear();
        for (const MarkedPoint& mp : pair.points)
            if (mp.component == "X2" && mp.contains("sigma2") && mp.contains(e)) at = mp.id;
        REQUIRE(!at.empty());
    }
    pair = blow_up_at(pair, "X2", "q", "G1");
    std::string q2;
    for (const MarkedPoint& mp : pair.points)
        if (mp.component == "X2" && mp.contains("H") && mp.contains("G1")) q2 = mp.id;
    REQUIRE(!q2.empty());
    pair = blow_up_at(pair, "X2", q2, "G2");

    const CurveConfig& cfg = pair.component("X2");
    CHECK(cfg.curve("G2").self_int == Rat(-1));
    CHECK(cfg.curve("G1").self_int == Rat(-2));
    CHECK(cfg.curve("sigma2").self_int == Rat(-5));
    CHECK(cfg.curve("E3").self_int == Rat(-1));
    CHECK(cfg.curve("E2").self_int == Rat(-2));
    CHECK(cfg.curve("E1").self_int == Rat(-2));
    CHECK(cfg.product("G2", "G1") == Rat(1));
    CHECK(cfg.product("G1", "sigma2") == Rat(1));
    CHECK(cfg.product("sigma2", "E3") == Rat(1));
    CHECK(cfg.product("E3", "E2") == Rat(1));
    CHECK(cfg.product("E2", "E1") == Rat(1));

    std::string dot = export_dot(pair);
    CHECK(dot.find("\"X2:sigma2\" [label=\"sigma2 (-5)\"]") != std::string::npos);
    CHECK(dot.find("\"X2:G1\" -- \"X2:sigma2\"") != std::string::npos);
    CHECK(dot.find("\"X2:E3\" -- \"X2:sigma2\"") != std::string::npos);
}
