#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "tropical/errors.hpp"
#include "tropical/fixtures.hpp"
#include "tropical/run.hpp"

using namespace tropical;

namespace {

const std::string kFixtureDir = TROPDIV_FIXTURE_DIR;

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "tropdiv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
    auto r = invoke(std::move(args));
    auto report = Json::parse(r.out);
    CHECK(report["exit_code"].get<int>() == r.code);
    return report;
}

Json without_runtime(Json report) {
    report.erase("runtime");
    report["config"].erase("jobs");
    return report;
}

} // namespace

TEST_CASE("fixture families") {
    CHECK(genus(generate_fixture("flower:3")) == 3);
    CHECK(genus(generate_fixture("banana:3")) == 2);
    CHECK(genus(generate_fixture("complete:4")) == 3);
    CHECK(genus(generate_fixture("dumbbell")) == 2);
    CHECK(genus(generate_fixture("cycle:5")) == 1);
    CHECK(genus(generate_fixture("path:4")) == 0);

    SUBCASE("closed forms") {
        for (int n = 2; n <= 7; ++n) {
            for (const std::string family : {"banana", "flower", "complete", "cycle", "path"}) {
                auto spec = parse_fixture_spec(family + ":" + std::to_string(n));
                auto g = generate_fixture(spec);
                CAPTURE(describe(spec));
                REQUIRE(family_genus(spec));
                CHECK(*family_genus(spec) == genus(g));
            }
        }
    }
    SUBCASE("banana 3 is theta") {
        auto a = generate_fixture("banana:3");
        auto b = generate_fixture("theta");
        CHECK(a.vertex_count() == b.vertex_count());
        CHECK(a.edge_count() == b.edge_count());
    }
    SUBCASE("random graphs are connected and reproducible") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            FixtureSpec spec{"random", {7, 10, static_cast<std::int64_t>(seed)}, LengthMode::random, 6, seed};
            auto a = generate_fixture(spec);
            auto b = generate_fixture(spec);
            CHECK(genus(a) == 10 - 7 + 1);
            CHECK(a.edge_count() == b.edge_count());
            for (std::size_t e = 0; e < a.edge_count(); ++e) {
                CHECK(a.edge(e).a == b.edge(e).a);
                CHECK(a.edge(e).b == b.edge(e).b);
                CHECK(a.edge(e).length == b.edge(e).length);
                CHECK(a.edge(e).length.denominator() <= 6);
            }
        }
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS_AS(generate_fixture("banana:1"), ParameterError);
        CHECK_THROWS_AS(generate_fixture("path:0"), ParameterError);
        CHECK_THROWS_AS(generate_fixture("random:5,3,1"), ParameterError);
        CHECK_THROWS_AS(generate_fixture("petal:3"), ParameterError);
        CHECK_THROWS_AS(generate_fixture("flower:x"), ParameterError);
    }
}

TEST_CASE("input diagnostics") {
    SUBCASE("theta file") {
        auto report = invoke_json({"genus", "--graph", kFixtureDir + "/theta.tg"});
        CHECK(report["result"]["graph"]["vertices"] == 2);
        CHECK(report["result"]["graph"]["edges"] == 3);
        CHECK(report["result"]["genus"] == 2);
    }
    SUBCASE("offset out of range") {
        auto report = invoke_json({"rank", "--fixture", "theta", "--divisor", "chip 1 on e1 3/2"});
        CHECK(report["exit_code"] == kExitUsage);
        CHECK(report["error"]["kind"] == "parse");
        CHECK(report["error"]["message"].get<std::string>().find("offset out of range") != std::string::npos);
    }
    SUBCASE("missing file") {
        auto report = invoke_json({"genus", "--graph", kFixtureDir + "/nope.tg"});
        CHECK(report["exit_code"] == kExitUsage);
    }
}

TEST_CASE("command reports") {
    SUBCASE("rank of K on theta") {
        auto report = invoke_json({"rank", "--graph", kFixtureDir + "/theta.tg", "--divisor", "K"});
        CHECK(report["exit_code"] == kExitPass);
        const auto& r = report["result"]["ranks"][0]["report"];
        CHECK(r["rank"] == 1);
        CHECK(r["method"] == "recursive");
        CHECK(r["resolution"] == 1);
        CHECK(r["obstruction"].size() == 2);
        CHECK(report["result"]["model"]["base"] == 0);
    }
    SUBCASE("both rank methods") {
        auto report = invoke_json({"rank", "--fixture", "complete:4", "--divisor", "K", "--method", "both"});
        CHECK(report["exit_code"] == kExitPass);
    }
    SUBCASE("midpoint divisor file") {
        auto report = invoke_json({"equiv", "--graph", kFixtureDir + "/theta.tg", "--divisor",
                                   kFixtureDir + "/theta_midpoints.div", "--divisor", kFixtureDir + "/theta_uv.div"});
        CHECK(report["result"]["model"]["scale"] == 2);
        CHECK(report["result"]["equivalent"] == true);
    }
    SUBCASE("clifford scan on flower-3") {
        auto report = invoke_json({"clifford-scan", "--fixture", "flower:3"});
        CHECK(report["exit_code"] == kExitPass);
        const auto& classes = report["result"]["scan"]["equality_classes"];
        REQUIRE(classes.size() == 3);
        CHECK(classes[0]["representative"] == Json::object());
        CHECK(classes[1]["representative"] == Json{{"c", 2}});
        CHECK(classes[2]["representative"] == Json{{"c", 4}});
    }
    SUBCASE("hunt on K5") {
        auto report = invoke_json({"hunt", "--fixture", "complete:5", "--budget", "10000", "--seed", "7"});
        CHECK(report["exit_code"] == kExitPass);
        const auto& hunt = report["result"]["hunt"];
        CHECK(hunt["resolution"] == 2);
        REQUIRE(hunt["entries"].size() == 1);
        CHECK(hunt["entries"][0]["candidates"].empty());
    }
    SUBCASE("every command runs on theta") {
        for (const auto& command : known_commands()) {
            if (command == "hunt") continue;
            std::vector<std::string> args{command, "--fixture", "theta"};
            if (command == "reduce" || command == "rank" || command == "equiv") {
                args.insert(args.end(), {"--divisor", "K", "--divisor", "chip 2 at u"});
            }
            auto report = invoke_json(args);
            CAPTURE(command);
            CHECK(report["exit_code"] == kExitPass);
            CHECK(report["config"]["command"] == command);
            CHECK(report["config"]["resolution"] == effective_resolution(*parse_command_line(
                                                      static_cast<int>(2), std::array<const char*, 2>{"tropdiv", command.c_str()}.data(),
                                                      std::cout)));
        }
    }
    SUBCASE("scope errors are reported, not thrown") {
        auto report = invoke_json({"g12", "--fixture", "cycle:4"});
        CHECK(report["exit_code"] == kExitUsage);
        CHECK(report.contains("error"));
    }
    SUBCASE("resource errors") {
        auto report = invoke_json({"rank", "--fixture", "theta", "--divisor", "chip 70 at u", "--method", "brute-force"});
        CHECK(report["exit_code"] == kExitResource);
    }
}

TEST_CASE("usage errors exit 2") {
    CHECK(invoke({"frobnicate", "--fixture", "theta"}).code == kExitUsage);
    CHECK(invoke({"rank", "--fixture", "theta", "--graph", kFixtureDir + "/theta.tg", "--divisor", "K"}).code ==
          kExitUsage);
    CHECK(invoke({"genus", "--fixture", "theta", "--format", "xml"}).code == kExitUsage);
    CHECK(invoke({"genus", "--fixture", "theta", "--jobs", "zero"}).code == kExitUsage);
    CHECK(invoke({"genus", "--fixture", "theta", "--fixture", "flower:3"}).code == kExitUsage);
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"--help"}).code == kExitPass);
}

TEST_CASE("reports are reproducible") {
    const std::vector<std::vector<std::string>> runs = {
        {"clifford-scan", "--fixture", "complete:4", "--seed", "3"},
        {"rr-check", "--fixture", "dumbbell", "--seed", "11"},
        {"hunt", "--fixture", "complete:5", "--budget", "3000", "--seed", "7"},
    };
    for (const auto& args : runs) {
        auto a = args;
        a.insert(a.end(), {"--jobs", "1"});
        auto b = args;
        b.insert(b.end(), {"--jobs", "4"});
        auto first = without_runtime(invoke_json(a));
        auto again = without_runtime(invoke_json(a));
        auto parallel = without_runtime(invoke_json(b));
        CAPTURE(args[0]);
        CHECK(first.dump() == again.dump());
        CHECK(first.dump() == parallel.dump());
    }
}

TEST_CASE("text format") {
    auto r = invoke({"rank", "--fixture", "theta", "--divisor", "K", "--format", "text"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("tropdiv rank") == 0);
    CHECK(r.out.find("PASSED (exit 0)") != std::string::npos);
}
