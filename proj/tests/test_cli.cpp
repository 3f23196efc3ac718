#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = qdt::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dt on the two-loop quiver") {
    const Run r = run({"dt", "--quiver", "[[2]]", "--order", "3"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["dt"][0]["d"] == json::array({1}));
    CHECK(j["dt"][0]["dt_u"] == "u");
    CHECK(j["dt"][0]["dt_q"] == "q^1/2");
    CHECK(j["dt"][0]["ker_dims"] == json::parse(R"({"3":1})"));
    CHECK(j["dt"][1]["dt_u"] == "u^4");
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"series", "--quiver", "[[0,1],[1,0]]", "--order", "3", "--kind", "character"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("text output") {
    const Run r = run({"dt", "-q", "[[0,1],[1,0]]", "-n", "2", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(1,1)  DT = 1") != std::string::npos);
}

TEST_CASE("koszul checks succeed") {
    const Run r = run({"koszul", "--quiver", "[[0,1],[1,0]]", "--order", "4"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["koszul"]["ok"] == true);
    CHECK(j["change_of_variables"]["ok"] == true);
    CHECK(run({"koszul", "--quiver", "[[1,1],[1,1]]", "--order", "3", "--format", "text"}).code == 0);
}

TEST_CASE("grobner failure reports a witness") {
    const Run r = run({"grobner", "--quiver", "[[0,1],[1,0]]"});
    CHECK(r.code == 1);
    const json j = json::parse(r.out);
    CHECK(j["quadratic_gb"]["ok"] == false);
    CHECK(j["quadratic_gb"]["d"] == json::array({2, 1}));
    CHECK(j["quadratic_gb"]["degree"] == 4);
    CHECK(j["degree_cap"] == 14);
    CHECK(run({"grobner", "--quiver", "[[2,1],[1,1]]"}).code == 0);
}

TEST_CASE("basis and partitions") {
    const Run b = run({"basis", "--m", "2", "--len", "2", "--level", "1"});
    CHECK(b.code == 0);
    CHECK(json::parse(b.out)["words"].size() == 5);
    CHECK(run({"partitions", "--m", "2", "--len", "3", "--level", "4"}).code == 0);
    CHECK(run({"partitions", "--m", "2", "--len", "4", "--level", "4", "--prefix-rule", "smaller"}).code == 1);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run({"dt", "--quiver", "[[0,1],[2,0]]"}).code == 2);
    CHECK(run({"dt", "--quiver", "/nonexistent/quiver.json"}).code == 2);
    CHECK(run({"dt"}).code == 2);
    CHECK(run({"dt", "--quiver", "[[1]]", "--order", "-1"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"dt", "--quiver", "[[1]]", "--bogus"}).code == 2);
    CHECK(run({"dt", "--quiver", "[[1]]", "--format", "xml"}).code == 2);
    const Run r = run({"dt", "--quiver", "[[0,1],[2,0]]"});
    CHECK(r.err.find("symmetric") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    const Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dt") != std::string::npos);
}
