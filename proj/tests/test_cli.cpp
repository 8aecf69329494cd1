#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <ctmac/cli.hpp>

using namespace ctmac;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "ctmac");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string &text)
{
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(nlohmann::json::parse(line));
    }
    return out;
}

std::string strip_timing(const std::string &text)
{
    return std::regex_replace(text, std::regex("\"millis\":[-+0-9.eE]+"), "\"millis\":0");
}

} // namespace

TEST_CASE("verify aflt: well-formed point")
{
    const Run r = run({"verify", "aflt", "--n", "2", "--a", "1", "--b", "1", "--c", "2", "--lambda", "1", "--mu", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS] aflt") != std::string::npos);
}

TEST_CASE("usage errors")
{
    CHECK(run({"verify", "aflt", "--lambda", "1,3"}).code == 2);
    CHECK(run({"verify", "aflt", "--bogus"}).code == 2);
    CHECK(run({"sweep", "--min-n", "3", "--max-n", "2"}).code == 2);
    CHECK(run({"sweep", "--max-b", "-1"}).code == 2);
    CHECK(run({"props", "run", "--suite", "nope"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("sweep: q-Morris points all equal")
{
    const Run r = run({"--json", "sweep", "--max-n", "2", "--max-a", "2", "--max-b", "2", "--max-c", "2", "--max-wt", "0"});
    CHECK(r.code == 0);
    const auto js = lines(r.out);
    CHECK(js.size() == 2 * 27);
    for (const auto &j : js) {
        CHECK(j["check"] == "aflt");
        CHECK(j["equal"] == true);
        for (const char *key : {"params", "lhs", "rhs", "notes", "millis", "terms_peak"}) {
            CHECK(j.contains(key));
        }
    }
}

TEST_CASE("sweep: cheapest points first")
{
    const Run r = run({"--json", "sweep", "--max-n", "2", "--max-a", "1", "--max-b", "1", "--max-c", "1", "--max-wt", "1"});
    CHECK(r.code == 0);
    const auto js = lines(r.out);
    REQUIRE(!js.empty());
    CHECK(js.front()["params"]["n"] == "1");
    CHECK(js.back()["params"]["n"] == "2");
}

TEST_CASE("roots below the regime is refused")
{
    const Run r = run({"--json", "verify", "roots", "--n", "1", "--b", "1", "--c", "2", "--lambda", "1"});
    CHECK(r.code == 0);
    const auto js = lines(r.out);
    REQUIRE(js.size() == 1);
    CHECK(js[0]["refused"] == true);
    CHECK(js[0]["notes"] != "");
}

TEST_CASE("props run: keylemma passes")
{
    const Run r = run({"--json", "props", "run", "--suite", "keylemma"});
    CHECK(r.code == 0);
    for (const auto &j : lines(r.out)) {
        CHECK(j["equal"] == true);
    }
}

TEST_CASE("same seed gives the same JSON, with any worker count")
{
    const std::vector<std::string> args{"--json", "--seed", "7", "props", "run", "--suite", "cai"};
    const std::string a = strip_timing(run(args).out);
    const std::string b = strip_timing(run(args).out);
    CHECK(a == b);
    std::vector<std::string> par = args;
    par.insert(par.begin(), {"--workers", "4"});
    CHECK(strip_timing(run(par).out) == a);
    const std::vector<std::string> other{"--json", "--seed", "8", "props", "run", "--suite", "cai"};
    CHECK(strip_timing(run(other).out) != a);
}

TEST_CASE("mac show renders expansions")
{
    const Run m = run({"mac", "show", "--lambda", "2,1"});
    CHECK(m.code == 0);
    CHECK(m.out.find("1 · m_(2,1)") != std::string::npos);
    const Run g = run({"--json", "mac", "show", "--lambda", "1", "--basis", "g"});
    const auto js = lines(g.out);
    REQUIRE(js.size() == 1);
    CHECK(js[0]["terms"].size() == 1);
    CHECK(run({"mac", "show", "--lambda", "2", "--basis", "x"}).code == 2);
}

TEST_CASE("dump flags")
{
    const Run r = run({"--dump-integrand", "--dump-p-basis", "verify", "qmorris", "--n", "1", "--a", "1", "--b", "1", "--c", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("x0^-1*x1") != std::string::npos);
    CHECK(r.out.find("1 · p_()") != std::string::npos);
}

TEST_CASE("report rendering")
{
    Report r;
    r.check = "aflt";
    r.param("n", 1);
    r.lhs = "1";
    r.rhs = "q";
    CHECK(report_text(r) == "[FAIL] aflt n=1: 1 != q");
    CHECK(report_json(r, false) ==
          R"({"check":"aflt","params":{"n":"1"},"lhs":"1","rhs":"q","equal":false,"refused":false,"notes":""})");
}
