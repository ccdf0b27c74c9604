#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct RunResult {
    std::string out;
    int code;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("PARALAT_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "PARALAT_CLI must point at the command-line binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {out, code};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start < s.size()) {
        size_t pos = s.find('\n', start);
        if (pos == std::string::npos) pos = s.size();
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("cli: formula emits the exact error term") {
    auto r = run_cli("formula --n 7");
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "N,error,error_exact");
    CHECK(ls[1] == "7,-1.666667,-5/3");
}

TEST_CASE("cli: count on the rotational paraboloid") {
    auto r = run_cli("count --dim 3 --q 1,0,1 --r 2");
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[1] == "2,33,0");
}

TEST_CASE("cli: verification sweep reports zero mismatches and exits cleanly") {
    auto r = run_cli("verify --max 101 --jobs 2");
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(!ls.empty());
    CHECK(ls.back() == "mismatches,0");
}

TEST_CASE("cli: farey arc row") {
    auto r = run_cli("farey --x 0.3 --order 3");
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "x,a,q,lo,hi");
    CHECK(ls[1] == "0.300000000,1,3,1/4,2/5");
}

TEST_CASE("cli: gauss row keeps the closed form empty at even moduli") {
    auto r = run_cli("gauss --m 1 --n 4");
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[1] == "1,4,2.000000000,2.000000000,");
    auto odd = run_cli("gauss --m 1 --n 3");
    CHECK(lines_of(odd.out)[1] == "1,3,0.000000000,1.732050808,1.732050808");
}

TEST_CASE("cli: unknown options fail with exit 1") {
    CHECK(run_cli("--frobnicate").code == 1);
    CHECK(run_cli("formula --n 7 --frobnicate").code == 1);
    CHECK(run_cli("formula").code == 1);        // missing --n
    CHECK(run_cli("formula --n 4").code == 1);  // even N rejected by the library
}

TEST_CASE("cli: json output mirrors the csv columns") {
    auto r = run_cli("--json formula --n 9");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("rows"));
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["N"] == "9");
    CHECK(j["rows"][0]["error_exact"] == "5");

    auto sc = run_cli("--json scan --dim 2 --q 1 --r-list 1,3,7");
    auto js = nlohmann::json::parse(sc.out);
    REQUIRE(js["rows"].size() == 3);
    CHECK(js["rows"][2]["R"] == "7");
    CHECK(js["rows"][2]["error"] == "-1.666667");
    CHECK(js.contains("fit"));

    auto ve = run_cli("--json verify --max 31");
    auto jv = nlohmann::json::parse(ve.out);
    CHECK(jv["mismatches"] == 0);
    CHECK(jv["rows"].empty());
}

TEST_CASE("cli: repeated seeded sweeps are byte identical") {
    std::string args = "expsum --q 1,1/2,2 --n 144 --samples 12 --seed 9";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    REQUIRE(lines_of(a.out).size() == 13);
    std::string hl = "hl --n 500 --samples 8 --seed 3";
    CHECK(run_cli(hl).out == run_cli(hl).out);
}

TEST_CASE("cli: scan range flags expand correctly") {
    auto r = run_cli("scan --dim 3 --q 1,0,1 --r-min 2 --r-max 8 --r-step 3");
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 4);  // header + R = 2, 5, 8
    CHECK(ls[1].substr(0, 2) == "2,");
    CHECK(ls[2].substr(0, 2) == "5,");
    CHECK(ls[3].substr(0, 2) == "8,");
}

TEST_CASE("cli: omega modes") {
    auto fam = run_cli("omega --mode family --m 1");
    CHECK(lines_of(fam.out).size() == 5);
    auto plus = run_cli("omega --mode plus --m-max 5");
    auto pl = lines_of(plus.out);
    REQUIRE(pl.size() == 3);
    CHECK(pl[1] == "1,1,7/3,2.333333");
    CHECK(pl[2] == "5,25,31/3,2.066667");
    auto minus = run_cli("omega --mode minus --max 100 --top 1");
    auto ml = lines_of(minus.out);
    REQUIRE(ml.size() == 2);
    CHECK(ml[1] == "95,-101/3,-3.454127");
    auto b3 = run_cli("omega --mode boundary3d --q 1,0,1 --r-list 1,4");
    auto bl = lines_of(b3.out);
    REQUIRE(bl.size() == 3);
    CHECK(bl[1] == "1,6,6.000000");
    CHECK(bl[2] == "4,22,5.500000");
}

TEST_CASE("cli: count rejects mixed shift flags") {
    auto r = run_cli("count --dim 3 --q 1,0,1 --r 2 --beta 0.5,0 --beta-exact 1/2,0");
    CHECK(r.code == 1);
}
