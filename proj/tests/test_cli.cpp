#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "qhyp/numeric.hpp"
#include "test_util.hpp"

#ifndef QHYP_CLI_PATH
#error "QHYP_CLI_PATH must name the qhyp executable"
#endif

using json = nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out, err;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string errfile = "qhyp_cli_test_stderr.txt";
    std::string cmd = env + " " + std::string(QHYP_CLI_PATH) + " " + args + " 2>" + errfile;
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    std::ifstream in(errfile);
    std::stringstream ss;
    ss << in.rdbuf();
    r.err = ss.str();
    std::remove(errfile.c_str());
    return r;
}

}  // namespace

TEST_CASE("nz prints the longitude datum of LLR") {
    Run r = run("nz --word LLR");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    const json& d = j["datum"];
    CHECK(d["A"] == json::parse("[[0,1,1],[2,0,0],[1,-1,1]]"));
    CHECK(d["B"] == json::parse("[[2,0,0],[0,2,2],[0,0,2]]"));
    CHECK(d["nu"] == json::parse("[2,2,1]"));
    CHECK(j["params"]["word"] == "LLR");
}

TEST_CASE("non pseudo-Anosov words exit with status 2") {
    Run r = run("bwy --word LL --n 5");
    CHECK(r.status == 2);
    CHECK(r.err.find("word is not pseudo-Anosov") != std::string::npos);
    json e = json::parse(r.err);
    CHECK(e["error"]["code"] == "domain");
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run("bwy --word LR").status == 2);  // --n missing
    CHECK(run("frobnicate").status == 2);
    CHECK(run("bwy --word LR --n 5 --format xml").status == 2);
    CHECK(run("bwy --word LR --n 4").status == 2);  // even n without --half
}

TEST_CASE("LR headline value") {
    Run r = run("bwy --word LR --n 20001 --a 1 --digits 40");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    const json& a = j["rows"][0]["abs"];
    CHECK(a["exponent"] == 1402);
    CHECK(a["mantissa"].get<std::string>().substr(0, 12) == "4.0108263579");
}

TEST_CASE("outputs round-trip and --digits only changes trailing digits") {
    using namespace qhyp;
    Run lo = run("bwy --word LLR --n 7 --a 2 --m 0:2 --digits 30");
    Run hi = run("bwy --word LLR --n 7 --a 2 --m 0:2 --digits 50");
    REQUIRE(lo.status == 0);
    REQUIRE(hi.status == 0);
    json jl = json::parse(lo.out), jh = json::parse(hi.out);
    REQUIRE(jl["rows"].size() == 3u);
    for (size_t i = 0; i < 3; ++i) {
        // components that vanish exactly carry only rounding noise; compare the modulus
        const json& a = jl["rows"][i]["abs"];
        const json& b = jh["rows"][i]["abs"];
        CHECK(a["exponent"] == b["exponent"]);
        std::string ma = a["mantissa"], mb = b["mantissa"];
        CHECK(ma.substr(0, 25) == mb.substr(0, 25));

        PrecisionContext ctx(30);
        ScopedPrecision sp(ctx);
        for (const char* part : {"re", "im"}) {
            const json& c = jl["rows"][i]["value"][part];
            std::string mc = c["mantissa"];
            std::string text = mc + "e" + std::to_string(c["exponent"].get<long>());
            DecimalString back = to_decimal(parse_real(text), 30);
            CHECK(back.mantissa == mc);
            CHECK(back.exponent == c["exponent"].get<long>());
        }
    }
}

TEST_CASE("csv and plain formats") {
    Run c = run("bwy --word LR --n 5 --m 0:1 --method trace --format csv --digits 20");
    REQUIRE(c.status == 0);
    std::istringstream in(c.out);
    std::string header, row1, row2;
    std::getline(in, header);
    std::getline(in, row1);
    std::getline(in, row2);
    CHECK(header.rfind("m,value.re,value.im,abs", 0) == 0);
    CHECK(row1.rfind("0,", 0) == 0);
    CHECK(row2.rfind("1,", 0) == 0);

    Run p = run("shapes --word LR --format plain --digits 20");
    REQUIRE(p.status == 0);
    CHECK(p.out.find("summary.volume = 2.02988321281930725") != std::string::npos);
}

TEST_CASE("seed and environment default") {
    Run a = run("shapes --word LLRLR --seed 7");
    Run b = run("shapes --word LLRLR --seed 7");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    Run env = run("shapes --word LR", "QHYP_DIGITS=25");
    REQUIRE(env.status == 0);
    CHECK(json::parse(env.out)["params"]["digits"] == 25);
    Run dflt = run("shapes --word LR", "env -u QHYP_DIGITS");
    CHECK(json::parse(dflt.out)["params"]["digits"] == 60);
}

TEST_CASE("analysis subcommands") {
    Run f = run("fourier-check --n 5 --digits 40");
    REQUIRE(f.status == 0);
    CHECK(json::parse(f.out)["summary"]["passed"] == true);
    Run r = run("recurrence-check --n 7 --digits 60");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j["rows"].size() == 2u);
    CHECK(j["rows"][0]["max_residual"]["exponent"].get<long>() < -50);
    CHECK(j["rows"][1]["max_residual"]["exponent"].get<long>() < -45);
    Run o = run("oneloop --word LR --n 5 --m 0:4 --digits 30");
    REQUIRE(o.status == 0);
    CHECK(json::parse(o.out)["rows"].size() == 5u);
}
