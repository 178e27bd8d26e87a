#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dalvf/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("dalvf");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = dalvf::cli::run(static_cast<int>(argv.size()), argv.data(),
                                     out, err);
    return RunResult{code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) {
        if (c == '\n') ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("headline lvf invocation") {
    const RunResult r = run_cli({"lvf", "--z0", "0.001", "--decay-per-sec", "1e-4",
                                 "--mu", "0", "--vol-daily", "0.05",
                                 "--block-time", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.13") != std::string::npos);   // LVF ~ 0.13%
    CHECK(r.out.find("23.3") != std::string::npos);   // FT ~ 23.3 s
}

TEST_CASE("basis-point convenience flag") {
    const RunResult a = run_cli({"lvf", "--z0", "10", "--bp", "--decay-per-sec",
                                 "1e-4", "--vol-daily", "0.05", "--block-time",
                                 "12"});
    const RunResult b = run_cli({"lvf", "--z0", "0.001", "--decay-per-sec", "1e-4",
                                 "--vol-daily", "0.05", "--block-time", "12"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({"lvf", "--vol-daily", "0.05"}).code == 2);  // missing drift
    const RunResult both = run_cli({"lvf", "--vol-daily", "0.05", "--vol-sec",
                                    "1e-4", "--decay-per-sec", "1e-4"});
    CHECK(both.code == 2);
    CHECK(!both.err.empty());
    CHECK(run_cli({"sweep", "--vary", "delta", "--vol-daily", "0.05"}).code == 2);
}

TEST_CASE("domain errors exit 1 and cite the violated assumption") {
    const RunResult r = run_cli({"lvf", "--z0", "0", "--decay-per-sec", "1e-9",
                                 "--mu", "-1e-4", "--vol-daily", "0.05",
                                 "--block-time", "12"});
    CHECK(r.code == 1);
    CHECK(r.err.find("Assumption 1") != std::string::npos);

    const RunResult d = run_cli({"lvf", "--z0", "0", "--delta", "-1e-5",
                                 "--vol-daily", "0.05", "--block-time", "12"});
    CHECK(d.code == 1);
    CHECK(d.err.find("Assumption 1") != std::string::npos);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"lvf", "--help"}).code == 0);
}

TEST_CASE("sweep over delta reproduces the loss-vs-drift table") {
    const std::string path = "sweep_test_delta.csv";
    const RunResult r = run_cli({"sweep", "--vary", "delta", "--from", "1e-6",
                                 "--to", "1e-3", "--points", "200", "--vol-daily",
                                 "0.05", "--block-time", "12", "--z0", "0",
                                 "--csv", path});
    REQUIRE(r.code == 0);
    const std::string csv = slurp(path);
    REQUIRE(!csv.empty());
    CHECK(csv.rfind("delta,lvf,ft\n", 0) == 0);
    CHECK(count_lines(csv) == 201);  // header + 200 rows
    CHECK(csv.find("\r") == std::string::npos);

    // every lvf value respects the volatility floor
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const double lvf = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        CHECK(lvf >= 4.1649312786339027e-4);
        ++rows;
    }
    CHECK(rows == 200);

    // byte stability
    const std::string path2 = "sweep_test_delta_again.csv";
    run_cli({"sweep", "--vary", "delta", "--from", "1e-6", "--to", "1e-3",
             "--points", "200", "--vol-daily", "0.05", "--block-time", "12",
             "--z0", "0", "--csv", path2});
    CHECK(slurp(path2) == csv);
    std::remove(path.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("sweep over z0 uses the mispricing header") {
    const std::string path = "sweep_test_z0.csv";
    const RunResult r = run_cli({"sweep", "--vary", "z0", "--from", "-5e-4",
                                 "--to", "5e-4", "--points", "11", "--delta",
                                 "1e-5", "--vol-daily", "0.05", "--block-time",
                                 "12", "--csv", path});
    REQUIRE(r.code == 0);
    const std::string csv = slurp(path);
    CHECK(csv.rfind("z0,lvf,ft\n", 0) == 0);
    CHECK(count_lines(csv) == 12);
    std::remove(path.c_str());
}

TEST_CASE("frontier emits the documented columns") {
    const std::string path = "frontier_test.csv";
    const RunResult r = run_cli({"frontier", "--vol-daily", "0.05", "--block-time",
                                 "12", "--theta", "1e-6", "--theta", "1e-5",
                                 "--theta", "1e-4", "--csv", path});
    REQUIRE(r.code == 0);
    const std::string csv = slurp(path);
    CHECK(csv.rfind("theta,z0,delta,lvf,ft\n", 0) == 0);
    CHECK(count_lines(csv) == 4);
    std::remove(path.c_str());
}

TEST_CASE("stationary and gda subcommands print their parameters") {
    const RunResult s = run_cli({"stationary", "--delta", "1e-4", "--vol-sec",
                                 "1.7010255e-4", "--block-time", "12"});
    CHECK(s.code == 0);
    CHECK(s.out.find("zeta_minus") != std::string::npos);
    CHECK(s.out.find("751.6") != std::string::npos);

    const RunResult g = run_cli({"gda", "--decay-per-sec", "1e-4", "--vol-sec",
                                 "1.7010255e-4", "--block-time", "12",
                                 "--emission-rate", "1", "--price", "1"});
    CHECK(g.code == 0);
    CHECK(g.out.find("vol_rate") != std::string::npos);

    const RunResult b = run_cli({"bayes", "--delta", "1e-4", "--vol-sec",
                                 "1.7010255e-4", "--block-time", "12", "--mu0",
                                 "0", "--sigma0", "5e-4"});
    CHECK(b.code == 0);
    CHECK(b.out.find("E[LVF]") != std::string::npos);
    CHECK(b.out.find("14.78") != std::string::npos);
}

TEST_CASE("validate is deterministic across thread counts") {
    const std::vector<std::string> base = {"validate", "--suite", "dutch",
                                           "--paths", "20000", "--seed", "42"};
    auto with_threads = [&](const char* n) {
        std::vector<std::string> v = base;
        v.push_back("--threads");
        v.push_back(n);
        return run_cli(v);
    };
    const RunResult one = with_threads("1");
    const RunResult two = with_threads("2");
    const RunResult four = with_threads("4");
    CHECK(one.code == 0);
    CHECK(one.out == two.out);
    CHECK(one.out == four.out);
    CHECK(one.out.find("within 4 standard errors") != std::string::npos);

    // repeat run, same bytes
    const RunResult again = with_threads("2");
    CHECK(again.out == two.out);
}

TEST_CASE("simulate compares against the closed form") {
    const RunResult r = run_cli({"simulate", "--kind", "dutch", "--z0", "0",
                                 "--delta", "1e-4", "--vol-daily", "0.05",
                                 "--block-time", "12", "--paths", "20000",
                                 "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lvf") != std::string::npos);
    CHECK(r.out.find("closed form") != std::string::npos);
}
