#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string tool = ISOEXT_TOOL_PATH;

int run(const std::string& args) {
    int rc = std::system((tool + " " + args).c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("extend writes a potential file") {
    CHECK(run("extend --series L1 --n 2 --omega 2 --a 5/2 -o cli_extend.json >/dev/null 2>&1") ==
          0);
    std::string payload = slurp("cli_extend.json");
    CHECK(payload.find("\"series\": \"L1\"") != std::string::npos);
    CHECK(payload.find("\"seed_energy\"") != std::string::npos);
    std::remove("cli_extend.json");
}

TEST_CASE("extend warns about singular members") {
    CHECK(run("extend --series L3 --n 3 --omega 2 --a 4 -o cli_l3.json 2>cli_l3.err") == 0);
    CHECK(slurp("cli_l3.err").find("singular") != std::string::npos);
    std::remove("cli_l3.json");
    std::remove("cli_l3.err");
}

TEST_CASE("missing required flag is a usage error") {
    CHECK(run("extend --series L1 >/dev/null 2>&1") == 2);
    CHECK(run("plot-data --k 9 --levels 3 >/dev/null 2>&1") == 2);
    CHECK(run("extend --series L1 --n 2 --omega 0 --a 2 >/dev/null 2>&1") == 2);
    CHECK(run("extend --series L9 --n 2 >/dev/null 2>&1") == 2);
}

TEST_CASE("check subcommands verify identities") {
    CHECK(run("check klh --n 3 --alpha -3/2 -o cli_klh.json") == 0);
    std::string klh = slurp("cli_klh.json");
    CHECK(klh.find("\"pos_zeros\": 2") != std::string::npos);
    CHECK(klh.find("\"neg_zeros\": 1") != std::string::npos);
    std::remove("cli_klh.json");

    CHECK(run("check shape --series L1 --n 5 --omega 1 --a 3 >/dev/null") == 0);
    CHECK(run("check riccati --series L2 --n 4 --a 9/2 >/dev/null") == 0);
    CHECK(run("check wick --omega 2 --a 7/3 >/dev/null") == 0);
    CHECK(run("check coincidence --which T1R1 --omega 2 --a 3 >/dev/null") == 0);
    CHECK(run("check regularity --series L0 --n 3 --omega 2 --a 2 >/dev/null") == 0);
    // degenerate shape parameters surface as a verification failure, not a crash
    CHECK(run("check shape --series L2 --n 2 --omega 2 --a 5/2 >/dev/null 2>&1") == 1);
}

TEST_CASE("spectrum command") {
    CHECK(run("spectrum --series L1 --n 2 --omega 2 --a 5/2 --levels 6 --format csv "
              "-o cli_spec.csv") == 0);
    std::string csv = slurp("cli_spec.csv");
    CHECK(csv.rfind("k,predicted,computed,abs_error,nodes", 0) == 0);
    int rows = 0;
    for (char c : csv)
        if (c == '\n') ++rows;
    CHECK(rows == 7);
    std::remove("cli_spec.csv");

    CHECK(run("spectrum --series L0 --n 2 --omega 2 --a 2 >/dev/null 2>&1") == 1);
}

TEST_CASE("plot-data samples potential and waves") {
    CHECK(run("plot-data --series L1 --n 1 --omega 2 --a 2 --x-min 0.05 --x-max 8 "
              "--samples 500 --k 0 --k 1 -o cli_plot.csv") == 0);
    std::string csv = slurp("cli_plot.csv");
    CHECK(csv.rfind("x,V,psi0,psi1", 0) == 0);
    int rows = 0;
    for (char c : csv)
        if (c == '\n') ++rows;
    CHECK(rows == 501);
    std::remove("cli_plot.csv");

    CHECK(run("plot-data --series L3 --n 2 --omega 2 --a 7/2 --samples 50 --extra-state "
              "-o cli_l3.csv") == 0);
    CHECK(slurp("cli_l3.csv").rfind("x,V,psi_minus", 0) == 0);
    std::remove("cli_l3.csv");

    CHECK(run("plot-data --series base --extra-state >/dev/null 2>&1") == 2);
}
