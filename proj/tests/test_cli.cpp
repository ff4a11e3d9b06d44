#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string cli = GASFILT_CLI_PATH;

int run(const std::string& args, const std::string& out_file = "") {
    std::string cmd = cli + " " + args;
    if (!out_file.empty()) cmd += " > " + out_file;
    cmd += " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/gasfilt_cli_test_") + name;
}

} // namespace

TEST_CASE("state command values and exit codes") {
    const std::string out = tmp_path("state.csv");
    REQUIRE(run("state --model vdw --n 3 --T 1 --v 1", out) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("T,v,p,eps,") == 0);
    CHECK(text.find("\n1,1,1,1,") != std::string::npos); // p = 1, eps = 1

    REQUIRE(run("state --model ideal --n 3 --T 2 --v 4", out) == 0);
    CHECK(slurp(out).find(",0.5,") != std::string::npos); // p = 0.5

    // outside the vdW domain: input error
    CHECK(run("state --model vdw --n 3 --T 1 --v 0.2", out) == 2);
    // unknown model
    CHECK(run("state --model foo --n 3 --T 1 --v 1", out) == 2);
    // --seed rejected
    CHECK(run("--seed 7 state --model vdw --n 3 --T 1 --v 1", out) == 2);
}

TEST_CASE("binodal and spinodal tables") {
    const std::string out = tmp_path("binodal.csv");
    REQUIRE(run("binodal --model vdw --n 3 --T-min 0.9 --T-max 0.98 --steps 5 "
                "--with-spinodal",
                out) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("T,v1,v2,p,dQ,dW,dEps,v_spin_left,v_spin_right") == 0);
    int rows = 0;
    for (char c : text)
        if (c == '\n') ++rows;
    CHECK(rows == 6); // header + 5 points

    CHECK(run("binodal --model vdw --n 3 --T-min 0.9 --T-max 1.05 --steps 4", out) ==
          2); // supercritical grid point

    REQUIRE(run("spinodal --model pr --n 3 --v-min 2 --v-max 6 --steps 9", out) == 0);
    CHECK(slurp(out).find("v,T") == 0);
    CHECK(run("spinodal --model ideal --n 3 --v-min 1 --v-max 2 --steps 4", out) ==
          3); // no root
}

TEST_CASE("scenario commands are deterministic byte for byte") {
    const std::string scen = tmp_path("scen.json");
    {
        std::ofstream f(scen);
        f << R"({
  "model": "vdw", "n": 3, "sigma0": 8.39444915467244,
  "mu": 1.0, "permeability": {"isotropic": 1.0},
  "v_range": [0.9, 6.0], "samples": 256,
  "sources": [{"pos": [0,0,0], "I": 0.113184}],
  "box": {"lower": [-1,-1,-1], "upper": [1,1,1], "resolution": [10,10,10]},
  "v0": 2.2,
  "binodal": {"T_min": 0.45, "T_max": 0.995, "steps": 20},
  "radial": {"r_min": 0.05, "r_max": 0.9, "samples": 16}
})";
    }
    const std::string a = tmp_path("run_a.csv");
    const std::string b = tmp_path("run_b.csv");
    REQUIRE(run("qprofile --scenario " + scen, a) == 0);
    REQUIRE(run("qprofile --scenario " + scen, b) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).find("v,Q,dQ,branch") == 0);

    REQUIRE(run("dirichlet --scenario " + scen + " --out " + a) == 0);
    REQUIRE(run("dirichlet --scenario " + scen + " --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a + ".summary.json") == slurp(b + ".summary.json"));
    CHECK(slurp(a + ".summary.json").find("residual") != std::string::npos);

    REQUIRE(run("phasemap --scenario " + scen + " --out " + a) == 0);
    const std::string summary = slurp(a + ".summary.json");
    CHECK(summary.find("interface_radii") != std::string::npos);

    REQUIRE(run("source --scenario " + scen, a) == 0);
    CHECK(slurp(a).find("r,u,branch,v,T,label") == 0);
}

TEST_CASE("boundary volumes from a table file") {
    const std::string table = tmp_path("v0_table.csv");
    {
        // constant 2.2 at four reference points: nearest-point lookup makes
        // the boundary constant, so this must match the constant-v0 run
        std::ofstream f(table);
        f << "x1,x2,x3,v0\n1,0,0,2.2\n-1,0,0,2.2\n0,1,0,2.2\n0,0,1,2.2\n";
    }
    const std::string scen_const = tmp_path("scen_const.json");
    const std::string scen_table = tmp_path("scen_table.json");
    const std::string common = R"("model": "vdw", "n": 3, "sigma0": 8.39444915467244,
  "mu": 1.0, "permeability": {"isotropic": 1.0},
  "v_range": [0.9, 6.0], "samples": 256,
  "box": {"lower": [-1,-1,-1], "upper": [1,1,1], "resolution": [8,8,8]},)";
    {
        std::ofstream f(scen_const);
        f << "{" << common << R"( "v0": 2.2 })";
    }
    {
        std::ofstream f(scen_table);
        f << "{" << common << R"( "v0": {"expr": "table", "file": ")" << table
          << R"("} })";
    }
    const std::string a = tmp_path("grid_const.csv");
    const std::string b = tmp_path("grid_table.csv");
    REQUIRE(run("dirichlet --scenario " + scen_const + " --out " + a) == 0);
    REQUIRE(run("dirichlet --scenario " + scen_table + " --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("scenario validation rejects unknown keys") {
    const std::string scen = tmp_path("bad_scen.json");
    {
        std::ofstream f(scen);
        f << R"({"model": "vdw", "n": 3, "sigma0": 4.0, "v_range": [1, 5],
                 "bogus_key": 1})";
    }
    CHECK(run("qprofile --scenario " + scen, tmp_path("x.csv")) == 2);
    CHECK(run("qprofile --scenario /no/such/file.json", tmp_path("x.csv")) == 4);
}

TEST_CASE("virial model from a coefficient file") {
    const std::string coeffs = tmp_path("virial.json");
    {
        std::ofstream f(coeffs);
        f << "[[0.05], [0.0, -0.2]]\n"; // A1 = 0.05, A2 = -0.2/T
    }
    const std::string out = tmp_path("virial_state.csv");
    REQUIRE(run("state --model virial:" + coeffs + " --n 3 --T 1.2 --v 4", out) == 0);
    CHECK(slurp(out).find("applicable") != std::string::npos);
    // Z = 1 + 0.05/v - 0.2/(T v^2): p = T Z / v at (1.2, 4)
    const double Z = 1 + 0.05 / 4.0 - 0.2 / (1.2 * 16.0);
    const double p = 1.2 * Z / 4.0;
    char expect[40];
    std::snprintf(expect, sizeof expect, ",%.17g,", p);
    CHECK(slurp(out).find(expect) != std::string::npos);
}

TEST_CASE("json format output") {
    const std::string out = tmp_path("state.json");
    REQUIRE(run("state --model pr --n 3 --T 1 --v 2 --format json", out) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("\"p\": 0.857142857142857") != std::string::npos);
    CHECK(text.find("\"applicability\": \"applicable\"") != std::string::npos);
}
