// End-to-end tests of the command-line tool: spawn the real binary, parse
// its JSON/CSV/NDJSON output and check exit codes and error envelopes.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include <gnf/catalog.hpp>

#ifndef GNF_CLI_PATH
#error "GNF_CLI_PATH must point at the built CLI binary"
#endif

using json = nlohmann::json;
using namespace gnf;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

/// Run a shell command, capturing stdout (+stderr) and the exit code.
RunResult run(const std::string& args) {
    const std::string cmd = std::string(GNF_CLI_PATH) + " " + args + " 2>&1";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe))
        res.out.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

}  // namespace

// ============================================================================
// emit
// ============================================================================

TEST_CASE("emit writes the evaluated matrix as JSON") {
    const auto res = run("emit --family dy_slN --N 2 --u 1");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    REQUIRE(doc["dim"] == 4);
    REQUIRE(doc["family"] == "dy_slN");
    REQUIRE(doc["graded"] == false);
    REQUIRE(doc["params"]["N"] == 2);
    REQUIRE(doc["params"]["u"][0] == 1.0);
    REQUIRE(doc["entries"].size() == 16);
    const double h = kPi / 2.0;
    REQUIRE(doc["entries"][0][0].get<double>() == Catch::Approx(h).epsilon(1e-13));
    REQUIRE(doc["entries"][0][1].get<double>() == 0.0);
    REQUIRE(doc["entries"][5][0].get<double>() == Catch::Approx(h / 2).epsilon(1e-13));
    REQUIRE(doc["entries"][6][0].get<double>() == Catch::Approx(h / 2).epsilon(1e-13));
}

TEST_CASE("emit round-trips every entry exactly") {
    const auto res = run("emit --family dy_slN --N 2 --u 0.7+0.4i");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);

    catalog::EvalPoint p;
    p.spectral = Complex(0.7, 0.4);
    const Mat R = catalog::dy_slN(2)(p);

    REQUIRE(doc["entries"].size() == 16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const auto& e = doc["entries"][static_cast<std::size_t>(4 * i + j)];
            // 17 significant digits reproduce IEEE doubles bit-for-bit
            REQUIRE(e[0].get<double>() == R(i, j).real());
            REQUIRE(e[1].get<double>() == R(i, j).imag());
        }
}

TEST_CASE("emit supports dynamical families and CSV output") {
    const auto res = run(
        "emit --family bql_slN --N 2 --q 0.6 --w 1.7 --w 0.4 --format csv");
    REQUIRE(res.exit_code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 17);  // header + 16 entries
    REQUIRE(lines[0] == "row,col,re,im");
    int row, col;
    double re, im;
    REQUIRE(std::sscanf(lines[1].c_str(), "%d,%d,%lf,%lf", &row, &col, &re, &im) == 4);
    REQUIRE(row == 0);
    REQUIRE(col == 0);
    // R_aa^aa = q^{1/2}/q at q = 0.6
    REQUIRE(re == Catch::Approx(std::pow(0.6, 0.5) / 0.6).epsilon(1e-13));
}

TEST_CASE("emit reports singular points through the error envelope") {
    const auto res = run("emit --family bql_slN --N 2 --q 0.6 --w 1 --w 1");
    REQUIRE(res.exit_code == 2);
    const json doc = json::parse(res.out);
    REQUIRE(doc["error"]["type"] == "singular_parameter");
    REQUIRE(doc["error"]["message"].get<std::string>().find("w_ab = 1") !=
            std::string::npos);
}

TEST_CASE("emit usage errors") {
    SECTION("unknown family") {
        const auto res = run("emit --family so_17 --q 0.5");
        REQUIRE(res.exit_code == 2);
        const json doc = json::parse(res.out);
        REQUIRE(doc["error"]["type"] == "usage");
    }
    SECTION("missing required option") {
        const auto res = run("emit");
        REQUIRE(res.exit_code == 2);
        const json doc = json::parse(res.out);
        REQUIRE(doc["error"]["type"] == "usage");
    }
    SECTION("wrong dynamical coordinate count") {
        const auto res = run("emit --family bql_slN --N 3 --q 0.6 --w 1.7 --w 0.4");
        REQUIRE(res.exit_code == 2);
        const json doc = json::parse(res.out);
        REQUIRE(doc["error"]["type"] == "usage");
    }
}

TEST_CASE("emit reads defaults from a config file, flags win") {
    const std::string cfg_path = "/tmp/gnf_test_config.toml";
    {
        std::ofstream cfg(cfg_path);
        cfg << "[emit]\n"
            << "family = \"uq_slN\"\n"
            << "N = 3\n"
            << "q = \"0.5\"\n"
            << "format = \"csv\"\n";
    }
    const auto res = run("--config " + cfg_path + " emit");
    REQUIRE(res.exit_code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines[0] == "row,col,re,im");
    REQUIRE(lines.size() == 82);  // header + 81 entries of the 9x9 matrix

    const auto over = run("--config " + cfg_path + " emit --format json");
    REQUIRE(over.exit_code == 0);
    const json doc = json::parse(over.out);
    REQUIRE(doc["dim"] == 9);
    std::remove(cfg_path.c_str());
}

// ============================================================================
// check
// ============================================================================

TEST_CASE("check emits one NDJSON report per identity plus a summary") {
    const auto res = run("check --suite cocycle --samples 3 --seed 11");
    REQUIRE(res.exit_code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() >= 3);

    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        const json rep = json::parse(lines[i]);
        REQUIRE(rep.contains("identity"));
        REQUIRE(rep.contains("family"));
        REQUIRE(rep.contains("residual"));
        REQUIRE(rep.contains("tol"));
        REQUIRE(rep["pass"] == true);
    }
    const json summary = json::parse(lines.back());
    REQUIRE(summary["suite"] == "cocycle");
    REQUIRE(summary["reports"] == lines.size() - 1);
    REQUIRE(summary["failed"] == 0);
    REQUIRE(summary["pass"] == true);
    REQUIRE(summary["seed"] == 11);
    REQUIRE(summary["samples"] == 3);
}

TEST_CASE("check rejects unknown suites") {
    const auto res = run("check --suite nonsense");
    REQUIRE(res.exit_code == 2);
    const json doc = json::parse(res.out);
    REQUIRE(doc["error"]["type"] == "usage");
}

TEST_CASE("tolerance override is an environment contract") {
    SECTION("an absurd tightening makes the run fail") {
        const RunResult res = [] {
            RunResult r;
            const std::string cmd = std::string("GNF_TOL_OVERRIDE=1e-30 ") +
                                    GNF_CLI_PATH +
                                    " check --suite cocycle --samples 2 2>&1";
            FILE* pipe = popen(cmd.c_str(), "r");
            REQUIRE(pipe != nullptr);
            char buf[4096];
            while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe))
                r.out.append(buf, n);
            const int status = pclose(pipe);
            r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
            return r;
        }();
        REQUIRE(res.exit_code == 1);
        const auto lines = lines_of(res.out);
        const json summary = json::parse(lines.back());
        REQUIRE(summary["failed"].get<int>() > 0);
    }

    SECTION("CI mode refuses to loosen") {
        const RunResult res = [] {
            RunResult r;
            const std::string cmd = std::string("GNF_TOL_OVERRIDE=1e30 ") +
                                    GNF_CLI_PATH +
                                    " check --suite cocycle --samples 2 --ci 2>&1";
            FILE* pipe = popen(cmd.c_str(), "r");
            REQUIRE(pipe != nullptr);
            char buf[4096];
            while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe))
                r.out.append(buf, n);
            const int status = pclose(pipe);
            r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
            return r;
        }();
        REQUIRE(res.exit_code == 0);
        const auto lines = lines_of(res.out);
        for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
            const json rep = json::parse(lines[i]);
            // the suite's own tolerances stay in force
            REQUIRE(rep["tol"].get<double>() < 1e-9);
        }
    }
}

// ============================================================================
// limits
// ============================================================================

TEST_CASE("limits prints the gap table as CSV") {
    SECTION("nome limit, default grid") {
        const auto res = run("limits --which p0");
        REQUIRE(res.exit_code == 0);
        const auto lines = lines_of(res.out);
        REQUIRE(lines[0] == "parameter,max_entry_gap,decay_ratio");
        REQUIRE(lines.size() == 4);  // header + three default grid points
        double param, gap;
        char ratio[64] = {0};
        REQUIRE(std::sscanf(lines[1].c_str(), "%lf,%lf,%63s", &param, &gap, ratio) >= 2);
        REQUIRE(param == 1e-2);
        // the first row has no predecessor, hence no ratio column value
        REQUIRE(lines[1].back() == ',');
    }

    SECTION("scaling limit with an explicit grid") {
        const auto res = run("limits --which scaling --grid 1e-1,1e-2 --N 2");
        REQUIRE(res.exit_code == 0);
        const auto lines = lines_of(res.out);
        REQUIRE(lines.size() == 3);
        double param = 0.0, gap = 0.0, ratio = 0.0;
        REQUIRE(std::sscanf(lines[2].c_str(), "%lf,%lf,%lf", &param, &gap, &ratio) == 3);
        REQUIRE(param == 1e-2);
        // second-order decay: the gap shrinks at least tenfold per decade
        REQUIRE(ratio < 0.2);
    }

    SECTION("empty grid is a usage error") {
        const auto res = run("limits --which p0 --grid \"\"");
        REQUIRE(res.exit_code == 2);
        const json doc = json::parse(res.out);
        REQUIRE(doc["error"]["type"] == "usage");
    }

    SECTION("unknown limit name") {
        const auto res = run("limits --which q0");
        REQUIRE(res.exit_code == 2);
    }
}

// ============================================================================
// top level
// ============================================================================

TEST_CASE("top level requires a subcommand") {
    const auto res = run("");
    REQUIRE(res.exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    const auto res = run("--help");
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.out.find("emit") != std::string::npos);
    REQUIRE(res.out.find("check") != std::string::npos);
    REQUIRE(res.out.find("limits") != std::string::npos);
}
