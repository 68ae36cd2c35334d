#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "todakdv/report.hpp"

namespace fs = std::filesystem;

namespace {

int run_cmd(const std::string& args) {
    std::string cmd = std::string(TODA_KDV_BIN) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

fs::path sandbox() {
    fs::path d = fs::temp_directory_path() / "todakdv_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

void write_config(const fs::path& p, const std::string& suites, const std::string& out) {
    std::ofstream f(p);
    f << R"({
  "profiles": [
    {"name": "free", "alpha": {}, "beta": {}},
    {"name": "cos", "alpha": {"cos": [0.5]}, "beta": {"sin": [0.4]}}
  ],
  "N_list": [16, 32, 64],
  "eta": 0.25,
  "galerkin_K": 96,
  "J_max": 24,
  "grid_density": 16,
  "suites": [)" << suites
      << R"(],
  "output_dir": ")" << out << R"("
})";
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("free spectrum run passes and writes artifacts") {
    fs::path d = sandbox();
    write_config(d / "cfg.json", "\"spectrum\", \"casimirs\"", (d / "out").string());
    REQUIRE(run_cmd("run --config " + (d / "cfg.json").string()) == 0);
    REQUIRE(fs::exists(d / "out" / "spectrum.csv"));
    REQUIRE(fs::exists(d / "out" / "casimirs.csv"));
    REQUIRE(fs::exists(d / "out" / "summary.json"));
    std::string head = slurp(d / "out" / "spectrum.csv").substr(0, 24);
    REQUIRE(head.rfind("profile,N,index,lambda", 0) == 0);
}

TEST_CASE("appendix suite produces both files") {
    fs::path d = sandbox();
    write_config(d / "cfg.json", "\"appendix\"", (d / "out").string());
    REQUIRE(run_cmd("run --config " + (d / "cfg.json").string()) == 0);
    REQUIRE(fs::exists(d / "out" / "appendix_products.csv"));
    REQUIRE(fs::exists(d / "out" / "appendix_integral.csv"));
}

TEST_CASE("invalid config is a usage error") {
    fs::path d = sandbox();
    std::ofstream(d / "bad.json") << R"({"profiles": [], "N_list": [4], "eta": 0.25})";
    REQUIRE(run_cmd("run --config " + (d / "bad.json").string()) == 2);
    REQUIRE(run_cmd("run --config " + (d / "missing.json").string()) == 2);
}

TEST_CASE("determinism: two runs produce byte-identical CSVs") {
    fs::path d = sandbox();
    write_config(d / "a.json", "\"spectrum\", \"edges\"", (d / "out_a").string());
    write_config(d / "b.json", "\"spectrum\", \"edges\"", (d / "out_b").string());
    REQUIRE(run_cmd("run --config " + (d / "a.json").string()) == 0);
    REQUIRE(run_cmd("run --config " + (d / "b.json").string()) == 0);
    for (const char* f : {"spectrum.csv", "convergence.csv"})
        REQUIRE(slurp(d / "out_a" / f) == slurp(d / "out_b" / f));
}

TEST_CASE("golden round-trip, diff detection, missing goldens") {
    fs::path d = sandbox();
    write_config(d / "cfg.json", "\"casimirs\"", (d / "out").string());
    REQUIRE(run_cmd("run --config " + (d / "cfg.json").string()) == 0);

    std::string common = " --dir " + (d / "golden").string() + " --run " + (d / "out").string();
    // check before update: must fail with instruction
    REQUIRE(run_cmd("golden check" + common) == 1);
    REQUIRE(run_cmd("golden update" + common) == 0);
    REQUIRE(run_cmd("golden check" + common) == 0);

    // perturb one value: located diff
    fs::path g = d / "golden" / "casimirs.csv";
    std::string content = slurp(g);
    auto pos = content.find_last_of("0123456789");
    content[pos] = content[pos] == '9' ? '8' : '9';
    std::ofstream(g, std::ios::binary) << content;
    REQUIRE(run_cmd("golden check" + common) == 1);
}

TEST_CASE("suites flag overrides the config list") {
    fs::path d = sandbox();
    write_config(d / "cfg.json", "\"spectrum\"", (d / "out").string());
    REQUIRE(run_cmd("run --config " + (d / "cfg.json").string() +
                    " --suites casimirs --out " + (d / "out2").string()) == 0);
    REQUIRE(fs::exists(d / "out2" / "casimirs.csv"));
    REQUIRE_FALSE(fs::exists(d / "out2" / "spectrum.csv"));
    REQUIRE(run_cmd("run --config " + (d / "cfg.json").string() + " --suites bogus") == 2);
}

TEST_CASE("round10 formatting") {
    using todakdv::round10;
    REQUIRE(round10(1.23456789012345) == "1.23456789");
    REQUIRE(round10(1.234567891234e7) == "12345678.91");
    REQUIRE(round10(0.0) == "0");
    REQUIRE(round10(-0.0) == "0");
    REQUIRE(round10(1e-300) == "1e-300");
}
