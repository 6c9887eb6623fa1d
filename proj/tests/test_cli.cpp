#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "irid/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "irid_cfoi");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = irid::cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) { fs::remove_all(path); }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("figure parameter set runs and writes every output") {
    TempDir dir("irid_cli_default");
    const auto r = run({"--lambda", "1.5", "--mu", "-0.4", "--wgc", "1", "--tm", "2", "--wmin", "0.01", "--wmax",
                        "100", "--norder", "5", "--out-dir", dir.path.string()});
    CHECK(r.code == 0);
    for (const char* f : {"impulse.csv", "freq.csv", "coeffs.json", "summary.txt", "impulse.svg", "freq.svg"})
        CHECK(fs::exists(dir.path / f));
    CHECK(r.out.find("discrete den:") != std::string::npos);
    CHECK(r.out.find("impulse_rel_l2=") != std::string::npos);
}

TEST_CASE("--no-svg") {
    TempDir dir("irid_cli_nosvg");
    const auto r = run({"--out-dir", dir.path.string(), "--no-svg", "--samples", "256", "--points", "50"});
    CHECK(r.code == 0);
    CHECK(fs::exists(dir.path / "coeffs.json"));
    CHECK(!fs::exists(dir.path / "impulse.svg"));
}

TEST_CASE("validation errors exit with 2") {
    auto r = run({"--lambda", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("(0, 2)") != std::string::npos);

    r = run({"--mu", "0.3"});
    CHECK(r.code == 2);
    r = run({"--samples", "1000"});
    CHECK(r.code == 2);
    r = run({"--wmin", "10", "--wmax", "1"});
    CHECK(r.code == 2);
    r = run({"--bogus"});
    CHECK(r.code == 2);
    r = run({"--lambda", "abc"});
    CHECK(r.code == 2);
}

TEST_CASE("--help") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    for (const char* flag : {"--lambda", "--mu", "--wgc", "--tm", "--wmin", "--wmax", "--norder", "--samples",
                             "--points", "--iters", "--out-dir", "--no-svg"})
        CHECK(r.out.find(flag) != std::string::npos);
}

TEST_CASE("computation failures exit with 1") {
    TempDir dir("irid_cli_failure");
    const auto r = run({"--norder", "60", "--samples", "512", "--out-dir", dir.path.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("FitStage") != std::string::npos);
}
