#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef TAILSPEC_BIN
#error "TAILSPEC_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(TAILSPEC_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    auto dir = std::filesystem::temp_directory_path() / "tailspec_cli_tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << body;
    return path;
}

const char* kTriangle = R"({"n":3,"edges":[[1,2],[2,3],[1,3]],"anchor":1})";
const char* kK13 = R"({"n":4,"edges":[[1,2],[1,3],[1,4]],"anchor":1})";

}  // namespace

TEST_CASE("family star reproduces the closed-form eigenvalue") {
    RunResult r = run("family --star --k 1,1,1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["lambda_plus"].get<double>() - 3.0 / std::sqrt(2.0)) <= 1e-9);
    CHECK(std::abs(j["lambda_minus"].get<double>() + 3.0 / std::sqrt(2.0)) <= 1e-9);
    CHECK(j["eigenvalues"].size() == 2);
}

TEST_CASE("spectrum of the triangle via a graph file") {
    auto path = write_temp("triangle.json", kTriangle);
    RunResult r = run("spectrum " + path.string());
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["band"] == nlohmann::json::array({-2.0, 2.0}));
    REQUIRE(j["eigenvalues"].size() == 1);
    CHECK(std::abs(j["eigenvalues"][0]["lambda"].get<double>() - std::sqrt(5.0)) <=
          1e-10);
}

TEST_CASE("charpoly emits coefficient strings lowest power first") {
    auto path = write_temp("k13.json", kK13);
    RunResult r = run("charpoly " + path.string());
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["coefficients"] ==
          nlohmann::json::array({"0", "0", "-3", "0", "1"}));
}

TEST_CASE("verify reports convergence rows in CSV") {
    auto path = write_temp("triangle.json", kTriangle);
    RunResult r = run("verify " + path.string() + " --lengths 20,40 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("L,predicted,computed,abs_error\n", 0) == 0);
    CHECK(r.out.find("\n20,") != std::string::npos);
    CHECK(r.out.find("\n40,") != std::string::npos);
}

TEST_CASE("green includes the closed-form value and the residual") {
    RunResult r = run("green --z 0.5 --i 1 --j 2 --L 40");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"].get<double>() == 0.25);
    CHECK(j["residual"].get<double>() <= 1e-12);
}

TEST_CASE("schur-demo residuals are small") {
    RunResult r = run("schur-demo --dim1 3 --dim2 4 --seed 42");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["factorization_residual_c22"].get<double>() <= 1e-12);
    CHECK(j["det_residual"].get<double>() <= 1e-10);
}

TEST_CASE("identical invocations produce identical bytes") {
    auto path = write_temp("triangle.json", kTriangle);
    for (const std::string& args :
         {std::string("family --flower --k 2,3"),
          "spectrum " + path.string(),
          std::string("schur-demo --dim1 4 --dim2 4 --seed 7"),
          "verify " + path.string() + " --lengths 10,20"}) {
        RunResult a = run(args);
        RunResult b = run(args);
        REQUIRE(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("validation failures exit with code 2") {
    CHECK(run("spectrum /nonexistent/file.json").exit_code == 2);
    auto bad = write_temp("bad.json", "{not json");
    CHECK(run("spectrum " + bad.string()).exit_code == 2);
    auto no_anchor = write_temp("no_anchor.json", R"({"n":2,"edges":[[1,2]]})");
    CHECK(run("spectrum " + no_anchor.string()).exit_code == 2);
    CHECK(run("family --star --flower --k 1,1").exit_code == 2);
    CHECK(run("family --star --k 0,1").exit_code == 2);
    CHECK(run("family --flower --k 1,1").exit_code == 2);
    CHECK(run("spectrum").exit_code == 2);
    CHECK(run("no-such-verb").exit_code == 2);
    CHECK(run("family --star --k 1,1,1 --bogus-flag").exit_code == 2);
}

TEST_CASE("graph JSON round-trips through a spectrum-and-reserialize cycle") {
    // serialized output of one run is valid input for the next
    auto path = write_temp("roundtrip.json", kK13);
    RunResult a = run("charpoly " + path.string());
    RunResult b = run("charpoly " + path.string());
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("reports can be written to a file") {
    auto dir = std::filesystem::temp_directory_path() / "tailspec_cli_tests";
    auto out = dir / "family_out.json";
    std::filesystem::remove(out);
    RunResult r = run("family --star --k 2,2 --output " + out.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    std::string body((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    auto j = nlohmann::json::parse(body);
    CHECK(j.contains("lambda_plus"));
}

TEST_CASE("trivial star family reports nulls") {
    RunResult r = run("family --star --k 1,1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["t_plus"].is_null());
    CHECK(j["lambda_plus"].is_null());
    CHECK(j["eigenvalues"].empty());
}

TEST_CASE("green rejects indices beyond the truncation") {
    CHECK(run("green --z 0.5 --i 10 --j 1 --L 5").exit_code == 2);
    CHECK(run("green --z 1.5 --i 1 --j 1 --L 5").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("spectrum --help").exit_code == 0);
}
