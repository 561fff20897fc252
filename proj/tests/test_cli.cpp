#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli_env(const std::string& env_prefix, const std::string& args) {
    std::string cmd = env_prefix + std::string(BGGCOH_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

RunResult run_cli(const std::string& args) { return run_cli_env("", args); }

}  // namespace

TEST_CASE("bwb command") {
    RunResult r = run_cli("bwb --d 1 --mu -1,1");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["schema"] == "bggcoh/1");
    REQUIRE(doc["entries"].size() == 1);
    CHECK(doc["entries"][0]["degree"] == 1);
    CHECK(doc["entries"][0]["dim"] == 1);

    RunResult zero = run_cli("bwb --d 1 --mu -1,0");
    CHECK(zero.exit_code == 0);
    CHECK(json::parse(zero.output)["entries"].empty());

    RunResult bgg = run_cli("bwb --d 2 --lambda 0,0,0 --bgg");
    CHECK(bgg.exit_code == 0);
    json bdoc = json::parse(bgg.output);
    REQUIRE(bdoc["terms"].size() == 3);
    CHECK(bdoc["terms"][2]["weight"] == json::array({-2, 1, 1}));
}

TEST_CASE("invalid weights exit with code 2") {
    CHECK(run_cli("bwb --d 1 --mu 1,2,3").exit_code == 2);
    CHECK(run_cli("bwb --d 1 --mu x,y").exit_code == 2);
    CHECK(run_cli("bwb --d 1").exit_code == 2);
    CHECK(run_cli("table --d 2 --lambda 0,1,0").exit_code == 2);
    CHECK(run_cli("table --d 9 --lambda 0,0,0,0,0,0,0,0,0,0").exit_code == 2);
    CHECK(run_cli("local --d 2 --j 5 --p 0").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("table command emits the finite-field analog flag") {
    RunResult r = run_cli("table --d 2 --lambda 0,0,0");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["schema"] == "bggcoh/1");
    CHECK(doc["analog"] == "finite-field");
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["parabolic"] == json::array({3}));
    CHECK(doc["rows"][1]["parabolic"] == json::array({2, 1}));
    CHECK(doc["rows"][2]["parabolic"] == json::array({1, 1, 1}));
    CHECK(doc["rows"][1]["q_dim"]["coeffs"] == json::array({0, 1, 1}));
    CHECK(doc["rows"][2]["q_dim"]["coeffs"] == json::array({0, 0, 0, 1}));
}

TEST_CASE("derham-v and acyclicity succeed on small inputs") {
    RunResult r = run_cli("derham-v --d 2 --j 1 --window 3 --threads 1");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["total_dims"] == json::array({1, 0, 0}));
    CHECK(doc["supported_at_zero_only"] == true);

    RunResult r2 = run_cli("derham-v --d 2 --j 0");
    CHECK(r2.exit_code == 0);
    CHECK(json::parse(r2.output)["total_dims"] == json::array({1, 0, 1, 0}));

    RunResult a = run_cli("acyclicity --d 2 --j 1 --window 4");
    CHECK(a.exit_code == 0);
    CHECK(json::parse(a.output)["acyclic"] == true);

    RunResult a0 = run_cli("acyclicity --d 2 --j 0 --window 3 --threads 1");
    CHECK(a0.exit_code == 0);
    CHECK(json::parse(a0.output)["acyclic"] == true);

    // oversized window is a usage error
    CHECK(run_cli("local --d 2 --j 1 --p 0 --window 40").exit_code == 2);
}

TEST_CASE("identical configurations give byte-identical output and cache hits agree") {
    fs::path dir = fs::temp_directory_path() / "bggcoh-test-cache";
    fs::remove_all(dir);

    RunResult plain1 = run_cli("table --d 2 --lambda 1,0,0");
    RunResult plain2 = run_cli("table --d 2 --lambda 1,0,0");
    CHECK(plain1.output == plain2.output);

    std::string with_cache = "table --d 2 --lambda 1,0,0 --cache-dir " + dir.string();
    RunResult miss = run_cli(with_cache);
    CHECK(miss.exit_code == 0);
    CHECK(miss.output == plain1.output);
    // a cache file now exists and the second run reuses it byte for byte
    bool has_file = false;
    for (const auto& e : fs::directory_iterator(dir)) has_file |= e.is_regular_file();
    CHECK(has_file);
    RunResult hit = run_cli(with_cache);
    CHECK(hit.exit_code == 0);
    CHECK(hit.output == plain1.output);

    // windowed command through the cache as well
    std::string local_cmd = "local --d 2 --j 1 --p 0 --window 3 --cache-dir " + dir.string();
    RunResult lm = run_cli(local_cmd);
    RunResult lh = run_cli(local_cmd);
    CHECK(lm.exit_code == 0);
    CHECK(lm.output == lh.output);
    CHECK(lm.output == run_cli("local --d 2 --j 1 --p 0 --window 3").output);

    fs::remove_all(dir);
}

TEST_CASE("cache directory from the environment") {
    fs::path dir = fs::temp_directory_path() / "bggcoh-env-cache";
    fs::remove_all(dir);
    std::string prefix = "BGGCOH_CACHE_DIR=" + dir.string() + " ";
    RunResult r1 = run_cli_env(prefix, "table --d 1 --lambda 2,0");
    CHECK(r1.exit_code == 0);
    bool has_file = fs::exists(dir) && !fs::is_empty(dir);
    CHECK(has_file);
    RunResult r2 = run_cli_env(prefix, "table --d 1 --lambda 2,0");
    CHECK(r2.output == r1.output);
    fs::remove_all(dir);
}

TEST_CASE("csv and text formats render") {
    RunResult csv = run_cli("table --d 1 --lambda 0,0 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("d,lambda,degree,parabolic,dim_V,q_dim,analog") == 0);
    CHECK(csv.output.find("finite-field") != std::string::npos);

    RunResult txt = run_cli("local --d 2 --j 1 --p 0 --window 2 --format text");
    CHECK(txt.exit_code == 0);
    CHECK(txt.output.find("local_cohomology") != std::string::npos);

    RunResult lcsv = run_cli("local --d 2 --j 1 --p 0 --window 2 --format csv");
    CHECK(lcsv.exit_code == 0);
    CHECK(lcsv.output.rfind("d,j,p,k,window,coh_degree,m0,m1,m2,dim", 0) == 0);
    CHECK(lcsv.output.find("2,1,0,0,2,1,") != std::string::npos);
}
