#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string bin() {
    const char* b = std::getenv("RENTSIM_BIN");
    REQUIRE(b != nullptr);
    return b;
}

std::string repo() {
    const char* r = std::getenv("RENTSIM_REPO");
    REQUIRE(r != nullptr);
    return r;
}

int run(const std::string& args) {
    const std::string cmd = bin() + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("rentsim_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static inline int counter = 0;
};

}  // namespace

TEST_CASE("simulate writes the three report files") {
    TempDir tmp;
    const fs::path out = tmp.path / "d";
    CHECK(run("simulate --days 30 --seed 42 --out " + out.string()) == 0);
    CHECK(fs::exists(out / "daily.csv"));
    CHECK(fs::exists(out / "summary.csv"));
    CHECK(fs::exists(out / "summary.json"));
}

TEST_CASE("identical invocations produce byte-identical files") {
    TempDir tmp;
    const fs::path a = tmp.path / "a";
    const fs::path b = tmp.path / "b";
    // same --out string both times so the embedded manifests agree
    const std::string out_rel = "run_out";
    fs::create_directories(a);
    fs::create_directories(b);
    const std::string args = " simulate --days 20 --seed 7 --out " + out_rel;
    CHECK(WEXITSTATUS(std::system(("cd " + a.string() + " && " + bin() + args + " >/dev/null 2>&1").c_str())) == 0);
    CHECK(WEXITSTATUS(std::system(("cd " + b.string() + " && " + bin() + args + " >/dev/null 2>&1").c_str())) == 0);
    for (const char* f : {"daily.csv", "summary.csv", "summary.json"}) {
        CHECK(slurp(a / out_rel / f) == slurp(b / out_rel / f));
    }
}

TEST_CASE("usage errors exit 1") {
    TempDir tmp;
    CHECK(run("simulate --days 0 --out " + (tmp.path / "x").string()) == 1);
    CHECK(run("simulate --days -3") == 1);
    CHECK(run("simulate --no-such-flag") == 1);
    CHECK(run("") == 1);  // missing subcommand
    CHECK(run("sweep --days 5 --levels -4 --out " + (tmp.path / "y").string()) == 1);
}

TEST_CASE("config errors exit 1 and leave no result files") {
    TempDir tmp;
    const fs::path cfg = tmp.path / "bad.cfg";
    std::ofstream(cfg) << "[model]\np_eligible = 2.0\n";
    const fs::path out = tmp.path / "out";
    CHECK(run("simulate --config " + cfg.string() + " --out " + out.string()) == 1);
    CHECK_FALSE(fs::exists(out));

    std::ofstream(cfg) << "[model]\nfleet = 1\n";  // unknown key
    CHECK(run("simulate --config " + cfg.string() + " --out " + out.string()) == 1);
    CHECK_FALSE(fs::exists(out));

    CHECK(run("simulate --config " + (tmp.path / "missing.cfg").string()) == 1);
}

TEST_CASE("unwritable output location exits 2") {
    TempDir tmp;
    const fs::path blocker = tmp.path / "file";
    std::ofstream(blocker) << "x";
    // out dir nested under a regular file can never be created
    CHECK(run("simulate --days 1 --out " + (blocker / "sub").string()) == 2);
}

TEST_CASE("the shipped config loads and simulates") {
    TempDir tmp;
    const fs::path out = tmp.path / "out";
    const std::string cfg = repo() + "/configs/default.cfg";
    CHECK(run("simulate --config " + cfg + " --days 30 --out " + out.string()) == 0);
    const std::string daily = slurp(out / "daily.csv");
    CHECK(daily.find("# config: " + cfg) != std::string::npos);
    CHECK(daily.find("driver_count = 5") != std::string::npos);  // resolved config embedded
    CHECK(daily.find("# seed: 4242") != std::string::npos);      // seed from the file
}

TEST_CASE("a --seed flag overrides the config file seed") {
    TempDir tmp;
    const fs::path out = tmp.path / "out";
    const std::string cfg = repo() + "/configs/default.cfg";
    CHECK(run("simulate --config " + cfg + " --seed 777 --days 5 --out " + out.string()) == 0);
    const std::string daily = slurp(out / "daily.csv");
    CHECK(daily.find("# seed: 777") != std::string::npos);
    CHECK(daily.find("master_seed = 777") != std::string::npos);
}

TEST_CASE("sweep emits the matrix, per-level dailies and the recommendation") {
    TempDir tmp;
    const fs::path out = tmp.path / "out";
    CHECK(run("sweep --days 10 --seed 5 --levels 30,40,50,53 --out " + out.string()) == 0);
    CHECK(fs::exists(out / "profit_matrix.csv"));
    CHECK(fs::exists(out / "summary.json"));
    for (const char* f :
         {"daily_level_30.csv", "daily_level_40.csv", "daily_level_50.csv",
          "daily_level_53.csv", "summary_level_30.csv", "summary_level_53.csv"}) {
        CHECK(fs::exists(out / f));
    }
    const std::string matrix = slurp(out / "profit_matrix.csv");
    CHECK(matrix.find("day,30,40,50,53") != std::string::npos);
    CHECK(matrix.find("Total,") != std::string::npos);
    CHECK(matrix.find("Mean,") != std::string::npos);
    const std::string json = slurp(out / "summary.json");
    CHECK(json.find("\"recommendation\"") != std::string::npos);
    CHECK(json.find("\"level\"") != std::string::npos);
}

TEST_CASE("a single-level sweep recommends that level") {
    TempDir tmp;
    const fs::path out = tmp.path / "out";
    CHECK(run("sweep --days 5 --seed 5 --levels 40 --out " + out.string()) == 0);
    const std::string json = slurp(out / "summary.json");
    CHECK(json.find("\"level\": 40") != std::string::npos);
}

TEST_CASE("format selection controls which files appear") {
    TempDir tmp;
    const fs::path out = tmp.path / "csv_only";
    CHECK(run("simulate --days 2 --format csv --out " + out.string()) == 0);
    CHECK(fs::exists(out / "daily.csv"));
    CHECK_FALSE(fs::exists(out / "summary.json"));

    const fs::path out2 = tmp.path / "json_only";
    CHECK(run("simulate --days 2 --format json --out " + out2.string()) == 0);
    CHECK_FALSE(fs::exists(out2 / "daily.csv"));
    CHECK(fs::exists(out2 / "summary.json"));
}

TEST_CASE("the event trace lists fired events per day") {
    TempDir tmp;
    const fs::path out = tmp.path / "out";
    CHECK(run("simulate --days 2 --seed 3 --trace --out " + out.string()) == 0);
    const std::string trace = slurp(out / "trace.csv");
    CHECK(trace.find("time,seq,kind,entity_id") != std::string::npos);
    CHECK(trace.find("# day 1") != std::string::npos);
    CHECK(trace.find("# day 2") != std::string::npos);
    CHECK(trace.find("arrival") != std::string::npos);
}

TEST_CASE("jobs does not change the output bytes") {
    TempDir tmp;
    fs::create_directories(tmp.path / "j1");
    fs::create_directories(tmp.path / "j8");
    const std::string args1 =
        " simulate --days 40 --seed 11 --jobs 1 --out o";
    const std::string args8 =
        " simulate --days 40 --seed 11 --jobs 8 --out o";
    CHECK(WEXITSTATUS(std::system(
              ("cd " + (tmp.path / "j1").string() + " && " + bin() + args1 + " >/dev/null 2>&1")
                  .c_str())) == 0);
    CHECK(WEXITSTATUS(std::system(
              ("cd " + (tmp.path / "j8").string() + " && " + bin() + args8 + " >/dev/null 2>&1")
                  .c_str())) == 0);
    // jobs is recorded in the manifest; compare the data rows
    const auto strip = [](const std::string& text) {
        std::istringstream in(text);
        std::string line, out;
        while (std::getline(in, line)) {
            if (!line.starts_with("#")) out += line + "\n";
        }
        return out;
    };
    CHECK(strip(slurp(tmp.path / "j1" / "o" / "daily.csv")) ==
          strip(slurp(tmp.path / "j8" / "o" / "daily.csv")));
}
