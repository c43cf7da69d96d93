#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string kBin = GCLUST_BIN;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("gclust_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run_cli(const std::string& args, const std::string& stdout_path = "") {
    std::string cmd = kBin + " " + args;
    if (!stdout_path.empty()) cmd += " > " + stdout_path;
    cmd += " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.is_open());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

const std::string kSmallRun =
    "--dataset moons --n 200 --steps 1500 --eval-points 200 --seed 5";

}  // namespace

TEST_CASE("gen writes a deterministic CSV") {
    TempDir tmp;
    std::string a = tmp.file("a.csv"), b = tmp.file("b.csv");
    CHECK(run_cli("gen --kind moons --n 100 --noise 0.05 --scale 1.0 --seed 7 -o " + a) == 0);
    CHECK(run_cli("gen --kind moons --n 100 --noise 0.05 --scale 1.0 --seed 7 -o " + b) == 0);
    std::string csv = slurp(a);
    CHECK(csv == slurp(b));
    CHECK(csv.substr(0, 12) == "x0,x1,truth\n");
    CHECK(count_occurrences(csv, "\n") == 101);
}

TEST_CASE("gen with kind none leaves the truth column empty") {
    TempDir tmp;
    std::string out = tmp.file("none.csv");
    CHECK(run_cli("gen --kind none --n 50", out) == 0);
    std::string csv = slurp(out);
    CHECK(count_occurrences(csv, ",\n") == 50);
}

TEST_CASE("gen rejects unknown kinds with exit 2") {
    CHECK(run_cli("gen --kind hexagons --n 10") == 2);
}

TEST_CASE("usage errors exit 2, help exits 0") {
    CHECK(run_cli("") == 2);
    CHECK(run_cli("--definitely-not-a-flag") == 2);
    CHECK(run_cli("--help", "/dev/null") == 0);
    CHECK(run_cli("sweep --mode banana " + kSmallRun) == 2);
}

TEST_CASE("run prints the outcome and writes a reusable report") {
    TempDir tmp;
    std::string report = tmp.file("report.json");
    std::string stdout_a = tmp.file("a.txt");
    CHECK(run_cli("run " + kSmallRun + " -o " + report, stdout_a) == 0);
    std::string printed = slurp(stdout_a);
    CHECK(printed.find("L_found=") != std::string::npos);
    CHECK(printed.find("ARI=") != std::string::npos);

    nlohmann::json j = nlohmann::json::parse(slurp(report));
    CHECK(j.contains("centers"));
    CHECK(j.at("config").at("params").at("seed").get<std::uint64_t>() == 5);

    // flag -> config round trip: re-running from the echoed config reproduces
    std::string stdout_b = tmp.file("b.txt");
    CHECK(run_cli("run --config " + report, stdout_b) == 0);
    CHECK(slurp(stdout_b) == printed);
}

TEST_CASE("run accepts overrides and the finite-p path") {
    TempDir tmp;
    CHECK(run_cli("run " + kSmallRun + " --lambda 5", tmp.file("l.txt")) == 0);
    CHECK(run_cli("run " + kSmallRun + " --p 0.5", tmp.file("p.txt")) == 0);
}

TEST_CASE("run can cluster an imported CSV point cloud") {
    TempDir tmp;
    std::string data = tmp.file("cloud.csv");
    CHECK(run_cli("gen --kind blobs --n 300 --seed 3 -o " + data) == 0);
    std::string out = tmp.file("run.txt");
    CHECK(run_cli("run --data " + data + " --steps 1500 --eval-points 200 --seed 5", out) == 0);
    CHECK(slurp(out).find("L_found=") != std::string::npos);
}

TEST_CASE("run dumps Q and R matrices on request") {
    TempDir tmp;
    std::string q = tmp.file("q.csv"), r = tmp.file("r.csv");
    CHECK(run_cli("run " + kSmallRun + " --dump-q " + q + " --dump-r " + r,
                  tmp.file("out.txt")) == 0);
    std::string rcsv = slurp(r);
    CHECK(count_occurrences(rcsv, "\n") == 20);  // default k
    CHECK(count_occurrences(slurp(q), ",") == 20 * 19);
}

TEST_CASE("numerical blowup exits 1") {
    CHECK(run_cli("run " + kSmallRun + " --eta 1e308") == 1);
}

TEST_CASE("sweep emits one row per mode and tau") {
    TempDir tmp;
    std::string out = tmp.file("sweep.csv");
    CHECK(run_cli("sweep " + kSmallRun +
                      " --mode tau --taus 0.08,0.11 --norm-modes none,inf --threads 2 -o " +
                  out) == 0);
    std::string csv = slurp(out);
    CHECK(csv.substr(0, csv.find('\n')) == "norm_mode,tau,L_found,ari,success");
    CHECK(count_occurrences(csv, "\n") == 5);  // header + 2 modes x 2 taus
}

TEST_CASE("sweep over lambda emits one row per value") {
    TempDir tmp;
    std::string out = tmp.file("lambda.csv");
    CHECK(run_cli("sweep " + kSmallRun + " --mode lambda --lambdas 0.1,0.5 -o " + out) == 0);
    std::string csv = slurp(out);
    CHECK(csv.substr(0, csv.find('\n')) == "lambda,L_found,ari,success");
    CHECK(count_occurrences(csv, "\n") == 3);
}

TEST_CASE("an empty tau grid exits 2") {
    CHECK(run_cli("sweep " + kSmallRun + " --mode tau --taus ,") == 2);
}

TEST_CASE("plot renders deterministic SVG with the expected structure") {
    TempDir tmp;
    std::string report = tmp.file("report.json");
    REQUIRE(run_cli("run " + kSmallRun + " -o " + report, tmp.file("o.txt")) == 0);
    std::string svg_a = tmp.file("a.svg"), svg_b = tmp.file("b.svg");
    CHECK(run_cli("plot --report " + report + " --points 150 -o " + svg_a) == 0);
    CHECK(run_cli("plot --report " + report + " --points 150 -o " + svg_b) == 0);
    std::string svg = slurp(svg_a);
    CHECK(svg == slurp(svg_b));
    CHECK(count_occurrences(svg, "<circle") == 150);
    CHECK(count_occurrences(svg, "<polygon") == 20);
}

TEST_CASE("plot on a malformed report exits 1") {
    TempDir tmp;
    std::string bad = tmp.file("bad.json");
    std::ofstream(bad) << "{ not json";
    CHECK(run_cli("plot --report " + bad + " -o " + tmp.file("x.svg")) == 1);
    CHECK(run_cli("plot --report " + tmp.file("missing.json") + " -o " +
                  tmp.file("y.svg")) == 1);
}
