#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "toeplab/lab/csv.hpp"
#include "toeplab/lab/runner.hpp"
#include "toeplab/lab/suites.hpp"

using namespace toeplab;
using namespace toeplab::lab;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::ostringstream oss;
    oss << f.rdbuf();
    return oss.str();
}

// small, fast grids for runner-level tests
ExperimentConfig tiny_config() {
    ExperimentConfig cfg;
    cfg.f_label = "cos";
    cfg.ns = {8, 16, 32, 64};
    cfg.epsilons = {0.2, 0.05};
    cfg.K = 32;
    cfg.inner = 64;
    cfg.M = 512;
    cfg.uchiyama_trials = 50;
    return cfg;
}

}  // namespace

TEST_CASE("config file round trip") {
    const auto path = std::filesystem::temp_directory_path() / "lab_cfg_test.txt";
    {
        std::ofstream f(path);
        f << "# comment line\n"
          << "symbols.f = smoothexp:0.5\n"
          << "symbols.g = cos\n"
          << "grid.ns = 16, 32, 64, 128\n"
          << "grid.epsilons = 0.3, 0.1\n"
          << "trunc.K = 40\n"
          << "suites = widom, flip\n"
          << "seed = 7\n";
    }
    const ExperimentConfig cfg = ExperimentConfig::from_file(path.string());
    CHECK(cfg.f_label == "smoothexp:0.5");
    CHECK(cfg.g_label == "cos");
    CHECK(cfg.ns == std::vector<int>{16, 32, 64, 128});
    CHECK(cfg.epsilons == std::vector<double>{0.3, 0.1});
    CHECK(cfg.K == 40);
    CHECK(cfg.suites == std::vector<std::string>{"widom", "flip"});
    CHECK(cfg.seed == 7);
    cfg.validate();
    std::filesystem::remove(path);
}

TEST_CASE("config rejects unknown keys and bad grids") {
    ExperimentConfig cfg;
    CHECK_THROWS_AS(cfg.apply("symbols.h", "cos"), std::invalid_argument);

    ExperimentConfig bad_ns = tiny_config();
    bad_ns.ns = {32, 16};
    CHECK_THROWS_AS(bad_ns.validate(), std::invalid_argument);

    ExperimentConfig bad_eps = tiny_config();
    bad_eps.epsilons = {0.1, 0.2};
    CHECK_THROWS_AS(bad_eps.validate(), std::invalid_argument);

    ExperimentConfig bad_m = tiny_config();
    bad_m.M = 1000;  // not a power of two
    CHECK_THROWS_AS(bad_m.validate(), std::invalid_argument);
}

TEST_CASE("fmt17 prints round-trippable doubles") {
    for (double v : {1.0 / 3.0, 0.1, 3.141592653589793, 1e-300, 0.0}) {
        CHECK(std::stod(fmt17(v)) == v);
    }
}

TEST_CASE("fnv1a64 known vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(hex64(0xcbf29ce484222325ull) == "cbf29ce484222325");
}

TEST_CASE("atomic write creates parents and replaces content") {
    const auto dir = std::filesystem::temp_directory_path() / "lab_write_test";
    std::filesystem::remove_all(dir);
    const auto path = dir / "sub" / "x.csv";
    write_file_atomic(path.string(), "one\n");
    write_file_atomic(path.string(), "two\n");
    CHECK(slurp(path) == "two\n");
    std::filesystem::remove_all(dir);
}

TEST_CASE("csv schemas carry the documented headers") {
    const FourierCoeffs c = catalog_coeffs(SymbolSpec::parse("cos"), 1);
    CHECK(coeffs_csv(c).rfind("k,re,im\n", 0) == 0);
    CHECK(matrix_csv(Matrix::Identity(2, 2)).rfind("i,j,re,im\n", 0) == 0);
    SingularSpectrum s;
    s.n = 2;
    s.values = {1.0, 0.5};
    CHECK(spectrum_csv(s).rfind("n,index,sigma\n", 0) == 0);
}

TEST_CASE("resolve_g defaults to the conjugate symbol") {
    ExperimentConfig cfg = tiny_config();
    const SymbolSpec f = SymbolSpec::parse(cfg.f_label);
    CHECK(resolve_g(cfg, f).label == "conj(cos)");
    cfg.g_label = "sin";
    CHECK(resolve_g(cfg, f).label == "sin");
}

TEST_CASE("theorem-18 refuses non-VMO symbols with a diagnostic") {
    ExperimentConfig cfg = tiny_config();
    cfg.g_label = "sawtooth";
    CHECK_THROWS_WITH_AS(static_cast<void>(suite_theorem_18(cfg)),
                         doctest::Contains("sawtooth"), std::invalid_argument);
}

TEST_CASE("unknown suite names are rejected") {
    CHECK_THROWS_AS(static_cast<void>(run_suite("nope", tiny_config())),
                    std::invalid_argument);
}

TEST_CASE("runner writes a complete, hash-consistent output directory") {
    ExperimentConfig cfg = tiny_config();
    cfg.suites = {"widom", "flip"};
    const auto dir = std::filesystem::temp_directory_path() / "lab_runner_test";
    std::filesystem::remove_all(dir);
    cfg.out_dir = dir.string();

    const RunResult r = run(cfg);
    CHECK(r.all_passed);
    CHECK(r.reports.size() == 2);

    const std::string manifest = slurp(dir / "manifest.csv");
    CHECK(manifest.rfind("path,fnv1a64\n", 0) == 0);
    std::istringstream lines(manifest);
    std::string line;
    std::getline(lines, line);  // header
    int checked = 0;
    while (std::getline(lines, line)) {
        const auto comma = line.rfind(',');
        const std::string path = line.substr(0, comma);
        const std::string hash = line.substr(comma + 1);
        CHECK(hex64(fnv1a64(slurp(dir / path))) == hash);
        ++checked;
    }
    CHECK(checked == 3);  // two suite files + summary; these suites emit no extra tables
    std::filesystem::remove_all(dir);
}

TEST_CASE("determinism: identical config and seed give identical bytes") {
    ExperimentConfig cfg = tiny_config();
    cfg.f_label = "smoothexp:0.5";
    cfg.suites = {"uchiyama", "cluster"};
    const auto d1 = std::filesystem::temp_directory_path() / "lab_det_1";
    const auto d2 = std::filesystem::temp_directory_path() / "lab_det_2";
    std::filesystem::remove_all(d1);
    std::filesystem::remove_all(d2);

    cfg.out_dir = d1.string();
    run(cfg);
    cfg.out_dir = d2.string();
    run(cfg);
    CHECK(slurp(d1 / "manifest.csv") == slurp(d2 / "manifest.csv"));

    // a different seed moves the uchiyama measurements
    cfg.seed = 99;
    const auto d3 = std::filesystem::temp_directory_path() / "lab_det_3";
    std::filesystem::remove_all(d3);
    cfg.out_dir = d3.string();
    run(cfg);
    CHECK(slurp(d1 / "suite_uchiyama.csv") != slurp(d3 / "suite_uchiyama.csv"));

    std::filesystem::remove_all(d1);
    std::filesystem::remove_all(d2);
    std::filesystem::remove_all(d3);
}

TEST_CASE("suite composability: together equals separately") {
    ExperimentConfig cfg = tiny_config();
    cfg.suites = {"widom", "positivity", "flip"};
    const auto dir = std::filesystem::temp_directory_path() / "lab_compose_test";
    std::filesystem::remove_all(dir);
    cfg.out_dir = dir.string();
    const RunResult together = run(cfg);

    for (std::size_t i = 0; i < cfg.suites.size(); ++i) {
        ExperimentConfig solo = cfg;
        solo.suites = {cfg.suites[i]};
        const SuiteOutput alone = run_suite(cfg.suites[i], solo);
        CHECK(suite_csv(alone.report) == suite_csv(together.reports[i]));
    }
    std::filesystem::remove_all(dir);
}
