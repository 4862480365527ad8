// Command-line front end: inspect coefficients and sections, compute
// spectra, classify clustering, and run full experiment suites.
//
// Exit codes: 0 all checks pass, 1 at least one failure, 2 configuration
// or usage error.

#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toeplab/lab/csv.hpp"
#include "toeplab/lab/runner.hpp"
#include "toeplab/lab/suites.hpp"
#include "toeplab/spectral.hpp"
#include "toeplab/structured.hpp"
#include "toeplab/symbols.hpp"

namespace {

using namespace toeplab;
using namespace toeplab::lab;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::fputs(content.c_str(), stdout);
    } else {
        write_file_atomic(out_path, content);
        std::printf("wrote %s\n", out_path.c_str());
    }
}

Matrix build_section(const std::string& kind, const SymbolSpec& f, const SymbolSpec& g,
                     int n, int K) {
    if (kind == "toeplitz") return toeplitz(catalog_coeffs(f, K), n).mat;
    if (kind == "hankel") return hankel_section(catalog_coeffs(f, K), n).mat;
    if (kind == "semicommutator") return truncated_semicommutator_section(f, g, n, K);
    if (kind == "semicommutator-exact") return exact_semicommutator_section(f, g, n);
    throw CLI::ValidationError("matrix",
                               "unknown section kind '" + kind +
                                   "' (toeplitz, hankel, semicommutator, "
                                   "semicommutator-exact)");
}

void print_report(const SuiteReport& r) {
    for (const auto& note : r.notes) std::printf("# %s\n", note.c_str());
    for (const auto& c : r.cases)
        std::printf("[%s] %s: measured=%s tolerance=%s\n", c.pass ? "pass" : "FAIL",
                    c.name.c_str(), c.measured.c_str(), c.tolerance.c_str());
    std::printf("suite %s: %s\n", r.suite.c_str(), r.passed() ? "pass" : "FAIL");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structured-section spectral workbench"};
    app.require_subcommand(1);

    std::string f_label = "sawtooth", g_label, out_path, config_path, section_kind = "toeplitz";
    int K = 128, n = 64, inner = 512;
    std::vector<int> ns;
    std::vector<double> epsilons;

    auto add_symbol_opts = [&](CLI::App* cmd, bool with_g) {
        cmd->add_option("-f,--symbol", f_label, "symbol label (e.g. sawtooth, cos, smoothexp:0.5)");
        if (with_g) cmd->add_option("-g,--second", g_label, "second symbol label (default: conj f)");
        cmd->add_option("-o,--out", out_path, "output file (default: stdout)");
    };

    auto* c_coeffs = app.add_subcommand("coeffs", "print Fourier coefficients k,re,im");
    add_symbol_opts(c_coeffs, false);
    c_coeffs->add_option("-K,--trunc", K, "coefficient truncation");

    auto* c_matrix = app.add_subcommand("matrix", "print a finite section i,j,re,im");
    add_symbol_opts(c_matrix, true);
    c_matrix->add_option("-k,--kind", section_kind,
                         "toeplitz | hankel | semicommutator | semicommutator-exact");
    c_matrix->add_option("-n,--order", n, "section order");
    c_matrix->add_option("-K,--trunc", K, "coefficient truncation");

    auto* c_spectrum = app.add_subcommand("spectrum", "singular values of a section");
    add_symbol_opts(c_spectrum, true);
    c_spectrum->add_option("-k,--kind", section_kind,
                           "toeplitz | hankel | semicommutator | semicommutator-exact");
    c_spectrum->add_option("-n,--order", n, "section order");
    c_spectrum->add_option("-K,--trunc", K, "coefficient truncation");

    auto* c_cluster = app.add_subcommand("cluster", "outlier counts and cluster verdict");
    add_symbol_opts(c_cluster, true);
    c_cluster->add_option("-k,--kind", section_kind,
                          "hankel | semicommutator | semicommutator-exact");
    c_cluster->add_option("-N,--orders", ns, "section sizes, ascending")->delimiter(',');
    c_cluster->add_option("-e,--epsilons", epsilons, "thresholds, descending")->delimiter(',');
    c_cluster->add_option("-K,--trunc", K, "coefficient truncation");

    std::vector<std::string> verify_suites;
    auto* c_verify = app.add_subcommand("verify", "run verification suites, print reports");
    add_symbol_opts(c_verify, true);
    c_verify->add_option("suites", verify_suites,
                         "suite names (widom positivity uchiyama cluster flip mo-profile "
                         "compactness-probe theorem-16 theorem-17 theorem-18)");
    c_verify->add_option("-c,--config", config_path, "config file (flags override)");
    auto* verify_k = c_verify->add_option("-K,--trunc", K, "coefficient truncation");
    auto* verify_inner =
        c_verify->add_option("--inner", inner, "inner truncation for the identity check");

    auto* c_run = app.add_subcommand("run", "run configured suites, write CSV artifacts");
    c_run->add_option("-c,--config", config_path, "config file");
    std::string run_out_dir;
    c_run->add_option("-o,--out", run_out_dir, "output directory (overrides config)");
    std::uint64_t run_seed = 0;
    auto* seed_opt = c_run->add_option("--seed", run_seed, "RNG seed (overrides config)");

    try {
        app.parse(argc, argv);

        if (*c_coeffs) {
            const SymbolSpec f = SymbolSpec::parse(f_label);
            emit(out_path, coeffs_csv(catalog_coeffs(f, K)));
            return 0;
        }

        ExperimentConfig cfg;
        if (!config_path.empty()) cfg = ExperimentConfig::from_file(config_path);
        if (*c_verify) {
            // flags override the config file when given
            if (c_verify->count("-f") > 0) cfg.f_label = f_label;
            if (!g_label.empty()) cfg.g_label = g_label;
        } else if (!*c_run) {
            // section-level subcommands take symbols from flags only
            cfg.f_label = f_label;
            if (!g_label.empty()) cfg.g_label = g_label;
        }
        const SymbolSpec f = SymbolSpec::parse(cfg.f_label);
        const SymbolSpec g = resolve_g(cfg, f);

        if (*c_matrix) {
            emit(out_path, matrix_csv(build_section(section_kind, f, g, n, K)));
            return 0;
        }
        if (*c_spectrum) {
            emit(out_path, spectrum_csv(singular_values(build_section(section_kind, f, g, n, K))));
            return 0;
        }
        if (*c_cluster) {
            if (ns.empty()) ns = cfg.ns;
            if (epsilons.empty()) epsilons = cfg.epsilons;
            const ClusterReport cr = cluster_of_sections(
                [&](int order) { return build_section(section_kind, f, g, order, K); }, ns,
                epsilons, cfg.cluster_thresholds);
            emit(out_path, cluster_csv(cr));
            return 0;
        }
        if (*c_verify) {
            if (*verify_k) cfg.K = K;
            if (*verify_inner) cfg.inner = inner;
            if (!verify_suites.empty()) cfg.suites = verify_suites;
            cfg.validate();
            bool ok = true;
            for (const auto& name : cfg.suites) {
                const SuiteOutput out = run_suite(name, cfg);
                print_report(out.report);
                ok = ok && out.report.passed();
            }
            return ok ? 0 : 1;
        }
        if (*c_run) {
            if (config_path.empty() && cfg.f_label.empty())
                throw std::invalid_argument("run: a config file or defaults are required");
            if (!run_out_dir.empty()) cfg.out_dir = run_out_dir;
            if (*seed_opt) cfg.seed = run_seed;
            const RunResult result = run(cfg);
            for (const auto& r : result.reports) print_report(r);
            std::printf("%zu files written to %s\n", result.files_written.size(),
                        cfg.out_dir.c_str());
            return result.all_passed ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
