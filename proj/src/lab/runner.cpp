#include "toeplab/lab/runner.hpp"

#include <map>

#include "toeplab/lab/csv.hpp"
#include "toeplab/lab/suites.hpp"

namespace toeplab::lab {

RunResult run(const ExperimentConfig& cfg) {
    cfg.validate();

    RunResult result;
    std::map<std::string, std::string> files;  // relative path -> content

    for (const std::string& name : cfg.suites) {
        SuiteOutput out = run_suite(name, cfg);
        files["suite_" + name + ".csv"] = suite_csv(out.report);
        for (const auto& [fname, content] : out.artifacts) files[fname] = content;
        result.all_passed = result.all_passed && out.report.passed();
        result.reports.push_back(std::move(out.report));
    }

    std::string summary = "suite,cases,passed\n";
    for (const auto& r : result.reports)
        summary += r.suite + "," + std::to_string(r.cases.size()) + "," +
                   (r.passed() ? "1" : "0") + "\n";
    files["summary.csv"] = summary;

    std::string manifest = "path,fnv1a64\n";
    for (const auto& [path, content] : files)
        manifest += path + "," + hex64(fnv1a64(content)) + "\n";
    files["manifest.csv"] = manifest;

    for (const auto& [path, content] : files) {
        write_file_atomic(cfg.out_dir + "/" + path, content);
        result.files_written.push_back(path);
    }
    return result;
}

}  // namespace toeplab::lab
