#ifndef TOEPLAB_LAB_RUNNER_HPP
#define TOEPLAB_LAB_RUNNER_HPP

#include <string>
#include <vector>

#include "toeplab/lab/config.hpp"
#include "toeplab/lab/report.hpp"

namespace toeplab::lab {

struct RunResult {
    std::vector<SuiteReport> reports;
    std::vector<std::string> files_written;  // sorted paths relative to out_dir
    bool all_passed = true;
};

// Validates the config, executes every configured suite, then writes
// suite_<name>.csv per suite, the suites' artifact tables, summary.csv, and
// manifest.csv (path,fnv1a64 per file, sorted, excluding the manifest).
// Nothing is written until every suite has finished, so a crash mid-run
// leaves no partial output directory.
RunResult run(const ExperimentConfig& cfg);

}  // namespace toeplab::lab

#endif
