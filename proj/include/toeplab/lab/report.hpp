#ifndef TOEPLAB_LAB_REPORT_HPP
#define TOEPLAB_LAB_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace toeplab::lab {

// Every case carries the measured value and the tolerance (or expectation)
// it was judged against; a bare pass/fail is never reported alone.
struct CaseResult {
    std::string name;
    std::string measured;
    std::string tolerance;
    bool pass = true;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;
    // provenance: K, inner, M, truncation flags, symbol labels
    std::vector<std::string> notes;

    bool passed() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, std::string measured, std::string tolerance, bool pass) {
        cases.push_back({std::move(name), std::move(measured), std::move(tolerance), pass});
    }
};

// A suite's report plus any plot-ready tables it produced
// (filename -> file content; map keeps artifact order deterministic).
struct SuiteOutput {
    SuiteReport report;
    std::map<std::string, std::string> artifacts;
};

}  // namespace toeplab::lab

#endif
