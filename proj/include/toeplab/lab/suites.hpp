#ifndef TOEPLAB_LAB_SUITES_HPP
#define TOEPLAB_LAB_SUITES_HPP

#include <string>

#include "toeplab/lab/config.hpp"
#include "toeplab/lab/report.hpp"
#include "toeplab/spectral.hpp"
#include "toeplab/structured.hpp"
#include "toeplab/symbols.hpp"

namespace toeplab::lab {

// Section builders shared by the suites and the CLI.
//
// The exact builder requests every coefficient the section needs from the
// closed forms (K = n-1, product coefficients likewise), so the matrices
// are the true finite sections. The truncated builder fixes the coefficient
// support at the configured K, which is the large-n sweep mode for slowly
// decaying symbols.
Matrix exact_semicommutator_section(const SymbolSpec& f, const SymbolSpec& g, int n);
Matrix truncated_semicommutator_section(const SymbolSpec& f, const SymbolSpec& g, int n, int K);

// P_n H* H P_n for the Hankel operator with coefficients c_{m} of f
// (reflected = use c_{-m}); exact for all closed-form catalog kinds.
Matrix hankel_gram_section(const SymbolSpec& f, bool reflected, int n);

SuiteOutput suite_widom(const ExperimentConfig& cfg);
SuiteOutput suite_positivity(const ExperimentConfig& cfg);
SuiteOutput suite_uchiyama(const ExperimentConfig& cfg);
SuiteOutput suite_cluster(const ExperimentConfig& cfg);
SuiteOutput suite_flip(const ExperimentConfig& cfg);
SuiteOutput suite_mo_profile(const ExperimentConfig& cfg);
SuiteOutput suite_compactness_probe(const ExperimentConfig& cfg);
SuiteOutput suite_theorem_16(const ExperimentConfig& cfg);
SuiteOutput suite_theorem_17(const ExperimentConfig& cfg);
SuiteOutput suite_theorem_18(const ExperimentConfig& cfg);

// Dispatch by suite name; throws std::invalid_argument on unknown names.
SuiteOutput run_suite(const std::string& name, const ExperimentConfig& cfg);

// Resolves cfg.g_label, defaulting to conj(f).
SymbolSpec resolve_g(const ExperimentConfig& cfg, const SymbolSpec& f);

}  // namespace toeplab::lab

#endif
