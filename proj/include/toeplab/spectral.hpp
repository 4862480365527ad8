#ifndef TOEPLAB_SPECTRAL_HPP
#define TOEPLAB_SPECTRAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "toeplab/structured.hpp"

namespace toeplab {

struct SingularSpectrum {
    int n = 0;
    std::vector<double> values;  // nonincreasing, nonnegative
};

// All n real eigenvalues in descending order. Throws when the input fails
// the Hermitian check ||M - M*||_F <= 1e-10 (1 + ||M||_F), naming the
// asymmetry magnitude.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

// Singular values, descending. Hermitian inputs go through the symmetric
// eigensolver (values = |eigenvalues|); general inputs use a dense SVD up
// to n = 512 and the sqrt-of-M*M route above that. Values below
// 1e-12 * sigma_max are clamped to zero.
SingularSpectrum singular_values(const Matrix& m);

// Count of singular values >= eps (a tie at eps counts as an outlier).
int outlier_count(const SingularSpectrum& s, double eps);

// Minimal rank r with M = R + N, ||N|| < eps; by Eckart-Young this is the
// outlier count of the singular spectrum at eps.
int eps_rank(const Matrix& m, double eps);

enum class Verdict { Strong, Weak, None, Inconclusive };
std::string to_string(Verdict v);

// Finite-data heuristic thresholds for the asymptotic cluster classes;
// overridable through the experiment config.
struct ClusterThresholds {
    double weak_decay = 0.5;          // N/n at n_max vs n_min
    double proportional_spread = 0.10;  // relative spread of N/n for "none"
};

struct ClusterReport {
    std::vector<int> ns;
    std::vector<double> epsilons;
    std::vector<std::vector<int>> counts;  // counts[ni][ei]
    std::vector<Verdict> per_epsilon;
    Verdict overall = Verdict::Inconclusive;
};

// Heuristic verdict per epsilon from the outlier-count table:
//   strong       counts constant over the largest half of ns
//   weak         nondecreasing, not constant, and N/n decays by weak_decay
//   none         N/n has relative spread <= proportional_spread
//   inconclusive otherwise
// Overall verdict is "strong" only when every epsilon is strong; otherwise
// the weakest per-epsilon verdict (strong > weak > inconclusive > none).
ClusterReport classify_cluster(const std::vector<int>& ns,
                               const std::vector<double>& epsilons,
                               const std::vector<std::vector<int>>& counts,
                               const ClusterThresholds& thresholds = {});

ClusterReport cluster_of_sections(const std::function<Matrix(int)>& builder,
                                  const std::vector<int>& ns,
                                  const std::vector<double>& epsilons,
                                  const ClusterThresholds& thresholds = {});

}  // namespace toeplab

#endif
