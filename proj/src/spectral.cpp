#include "toeplab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace toeplab {

namespace {

double asymmetry(const Matrix& m) { return (m - m.adjoint()).norm(); }

bool hermitian_within_tol(const Matrix& m) {
    return asymmetry(m) <= 1e-10 * (1.0 + m.norm());
}

std::vector<double> descending(Eigen::VectorXd v) {
    std::vector<double> out(v.data(), v.data() + v.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
    const double asym = asymmetry(m);
    if (asym > 1e-10 * (1.0 + m.norm())) {
        std::ostringstream oss;
        oss << "hermitian_eigenvalues: input is not Hermitian, ||M - M*||_F = " << asym;
        throw std::invalid_argument(oss.str());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigenvalues: eigensolver failed to converge");
    return descending(solver.eigenvalues());
}

SingularSpectrum singular_values(const Matrix& m) {
    const int n = static_cast<int>(m.rows());
    SingularSpectrum s;
    s.n = n;
    if (hermitian_within_tol(m)) {
        // symmetrize away the sub-tolerance asymmetry before solving
        Matrix h = 0.5 * (m + m.adjoint());
        Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("singular_values: eigensolver failed to converge");
        Eigen::VectorXd ev = solver.eigenvalues().cwiseAbs();
        s.values = descending(ev);
    } else if (n <= 512) {
        Eigen::BDCSVD<Matrix> svd(m);
        s.values = descending(svd.singularValues());
    } else {
        // sqrt of the Gram spectrum; cheap at large n, accuracy ~sqrt(eps)
        // on the smallest values, which the clamp below absorbs
        Eigen::SelfAdjointEigenSolver<Matrix> solver(m.adjoint() * m, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("singular_values: eigensolver failed to converge");
        Eigen::VectorXd ev = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
        s.values = descending(ev);
    }
    if (!s.values.empty() && s.values.front() > 0.0) {
        const double floor = 1e-12 * s.values.front();
        for (double& v : s.values)
            if (v < floor) v = 0.0;
    }
    return s;
}

int outlier_count(const SingularSpectrum& s, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("outlier_count: eps must be positive");
    int c = 0;
    for (double v : s.values)
        if (v >= eps) ++c;
    return c;
}

int eps_rank(const Matrix& m, double eps) {
    return outlier_count(singular_values(m), eps);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Strong: return "strong";
        case Verdict::Weak: return "weak";
        case Verdict::None: return "none";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// strength order used for the overall reduction
int strength(Verdict v) {
    switch (v) {
        case Verdict::Strong: return 3;
        case Verdict::Weak: return 2;
        case Verdict::Inconclusive: return 1;
        case Verdict::None: return 0;
    }
    return 0;
}

Verdict classify_column(const std::vector<int>& ns, const std::vector<int>& col,
                        const ClusterThresholds& t) {
    const std::size_t m = ns.size();
    const std::size_t half_start = m - (m + 1) / 2;

    bool constant_tail = true;
    for (std::size_t i = half_start + 1; i < m; ++i)
        if (col[i] != col[half_start]) constant_tail = false;
    if (constant_tail) return Verdict::Strong;

    bool nondecreasing = true;
    for (std::size_t i = 1; i < m; ++i)
        if (col[i] < col[i - 1]) nondecreasing = false;
    const double r_first = static_cast<double>(col.front()) / ns.front();
    const double r_last = static_cast<double>(col.back()) / ns.back();
    if (nondecreasing && r_last <= t.weak_decay * r_first) return Verdict::Weak;

    double r_min = 1.0, r_max = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = static_cast<double>(col[i]) / ns[i];
        r_min = std::min(r_min, r);
        r_max = std::max(r_max, r);
    }
    if (r_max > 0.0 && (r_max - r_min) / r_max <= t.proportional_spread) return Verdict::None;

    return Verdict::Inconclusive;
}

}  // namespace

ClusterReport classify_cluster(const std::vector<int>& ns,
                               const std::vector<double>& epsilons,
                               const std::vector<std::vector<int>>& counts,
                               const ClusterThresholds& thresholds) {
    if (ns.size() < 4)
        throw std::invalid_argument("classify_cluster: need at least 4 section sizes");
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (ns[i] <= ns[i - 1])
            throw std::invalid_argument("classify_cluster: ns must be strictly increasing");
    if (counts.size() != ns.size())
        throw std::invalid_argument("classify_cluster: counts table has wrong row count");
    for (const auto& row : counts)
        if (row.size() != epsilons.size())
            throw std::invalid_argument("classify_cluster: counts table has wrong column count");

    ClusterReport report;
    report.ns = ns;
    report.epsilons = epsilons;
    report.counts = counts;
    report.per_epsilon.reserve(epsilons.size());
    Verdict overall = Verdict::Strong;
    for (std::size_t e = 0; e < epsilons.size(); ++e) {
        std::vector<int> col(ns.size());
        for (std::size_t i = 0; i < ns.size(); ++i) col[i] = counts[i][e];
        Verdict v = classify_column(ns, col, thresholds);
        report.per_epsilon.push_back(v);
        if (strength(v) < strength(overall)) overall = v;
    }
    report.overall = overall;
    return report;
}

ClusterReport cluster_of_sections(const std::function<Matrix(int)>& builder,
                                  const std::vector<int>& ns,
                                  const std::vector<double>& epsilons,
                                  const ClusterThresholds& thresholds) {
    std::vector<std::vector<int>> counts;
    counts.reserve(ns.size());
    for (int n : ns) {
        SingularSpectrum s = singular_values(builder(n));
        std::vector<int> row;
        row.reserve(epsilons.size());
        for (double eps : epsilons) row.push_back(outlier_count(s, eps));
        counts.push_back(std::move(row));
    }
    return classify_cluster(ns, epsilons, counts, thresholds);
}

}  // namespace toeplab
