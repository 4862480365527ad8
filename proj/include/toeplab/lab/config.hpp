#ifndef TOEPLAB_LAB_CONFIG_HPP
#define TOEPLAB_LAB_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "toeplab/spectral.hpp"

namespace toeplab::lab {

// Flat key-value experiment configuration. Documented keys:
//   symbols.f, symbols.g     symbol labels (g empty -> conj f)
//   grid.ns                  comma-separated section sizes, strictly increasing
//   grid.epsilons            comma-separated thresholds, strictly decreasing
//   trunc.K                  coefficient truncation for the section pipeline
//   trunc.inner              Widom inner-product truncation
//   sample.M                 sampling grid size (power of two)
//   suites                   comma-separated suite names
//   out.dir                  output directory
//   seed                     RNG seed for the randomized checks
//   uchiyama.trials          random states per Uchiyama case
//   mo.lo / mo.hi            VMO-likeness thresholds at delta = 2pi/256
//   cluster.weak_decay, cluster.spread   classifier thresholds
struct ExperimentConfig {
    std::string f_label = "sawtooth";
    std::string g_label;  // empty -> conj(f)
    std::vector<int> ns{64, 128, 256, 512, 1024};
    std::vector<double> epsilons{0.2, 0.1, 0.05, 0.01};
    int K = 128;
    int inner = 512;  // 4*K
    int M = 4096;
    std::vector<std::string> suites{"widom",  "positivity", "uchiyama",
                                    "cluster", "flip",       "mo-profile",
                                    "compactness-probe"};
    std::string out_dir = "out";
    std::uint64_t seed = 42;
    int uchiyama_trials = 1000;
    double mo_lo = 0.05;
    double mo_hi = 0.2;
    ClusterThresholds cluster_thresholds{};

    void apply(const std::string& key, const std::string& value);
    void validate() const;  // throws std::invalid_argument on bad grids

    static ExperimentConfig from_file(const std::string& path);
};

std::vector<int> parse_int_list(const std::string& s);
std::vector<double> parse_double_list(const std::string& s);

}  // namespace toeplab::lab

#endif
