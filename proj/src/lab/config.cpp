#include "toeplab/lab/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace toeplab::lab {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

bool is_pow2(int m) { return m > 0 && (m & (m - 1)) == 0; }

}  // namespace

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& t : split_csv(s)) out.push_back(std::stoi(t));
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    for (const auto& t : split_csv(s)) out.push_back(std::stod(t));
    return out;
}

void ExperimentConfig::apply(const std::string& key, const std::string& value) {
    if (key == "symbols.f") f_label = value;
    else if (key == "symbols.g") g_label = value;
    else if (key == "grid.ns") ns = parse_int_list(value);
    else if (key == "grid.epsilons") epsilons = parse_double_list(value);
    else if (key == "trunc.K") K = std::stoi(value);
    else if (key == "trunc.inner") inner = std::stoi(value);
    else if (key == "sample.M") M = std::stoi(value);
    else if (key == "suites") suites = split_csv(value);
    else if (key == "out.dir") out_dir = value;
    else if (key == "seed") seed = std::stoull(value);
    else if (key == "uchiyama.trials") uchiyama_trials = std::stoi(value);
    else if (key == "mo.lo") mo_lo = std::stod(value);
    else if (key == "mo.hi") mo_hi = std::stod(value);
    else if (key == "cluster.weak_decay") cluster_thresholds.weak_decay = std::stod(value);
    else if (key == "cluster.spread") cluster_thresholds.proportional_spread = std::stod(value);
    else throw std::invalid_argument("unknown config key '" + key + "'");
}

void ExperimentConfig::validate() const {
    if (f_label.empty()) throw std::invalid_argument("config: symbols.f is required");
    if (ns.empty()) throw std::invalid_argument("config: grid.ns is empty");
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] < 1) throw std::invalid_argument("config: section sizes must be >= 1");
        if (i > 0 && ns[i] <= ns[i - 1])
            throw std::invalid_argument("config: grid.ns must be strictly increasing");
    }
    if (epsilons.empty()) throw std::invalid_argument("config: grid.epsilons is empty");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (epsilons[i] <= 0) throw std::invalid_argument("config: epsilons must be positive");
        if (i > 0 && epsilons[i] >= epsilons[i - 1])
            throw std::invalid_argument("config: grid.epsilons must be strictly decreasing");
    }
    if (K < 1 || inner < 1 || M < 1)
        throw std::invalid_argument("config: trunc.K, trunc.inner, sample.M must be positive");
    if (!is_pow2(M) || M < 8)
        throw std::invalid_argument("config: sample.M must be a power of two, M >= 8");
    if (uchiyama_trials < 1)
        throw std::invalid_argument("config: uchiyama.trials must be positive");
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("config: cannot open '" + path + "'");
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not 'key = value'");
        cfg.apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

}  // namespace toeplab::lab
