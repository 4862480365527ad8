#include "toeplab/lab/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace toeplab::lab {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string coeffs_csv(const FourierCoeffs& c) {
    std::string out = "k,re,im\n";
    for (int k = -c.K; k <= c.K; ++k) {
        const cplx v = c.at(k);
        out += std::to_string(k) + "," + fmt17(v.real()) + "," + fmt17(v.imag()) + "\n";
    }
    return out;
}

std::string matrix_csv(const Matrix& m) {
    std::string out = "i,j,re,im\n";
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out += std::to_string(i) + "," + std::to_string(j) + "," +
                   fmt17(m(i, j).real()) + "," + fmt17(m(i, j).imag()) + "\n";
    return out;
}

std::string spectrum_csv(const SingularSpectrum& s) {
    std::string out = "n,index,sigma\n";
    for (std::size_t i = 0; i < s.values.size(); ++i)
        out += std::to_string(s.n) + "," + std::to_string(i) + "," + fmt17(s.values[i]) + "\n";
    return out;
}

std::string cluster_csv(const ClusterReport& r) {
    std::string out = "n,epsilon,count\n";
    for (std::size_t i = 0; i < r.ns.size(); ++i)
        for (std::size_t e = 0; e < r.epsilons.size(); ++e)
            out += std::to_string(r.ns[i]) + "," + fmt17(r.epsilons[e]) + "," +
                   std::to_string(r.counts[i][e]) + "\n";
    out += "# verdict overall=" + to_string(r.overall);
    for (std::size_t e = 0; e < r.epsilons.size(); ++e)
        out += " eps=" + fmt17(r.epsilons[e]) + ":" + to_string(r.per_epsilon[e]);
    out += "\n";
    return out;
}

std::string profile_csv(const OscillationProfile& p) {
    std::string out = "delta,value\n";
    for (std::size_t i = 0; i < p.deltas.size(); ++i)
        out += fmt17(p.deltas[i]) + "," + fmt17(p.values[i]) + "\n";
    return out;
}

std::string suite_csv(const SuiteReport& r) {
    std::string out = "suite,case,measured,tolerance,pass\n";
    for (const auto& c : r.cases)
        out += r.suite + "," + c.name + "," + c.measured + "," + c.tolerance + "," +
               (c.pass ? "1" : "0") + "\n";
    for (const auto& n : r.notes) out += "# " + n + "\n";
    return out;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open for writing: " + tmp.string());
        f << content;
        if (!f) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace toeplab::lab
