#ifndef TOEPLAB_LAB_CSV_HPP
#define TOEPLAB_LAB_CSV_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "toeplab/lab/report.hpp"
#include "toeplab/spectral.hpp"
#include "toeplab/symbols.hpp"

namespace toeplab::lab {

// 17 significant digits, locale-independent
std::string fmt17(double v);

std::string coeffs_csv(const FourierCoeffs& c);                    // k,re,im
std::string matrix_csv(const Matrix& m);                           // i,j,re,im
std::string spectrum_csv(const SingularSpectrum& s);               // n,index,sigma
std::string cluster_csv(const ClusterReport& r);                   // n,epsilon,count + verdicts
std::string profile_csv(const OscillationProfile& p);              // delta,value
std::string suite_csv(const SuiteReport& r);                       // suite,case,measured,tolerance,pass

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

// Write-then-rename so partially written artifacts never appear.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace toeplab::lab

#endif
