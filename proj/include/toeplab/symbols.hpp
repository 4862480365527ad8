#ifndef TOEPLAB_SYMBOLS_HPP
#define TOEPLAB_SYMBOLS_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace toeplab {

using cplx = std::complex<double>;

// Two-sided coefficient sequence c_k, k in [-K, K]; values[j] holds c_{j-K}.
struct FourierCoeffs {
    int K = 0;
    std::vector<cplx> values;
    bool exact = true;
    // True when the symbol's full support is known to lie inside [-K, K],
    // i.e. indices beyond K are genuinely zero rather than truncated away.
    bool band_limited = false;

    cplx at(int k) const {
        if (k < -K || k > K) return cplx(0.0, 0.0);
        return values[static_cast<std::size_t>(k + K)];
    }
    void set(int k, cplx v) { values[static_cast<std::size_t>(k + K)] = v; }

    static FourierCoeffs zeros(int K, bool exact = true, bool band_limited = false);
};

enum class SymbolKind { Constant, Monomial, TrigPolynomial, Sawtooth, SmoothExp, SampledGrid };

// Catalog entry: closed-form coefficients plus a grid evaluator, or a raw
// sampled grid. The label records provenance for reports and CLI round trips.
struct SymbolSpec {
    SymbolKind kind = SymbolKind::Constant;
    std::string label;

    cplx constant{1.0, 0.0};                  // Constant
    int degree = 0;                           // Monomial
    std::vector<std::pair<int, cplx>> trig;   // TrigPolynomial: (index, coefficient)
    double decay = 1.0;                       // SmoothExp: c_k = exp(-decay*|k|)
    std::vector<cplx> samples;                // SampledGrid: M uniform points

    bool closed_form() const { return kind != SymbolKind::SampledGrid; }
    bool is_band_limited() const;
    int band_degree() const;        // max |k| with c_k != 0 for band-limited kinds
    bool real_valued() const;
    // Catalog-class prediction: does the symbol lie in VMO
    // (trig polynomials and smooth symbols yes, jump symbols no)?
    bool vmo_class() const;

    cplx coeff(int k) const;        // closed-form c_k; throws for SampledGrid
    cplx evaluate(double theta) const;

    static SymbolSpec parse(const std::string& label);
};

SymbolSpec conjugate_spec(const SymbolSpec& s);
SymbolSpec reflect_spec(const SymbolSpec& s);

// Uniform samples f(e^{i theta_j}), theta_j = 2 pi j / M.
std::vector<cplx> sample_grid(const SymbolSpec& spec, int M);

FourierCoeffs catalog_coeffs(const SymbolSpec& spec, int K);
FourierCoeffs sample_coeffs(const std::vector<cplx>& grid, int K);
FourierCoeffs conjugate_coeffs(const FourierCoeffs& c);
FourierCoeffs reflect_coeffs(const FourierCoeffs& c);
FourierCoeffs product_coeffs(const FourierCoeffs& a, const FourierCoeffs& b);

// Coefficients of the pointwise product f*g evaluated from closed forms,
// truncated to [-K, K] but with each retained coefficient computed exactly
// (finite convolution against a band-limited factor, or a machine-precision
// series for the decaying catalog kinds).
FourierCoeffs catalog_product_coeffs(const SymbolSpec& f, const SymbolSpec& g, int K);

// Mean oscillation over grid-centered windows of length at most delta:
// max over centers and admissible window sizes of the RMS deviation from
// the window mean. Monotone nondecreasing in delta by construction.
double mean_oscillation(const std::vector<cplx>& grid, double delta);

struct OscillationProfile {
    std::vector<double> deltas;
    std::vector<double> values;
};

OscillationProfile oscillation_profile(const std::vector<cplx>& grid,
                                       const std::vector<double>& deltas);

enum class MoVerdict { VmoLike, NotVmoLike, Inconclusive };
std::string to_string(MoVerdict v);

// Reads the profile at delta = 2 pi / 256 (nearest measured delta at or
// below it): below `lo` => VMO-like, above `hi` => not, else inconclusive.
MoVerdict vmo_verdict(const OscillationProfile& profile, double lo = 0.05, double hi = 0.2);

}  // namespace toeplab

#endif
