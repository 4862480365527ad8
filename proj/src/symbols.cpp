#include "toeplab/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace toeplab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_pow2(int m) { return m > 0 && (m & (m - 1)) == 0; }

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number: '" + s + "'");
    return v;
}

// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i".
cplx parse_complex(std::string s) {
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i') return cplx(parse_double(s), 0.0);
    s.pop_back();
    // split at the last +/- that is not an exponent sign and not leading
    std::size_t split = std::string::npos;
    for (std::size_t p = s.size(); p-- > 1;) {
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    auto imag_of = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_double(t);
    };
    if (split == std::string::npos) return cplx(0.0, imag_of(s));
    return cplx(parse_double(s.substr(0, split)), imag_of(s.substr(split)));
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
    return out;
}

}  // namespace

FourierCoeffs FourierCoeffs::zeros(int K, bool exact, bool band_limited) {
    if (K < 0) throw std::invalid_argument("FourierCoeffs: K must be nonnegative");
    FourierCoeffs c;
    c.K = K;
    c.values.assign(static_cast<std::size_t>(2 * K + 1), cplx(0.0, 0.0));
    c.exact = exact;
    c.band_limited = band_limited;
    return c;
}

bool SymbolSpec::is_band_limited() const {
    return kind == SymbolKind::Constant || kind == SymbolKind::Monomial ||
           kind == SymbolKind::TrigPolynomial;
}

int SymbolSpec::band_degree() const {
    switch (kind) {
        case SymbolKind::Constant:
            return 0;
        case SymbolKind::Monomial:
            return std::abs(degree);
        case SymbolKind::TrigPolynomial: {
            int d = 0;
            for (const auto& [k, v] : trig)
                if (v != cplx(0.0, 0.0)) d = std::max(d, std::abs(k));
            return d;
        }
        default:
            throw std::logic_error("band_degree: symbol is not band-limited");
    }
}

bool SymbolSpec::real_valued() const {
    switch (kind) {
        case SymbolKind::Constant:
            return constant.imag() == 0.0;
        case SymbolKind::Monomial:
            return degree == 0;
        case SymbolKind::TrigPolynomial: {
            // real iff c_{-k} = conj(c_k) throughout
            for (const auto& [k, v] : trig) {
                cplx mirror(0.0, 0.0);
                for (const auto& [k2, v2] : trig)
                    if (k2 == -k) mirror += v2;
                cplx self(0.0, 0.0);
                for (const auto& [k2, v2] : trig)
                    if (k2 == k) self += v2;
                if (std::abs(mirror - std::conj(self)) > 1e-15) return false;
            }
            return true;
        }
        case SymbolKind::Sawtooth:
        case SymbolKind::SmoothExp:
            return true;
        case SymbolKind::SampledGrid:
            for (const cplx& v : samples)
                if (std::abs(v.imag()) > 1e-12) return false;
            return true;
    }
    return false;
}

bool SymbolSpec::vmo_class() const {
    switch (kind) {
        case SymbolKind::Constant:
        case SymbolKind::Monomial:
        case SymbolKind::TrigPolynomial:
        case SymbolKind::SmoothExp:
            return true;
        case SymbolKind::Sawtooth:
            return false;  // bounded with a jump: L-infinity but not VMO
        case SymbolKind::SampledGrid:
            throw std::invalid_argument("vmo_class: no catalog class for sampled grids");
    }
    return false;
}

cplx SymbolSpec::coeff(int k) const {
    switch (kind) {
        case SymbolKind::Constant:
            return k == 0 ? constant : cplx(0.0, 0.0);
        case SymbolKind::Monomial:
            return k == degree ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
        case SymbolKind::TrigPolynomial: {
            cplx v(0.0, 0.0);
            for (const auto& [j, c] : trig)
                if (j == k) v += c;
            return v;
        }
        case SymbolKind::Sawtooth:
            // (pi - theta)/pi on (0, 2pi): c_k = 1/(i pi k), c_0 = 0
            if (k == 0) return cplx(0.0, 0.0);
            return cplx(0.0, -1.0 / (kPi * k));
        case SymbolKind::SmoothExp:
            return cplx(std::exp(-decay * std::abs(k)), 0.0);
        case SymbolKind::SampledGrid:
            throw std::invalid_argument(
                "coeff: sampled grids have no closed-form coefficients; use sample_coeffs");
    }
    return cplx(0.0, 0.0);
}

cplx SymbolSpec::evaluate(double theta) const {
    switch (kind) {
        case SymbolKind::Constant:
            return constant;
        case SymbolKind::Monomial:
            return std::polar(1.0, degree * theta);
        case SymbolKind::TrigPolynomial: {
            cplx v(0.0, 0.0);
            for (const auto& [k, c] : trig) v += c * std::polar(1.0, k * theta);
            return v;
        }
        case SymbolKind::Sawtooth: {
            double t = std::fmod(theta, kTwoPi);
            if (t < 0) t += kTwoPi;
            return cplx((kPi - t) / kPi, 0.0);
        }
        case SymbolKind::SmoothExp: {
            // Poisson-kernel closed form of sum exp(-a|k|) e^{ik theta}
            double r = std::exp(-decay);
            return cplx((1.0 - r * r) / (1.0 - 2.0 * r * std::cos(theta) + r * r), 0.0);
        }
        case SymbolKind::SampledGrid:
            throw std::invalid_argument("evaluate: use the stored grid for sampled symbols");
    }
    return cplx(0.0, 0.0);
}

SymbolSpec SymbolSpec::parse(const std::string& label) {
    SymbolSpec s;
    s.label = label;
    std::string head = label, arg;
    if (auto p = label.find(':'); p != std::string::npos) {
        head = label.substr(0, p);
        arg = label.substr(p + 1);
    }
    if (head == "constant") {
        s.kind = SymbolKind::Constant;
        s.constant = arg.empty() ? cplx(1.0, 0.0) : parse_complex(arg);
    } else if (head == "monomial") {
        s.kind = SymbolKind::Monomial;
        if (arg.empty()) throw std::invalid_argument("monomial:<integer degree> required");
        s.degree = std::stoi(arg);
    } else if (head == "trigpoly") {
        s.kind = SymbolKind::TrigPolynomial;
        if (arg.size() < 2 || arg.front() != '[' || arg.back() != ']')
            throw std::invalid_argument("trigpoly:[v@k,...] required, got '" + label + "'");
        for (const std::string& item : split_list(arg.substr(1, arg.size() - 2), ',')) {
            auto at = item.find('@');
            if (at == std::string::npos)
                throw std::invalid_argument("trigpoly entry '" + item + "' lacks '@'");
            s.trig.emplace_back(std::stoi(item.substr(at + 1)),
                                parse_complex(item.substr(0, at)));
        }
        if (s.trig.empty()) throw std::invalid_argument("trigpoly coefficient list is empty");
    } else if (head == "cos") {
        s.kind = SymbolKind::TrigPolynomial;
        s.trig = {{-1, cplx(0.5, 0.0)}, {1, cplx(0.5, 0.0)}};
    } else if (head == "sin") {
        s.kind = SymbolKind::TrigPolynomial;
        s.trig = {{-1, cplx(0.0, 0.5)}, {1, cplx(0.0, -0.5)}};
    } else if (head == "sawtooth") {
        s.kind = SymbolKind::Sawtooth;
    } else if (head == "smoothexp") {
        s.kind = SymbolKind::SmoothExp;
        s.decay = arg.empty() ? 1.0 : parse_double(arg);
        if (s.decay <= 0) throw std::invalid_argument("smoothexp decay must be positive");
    } else {
        throw std::invalid_argument("unknown symbol label '" + label + "'");
    }
    return s;
}

SymbolSpec conjugate_spec(const SymbolSpec& s) {
    SymbolSpec out = s;
    out.label = "conj(" + s.label + ")";
    switch (s.kind) {
        case SymbolKind::Constant:
            out.constant = std::conj(s.constant);
            break;
        case SymbolKind::Monomial:
            out.degree = -s.degree;
            break;
        case SymbolKind::TrigPolynomial:
            out.trig.clear();
            for (const auto& [k, v] : s.trig) out.trig.emplace_back(-k, std::conj(v));
            break;
        case SymbolKind::Sawtooth:
        case SymbolKind::SmoothExp:
            out.label = s.label;  // real symbols are self-conjugate
            break;
        case SymbolKind::SampledGrid:
            for (cplx& v : out.samples) v = std::conj(v);
            break;
    }
    return out;
}

SymbolSpec reflect_spec(const SymbolSpec& s) {
    SymbolSpec out = s;
    out.label = "reflect(" + s.label + ")";
    switch (s.kind) {
        case SymbolKind::Constant:
        case SymbolKind::SmoothExp:
            out.label = s.label;  // even
            break;
        case SymbolKind::Monomial:
            out.degree = -s.degree;
            break;
        case SymbolKind::TrigPolynomial:
            out.trig.clear();
            for (const auto& [k, v] : s.trig) out.trig.emplace_back(-k, v);
            break;
        case SymbolKind::Sawtooth:
            // f(z^{-1}) = -f(z); representable as coefficients but not as a
            // catalog kind. Callers work at the coefficient level instead.
            throw std::invalid_argument("reflect_spec: reflected sawtooth is not a catalog kind");
        case SymbolKind::SampledGrid: {
            const std::size_t m = s.samples.size();
            for (std::size_t j = 1; j < m; ++j) out.samples[j] = s.samples[m - j];
            break;
        }
    }
    return out;
}

std::vector<cplx> sample_grid(const SymbolSpec& spec, int M) {
    if (!is_pow2(M) || M < 8)
        throw std::invalid_argument("sample_grid: M must be a power of two, M >= 8");
    if (spec.kind == SymbolKind::SampledGrid) {
        if (static_cast<int>(spec.samples.size()) != M)
            throw std::invalid_argument("sample_grid: stored grid size differs from M");
        return spec.samples;
    }
    std::vector<cplx> g(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) g[static_cast<std::size_t>(j)] = spec.evaluate(kTwoPi * j / M);
    return g;
}

FourierCoeffs catalog_coeffs(const SymbolSpec& spec, int K) {
    if (K < 0) throw std::invalid_argument("catalog_coeffs: K must be nonnegative");
    if (!spec.closed_form())
        throw std::invalid_argument(
            "catalog_coeffs: sampled grids have no closed form; use sample_coeffs");
    FourierCoeffs c = FourierCoeffs::zeros(K, /*exact=*/true,
                                           spec.is_band_limited() && spec.band_degree() <= K);
    for (int k = -K; k <= K; ++k) c.set(k, spec.coeff(k));
    return c;
}

FourierCoeffs sample_coeffs(const std::vector<cplx>& grid, int K) {
    const int M = static_cast<int>(grid.size());
    if (K < 0) throw std::invalid_argument("sample_coeffs: K must be nonnegative");
    if (M < 4 * K + 4)
        throw std::invalid_argument("sample_coeffs: grid too small for requested K (aliasing); need M >= 4K+4");
    FourierCoeffs c = FourierCoeffs::zeros(K, /*exact=*/false, /*band_limited=*/false);
    for (int k = -K; k <= K; ++k) {
        cplx acc(0.0, 0.0);
        for (int j = 0; j < M; ++j)
            acc += grid[static_cast<std::size_t>(j)] * std::polar(1.0, -kTwoPi * j * k / M);
        c.set(k, acc / static_cast<double>(M));
    }
    return c;
}

FourierCoeffs conjugate_coeffs(const FourierCoeffs& c) {
    FourierCoeffs out = FourierCoeffs::zeros(c.K, c.exact, c.band_limited);
    for (int k = -c.K; k <= c.K; ++k) out.set(k, std::conj(c.at(-k)));
    return out;
}

FourierCoeffs reflect_coeffs(const FourierCoeffs& c) {
    FourierCoeffs out = FourierCoeffs::zeros(c.K, c.exact, c.band_limited);
    for (int k = -c.K; k <= c.K; ++k) out.set(k, c.at(-k));
    return out;
}

FourierCoeffs product_coeffs(const FourierCoeffs& a, const FourierCoeffs& b) {
    const int K = a.K + b.K;
    const bool bl = a.band_limited && b.band_limited;
    FourierCoeffs out = FourierCoeffs::zeros(K, a.exact && b.exact && bl, bl);
    for (int k = -K; k <= K; ++k) {
        cplx acc(0.0, 0.0);
        for (int j = -a.K; j <= a.K; ++j) acc += a.at(j) * b.at(k - j);
        out.set(k, acc);
    }
    return out;
}

FourierCoeffs catalog_product_coeffs(const SymbolSpec& f, const SymbolSpec& g, int K) {
    if (!f.closed_form() || !g.closed_form())
        throw std::invalid_argument(
            "catalog_product_coeffs: both factors need closed-form coefficients");
    const bool bl = f.is_band_limited() && g.is_band_limited();
    FourierCoeffs out = FourierCoeffs::zeros(K, /*exact=*/true,
                                             bl && f.band_degree() + g.band_degree() <= K);

    auto convolve_banded = [&](const SymbolSpec& banded, const SymbolSpec& other, bool swapped) {
        const int d = banded.band_degree();
        for (int k = -K; k <= K; ++k) {
            cplx acc(0.0, 0.0);
            for (int j = -d; j <= d; ++j) {
                cplx a = banded.coeff(j);
                if (a == cplx(0.0, 0.0)) continue;
                acc += swapped ? other.coeff(k - j) * a : a * other.coeff(k - j);
            }
            out.set(k, acc);
        }
    };

    if (f.is_band_limited()) {
        convolve_banded(f, g, false);
        return out;
    }
    if (g.is_band_limited()) {
        convolve_banded(g, f, true);
        return out;
    }
    if (f.kind == SymbolKind::Sawtooth && g.kind == SymbolKind::Sawtooth) {
        // ((pi - theta)/pi)^2: c_0 = 1/3, c_k = 2/(pi^2 k^2)
        for (int k = -K; k <= K; ++k)
            out.set(k, k == 0 ? cplx(1.0 / 3.0, 0.0) : cplx(2.0 / (kPi * kPi * k * k), 0.0));
        return out;
    }
    // Remaining catalog pairs involve at least one geometrically decaying
    // factor; sum the convolution over a window wide enough that the
    // discarded tail is below machine precision.
    double a_min = 1e300;
    if (f.kind == SymbolKind::SmoothExp) a_min = std::min(a_min, f.decay);
    if (g.kind == SymbolKind::SmoothExp) a_min = std::min(a_min, g.decay);
    const int window = static_cast<int>(std::ceil(45.0 / a_min)) + 2;
    for (int k = -K; k <= K; ++k) {
        cplx acc(0.0, 0.0);
        const int J = std::abs(k) + window;
        for (int j = -J; j <= J; ++j) acc += f.coeff(j) * g.coeff(k - j);
        out.set(k, acc);
    }
    return out;
}

namespace {

// Shared core: running max of windowed RMS deviation as the admissible
// window half-width grows. Window of half-width p (2p+1 grid points)
// spans (2p+1)*h of the circle.
class OscillationScan {
public:
    explicit OscillationScan(const std::vector<cplx>& grid)
        : M_(static_cast<int>(grid.size())) {
        if (M_ < 2) throw std::invalid_argument("mean_oscillation: grid too small");
        // windows centered near the seam reach index 2M + p < 3M
        fsum_.assign(static_cast<std::size_t>(3 * M_ + 1), cplx(0.0, 0.0));
        qsum_.assign(static_cast<std::size_t>(3 * M_ + 1), 0.0);
        for (int i = 0; i < 3 * M_; ++i) {
            const cplx v = grid[static_cast<std::size_t>(i % M_)];
            fsum_[static_cast<std::size_t>(i + 1)] = fsum_[static_cast<std::size_t>(i)] + v;
            qsum_[static_cast<std::size_t>(i + 1)] =
                qsum_[static_cast<std::size_t>(i)] + std::norm(v);
        }
    }

    int max_halfwidth(double delta) const {
        const double h = kTwoPi / M_;
        if (delta <= h)
            throw std::invalid_argument("mean_oscillation: delta is below grid resolution");
        if (delta > kTwoPi + 1e-12)
            throw std::invalid_argument("mean_oscillation: delta exceeds 2*pi");
        int p = static_cast<int>(std::floor((delta / h - 1.0) / 2.0 + 1e-9));
        return std::min(p, (M_ - 1) / 2);
    }

    // Advances the scan through half-widths (last, target] and returns the
    // running maximum RMS deviation.
    double advance(int target) {
        for (int p = last_ + 1; p <= target; ++p) {
            const double m = 2.0 * p + 1.0;
            for (int j = 0; j < M_; ++j) {
                const std::size_t lo = static_cast<std::size_t>(j + M_ - p);
                const std::size_t hi = static_cast<std::size_t>(j + M_ + p + 1);
                const cplx mean = (fsum_[hi] - fsum_[lo]) / m;
                const double msq = (qsum_[hi] - qsum_[lo]) / m - std::norm(mean);
                best_ = std::max(best_, msq);
            }
            last_ = p;
        }
        return std::sqrt(std::max(0.0, best_));
    }

private:
    int M_;
    int last_ = 0;
    double best_ = 0.0;
    std::vector<cplx> fsum_;
    std::vector<double> qsum_;
};

}  // namespace

double mean_oscillation(const std::vector<cplx>& grid, double delta) {
    OscillationScan scan(grid);
    return scan.advance(scan.max_halfwidth(delta));
}

OscillationProfile oscillation_profile(const std::vector<cplx>& grid,
                                       const std::vector<double>& deltas) {
    for (std::size_t i = 1; i < deltas.size(); ++i)
        if (deltas[i] <= deltas[i - 1])
            throw std::invalid_argument("oscillation_profile: deltas must be sorted ascending");
    OscillationScan scan(grid);
    OscillationProfile profile;
    profile.deltas = deltas;
    profile.values.reserve(deltas.size());
    for (double d : deltas) profile.values.push_back(scan.advance(scan.max_halfwidth(d)));
    return profile;
}

std::string to_string(MoVerdict v) {
    switch (v) {
        case MoVerdict::VmoLike: return "vmo-like";
        case MoVerdict::NotVmoLike: return "not-vmo-like";
        case MoVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

MoVerdict vmo_verdict(const OscillationProfile& profile, double lo, double hi) {
    if (profile.deltas.empty())
        throw std::invalid_argument("vmo_verdict: empty profile");
    const double target = kTwoPi / 256.0;
    // value at the largest measured delta not exceeding the target scale
    std::size_t idx = 0;
    bool found = false;
    for (std::size_t i = 0; i < profile.deltas.size(); ++i) {
        if (profile.deltas[i] <= target * (1.0 + 1e-12)) {
            idx = i;
            found = true;
        }
    }
    if (!found) idx = 0;
    const double v = profile.values[idx];
    if (v < lo) return MoVerdict::VmoLike;
    if (v > hi) return MoVerdict::NotVmoLike;
    return MoVerdict::Inconclusive;
}

}  // namespace toeplab
