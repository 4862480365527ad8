#include "toeplab/structured.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace toeplab {

BuiltMatrix toeplitz(const FourierCoeffs& c, int n) {
    if (n < 1) throw std::invalid_argument("toeplitz: order must be >= 1");
    BuiltMatrix out;
    out.mat.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.mat(i, j) = c.at(i - j);
    out.truncated = (c.K < n - 1) && !c.band_limited;
    return out;
}

BuiltMatrix hankel_section(const FourierCoeffs& c, int n) {
    if (n < 1) throw std::invalid_argument("hankel_section: order must be >= 1");
    BuiltMatrix out;
    out.mat.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.mat(i, j) = c.at(i + j + 1);
    out.truncated = (c.K < 2 * n - 1) && !c.band_limited;
    return out;
}

BuiltMatrix semicommutator(const FourierCoeffs& f, const FourierCoeffs& g,
                           const FourierCoeffs& fg, int n) {
    BuiltMatrix tf = toeplitz(f, n);
    BuiltMatrix tg = toeplitz(g, n);
    BuiltMatrix tfg = toeplitz(fg, n);
    BuiltMatrix out;
    out.mat = tfg.mat - tf.mat * tg.mat;
    out.truncated = tf.truncated || tg.truncated || tfg.truncated;
    return out;
}

Matrix flip_matrix(int n) {
    if (n < 1) throw std::invalid_argument("flip_matrix: order must be >= 1");
    Matrix j = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) j(i, n - 1 - i) = cplx(1.0, 0.0);
    return j;
}

WidomTerms widom_rhs(const FourierCoeffs& f, const FourierCoeffs& g, int n, int inner) {
    if (n < 1) throw std::invalid_argument("widom_rhs: order must be >= 1");
    if (inner < 1) throw std::invalid_argument("widom_rhs: inner truncation must be >= 1");

    WidomTerms out;
    out.p_term = Matrix::Zero(n, n);
    Matrix q_inner = Matrix::Zero(n, n);
    // p_ij = sum_k f_{i+k+1} g_{-(k+j+1)};  q_inner_ij = sum_k f_{-(i+k+1)} g_{k+j+1}
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cplx p(0.0, 0.0), q(0.0, 0.0);
            for (int k = 0; k < inner; ++k) {
                const int a = i + k + 1;
                const int b = k + j + 1;
                if (a > f.K || b > g.K) break;  // every later term has a zero factor
                p += f.at(a) * g.at(-b);
                q += f.at(-a) * g.at(b);
            }
            out.p_term(i, j) = p;
            q_inner(i, j) = q;
        }
    }
    // reversal on both sides: entry (i, j) of the q term is q_inner(n-1-i, n-1-j)
    out.q_term.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.q_term(i, j) = q_inner(n - 1 - i, n - 1 - j);
    return out;
}

namespace {

// max |k| with c_k != 0 (0 when all coefficients vanish)
int support_degree(const FourierCoeffs& c) {
    int d = 0;
    for (int k = -c.K; k <= c.K; ++k)
        if (c.at(k) != cplx(0.0, 0.0)) d = std::max(d, std::abs(k));
    return d;
}

}  // namespace

WidomDecomposition widom_check(const FourierCoeffs& f, const FourierCoeffs& g,
                               const FourierCoeffs& fg, int n, int inner) {
    WidomDecomposition d;
    d.lhs = semicommutator(f, g, fg, n).mat;
    WidomTerms rhs = widom_rhs(f, g, n, inner);
    d.p_term = std::move(rhs.p_term);
    d.q_term = std::move(rhs.q_term);
    d.residual_fro = (d.lhs - d.p_term - d.q_term).norm();
    // identity is exact when the Hankel products' inner sums terminate
    // before the truncation and the lhs used exact product coefficients
    // on every diagonal it reads
    d.exact = f.band_limited && g.band_limited && fg.exact &&
              (fg.band_limited || fg.K >= n - 1) &&
              inner >= std::max(support_degree(f), support_degree(g));
    return d;
}

}  // namespace toeplab
