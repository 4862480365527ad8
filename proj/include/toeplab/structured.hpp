#ifndef TOEPLAB_STRUCTURED_HPP
#define TOEPLAB_STRUCTURED_HPP

#include <Eigen/Dense>

#include "toeplab/symbols.hpp"

namespace toeplab {

using Matrix = Eigen::MatrixXcd;

// Dense section plus a flag recording whether some needed coefficient
// index fell outside the supplied [-K, K] range.
struct BuiltMatrix {
    Matrix mat;
    bool truncated = false;
};

// T_n(f): A_ij = c_{i-j}. Flagged truncated when K < n-1 and the
// coefficients are not known band-limited.
BuiltMatrix toeplitz(const FourierCoeffs& c, int n);

// Finite Hankel section H_ij = c_{i+j+1}, 0 <= i,j < n.
BuiltMatrix hankel_section(const FourierCoeffs& c, int n);

// T_n(fg) - T_n(f) T_n(g); the fg coefficients are supplied by the caller
// so the product's provenance stays explicit.
BuiltMatrix semicommutator(const FourierCoeffs& f, const FourierCoeffs& g,
                           const FourierCoeffs& fg, int n);

// Reversal J_n with (J_n)_{ij} = [i + j = n - 1].
Matrix flip_matrix(int n);

struct WidomTerms {
    Matrix p_term;  // P_n H(f) H(g~) P_n, inner sum truncated
    Matrix q_term;  // J_n H(f~) H(g) J_n, same truncation
};

// Both Hankel-product terms of the Widom decomposition. The infinite inner
// sums are truncated at `inner`; for band-limited symbols with
// inner >= max(K_f, K_g) the sums terminate and the terms are exact.
WidomTerms widom_rhs(const FourierCoeffs& f, const FourierCoeffs& g, int n, int inner);

struct WidomDecomposition {
    Matrix lhs;
    Matrix p_term;
    Matrix q_term;
    double residual_fro = 0.0;
    bool exact = false;
};

WidomDecomposition widom_check(const FourierCoeffs& f, const FourierCoeffs& g,
                               const FourierCoeffs& fg, int n, int inner);

}  // namespace toeplab

#endif
