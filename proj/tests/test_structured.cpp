#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "toeplab/structured.hpp"

using namespace toeplab;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("toeplitz of the constant symbol is the identity") {
    const FourierCoeffs one = catalog_coeffs(SymbolSpec::parse("constant:1"), 0);
    const BuiltMatrix t = toeplitz(one, 3);
    CHECK((t.mat - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
    CHECK_FALSE(t.truncated);
}

TEST_CASE("toeplitz entry layout is c_{i-j}") {
    FourierCoeffs c = FourierCoeffs::zeros(2);
    for (int k = -2; k <= 2; ++k) c.set(k, cplx(k, 10.0 * k));
    const Matrix t = toeplitz(c, 3).mat;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(t(i, j) == c.at(i - j));
}

TEST_CASE("hankel section of an analytic-free symbol is zero") {
    const FourierCoeffs one = catalog_coeffs(SymbolSpec::parse("constant:1"), 0);
    CHECK(hankel_section(one, 3).mat.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("sawtooth hankel is a scaled Hilbert-type matrix") {
    const FourierCoeffs c = catalog_coeffs(SymbolSpec::parse("sawtooth"), 8);
    const Matrix h = hankel_section(c, 3).mat;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const cplx expect = cplx(0.0, -1.0) / (kPi * (i + j + 1));
            CHECK(std::abs(h(i, j) - expect) < 1e-15);
        }
}

TEST_CASE("truncation flags propagate") {
    const FourierCoeffs saw = catalog_coeffs(SymbolSpec::parse("sawtooth"), 4);
    CHECK(toeplitz(saw, 8).truncated);
    CHECK(hankel_section(saw, 4).truncated);
    const FourierCoeffs cosc = catalog_coeffs(SymbolSpec::parse("cos"), 1);
    CHECK_FALSE(toeplitz(cosc, 8).truncated);  // band-limited: the tail is genuinely zero
}

TEST_CASE("semicommutator of constants vanishes") {
    const FourierCoeffs a = catalog_coeffs(SymbolSpec::parse("constant:2"), 0);
    const FourierCoeffs b = catalog_coeffs(SymbolSpec::parse("constant:3-1i"), 0);
    const FourierCoeffs ab = product_coeffs(a, b);
    CHECK(semicommutator(a, b, ab, 5).mat.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("semicommutator of z with itself vanishes") {
    const FourierCoeffs z = catalog_coeffs(SymbolSpec::parse("monomial:1"), 1);
    const FourierCoeffs z2 = product_coeffs(z, z);
    CHECK(semicommutator(z, z, z2, 4).mat.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("semicommutator of z and conj z is the rank-one corner") {
    const FourierCoeffs z = catalog_coeffs(SymbolSpec::parse("monomial:1"), 1);
    const FourierCoeffs zbar = conjugate_coeffs(z);
    const FourierCoeffs prod = product_coeffs(z, zbar);  // |z|^2 = 1
    for (int n : {2, 5, 16, 64}) {
        const Matrix s = semicommutator(z, zbar, prod, n).mat;
        Matrix expect = Matrix::Zero(n, n);
        expect(0, 0) = cplx(1.0, 0.0);
        CHECK((s - expect).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("flip matrix is an involutive permutation") {
    const Matrix j = flip_matrix(5);
    CHECK((j * j - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(j(0, 4) == cplx(1.0, 0.0));
}

TEST_CASE("flip conjugation reflects the symbol") {
    for (const char* label : {"sawtooth", "trigpoly:[1i@2,0.5@-1,2@0]"}) {
        const FourierCoeffs c = catalog_coeffs(SymbolSpec::parse(label), 15);
        const Matrix j = flip_matrix(8);
        const Matrix lhs = j * toeplitz(c, 8).mat * j;
        const Matrix rhs = toeplitz(reflect_coeffs(c), 8).mat;
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-14);
    }
}

TEST_CASE("widom identity is exact for trig polynomials") {
    const FourierCoeffs f = catalog_coeffs(SymbolSpec::parse("trigpoly:[1@2,0.5i@-1]"), 3);
    const FourierCoeffs g = catalog_coeffs(SymbolSpec::parse("trigpoly:[2@-3,1i@1]"), 3);
    const FourierCoeffs fg = product_coeffs(f, g);
    for (int n : {4, 8, 16}) {
        const WidomDecomposition d = widom_check(f, g, fg, n, 16);
        CHECK(d.exact);
        CHECK(d.residual_fro <= 1e-10 * (1.0 + d.lhs.norm()));
    }
}

TEST_CASE("widom truncation error for the sawtooth pair is controlled") {
    const SymbolSpec spec = SymbolSpec::parse("sawtooth");
    const FourierCoeffs f = catalog_coeffs(spec, 600);
    const FourierCoeffs fg = catalog_product_coeffs(spec, spec, 15);

    // entrywise tail of each discarded Hankel-product sum is about
    // 1/(pi^2*inner), so the Frobenius residual is bounded by 2n/(pi^2*inner)
    // up to a small constant; it must also shrink ~1/inner
    const Matrix lhs = semicommutator(f, f, fg, 8).mat;
    const WidomTerms t = widom_rhs(f, f, 8, 512);
    const double res512 = (lhs - t.p_term - t.q_term).norm();
    CHECK(res512 <= 1.5 * 2.0 * 8.0 / (kPi * kPi * 512.0));

    const FourierCoeffs f2 = catalog_coeffs(spec, 4200);
    const WidomTerms t2 = widom_rhs(f2, f2, 8, 4096);
    const double res4096 = (lhs - t2.p_term - t2.q_term).norm();
    CHECK(res4096 <= 1e-3);
    CHECK(res4096 <= res512 / 4.0);

    const FourierCoeffs f3 = catalog_coeffs(spec, 1100);
    const FourierCoeffs fg3 = catalog_product_coeffs(spec, spec, 31);
    const WidomDecomposition d = widom_check(f3, f3, fg3, 16, 1024);
    CHECK_FALSE(d.exact);
    CHECK(d.residual_fro <= 1.5 * 2.0 * 16.0 / (kPi * kPi * 1024.0));
}

TEST_CASE("widom q term is the flip conjugate of the analytic-side product") {
    // q entries reverse both indices; check against a direct double sum
    const FourierCoeffs f = catalog_coeffs(SymbolSpec::parse("smoothexp:0.9"), 64);
    const WidomTerms t = widom_rhs(f, f, 4, 32);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx expect(0.0, 0.0);
            for (int k = 0; k < 32; ++k)
                expect += f.at(-(4 - 1 - i + k + 1)) * f.at(k + 4 - 1 - j + 1);
            CHECK(std::abs(t.q_term(i, j) - expect) < 1e-15);
        }
}

TEST_CASE("order arguments are validated") {
    const FourierCoeffs c = catalog_coeffs(SymbolSpec::parse("cos"), 1);
    CHECK_THROWS_AS(toeplitz(c, 0), std::invalid_argument);
    CHECK_THROWS_AS(hankel_section(c, 0), std::invalid_argument);
    CHECK_THROWS_AS(flip_matrix(0), std::invalid_argument);
    CHECK_THROWS_AS(widom_rhs(c, c, 4, 0), std::invalid_argument);
}
