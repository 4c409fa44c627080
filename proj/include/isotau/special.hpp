#pragma once

// Complex special functions: log-Gamma, Pochhammer symbols, Gauss 2F1 inside
// the unit disk, Barnes G at integer shifts. Everything here is pure and
// thread-safe.

#include <cmath>
#include <complex>
#include <numbers>

#include "isotau/errors.hpp"

namespace isotau {

using Complex = std::complex<double>;

inline constexpr double kPoleTol = 1e-12;

inline bool near_nonpositive_integer(Complex z, double tol = kPoleTol) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.5 && std::abs(z.real() - r) <= tol;
}

namespace detail {

// log(sin(pi z)) stable for large |Im z|; value may differ from the principal
// log by a multiple of 2*pi*i, which exp() does not see.
inline Complex log_sin_pi(Complex z) {
    const Complex i(0.0, 1.0);
    const double ln2 = std::numbers::ln2;
    Complex piz = std::numbers::pi * z;
    if (z.imag() > 0.0)
        return -i * std::numbers::pi / 2.0 - ln2 - i * piz + std::log(std::exp(2.0 * i * piz) - 1.0);
    return -i * std::numbers::pi / 2.0 - ln2 + i * piz + std::log(1.0 - std::exp(-2.0 * i * piz));
}

// Lanczos, g = 607/128, 15 terms.
inline Complex lanczos_lngamma(Complex z) {
    static const double g = 607.0 / 128.0;
    static const double c[15] = {
        0.99999999999999709182,     57.156235665862923517,
        -59.597960355475491248,     14.136097974741747174,
        -0.49191381609762019978,    0.33994649984811888699e-4,
        0.46523628927048575665e-4,  -0.98374475304879564677e-4,
        0.15808870322491248884e-3,  -0.21026444172410488319e-3,
        0.21743961811521264320e-3,  -0.16431810653676389022e-3,
        0.84418223983852743293e-4,  -0.26190838401581408670e-4,
        0.36899182659531622704e-5};
    Complex s = c[0];
    for (int k = 1; k < 15; ++k) s += c[k] / (z - 1.0 + static_cast<double>(k));
    Complex base = z - 0.5 + g;
    return std::log(s) + 0.5 * std::log(2.0 * std::numbers::pi) +
           (z - 0.5) * std::log(base) - base;
}

}  // namespace detail

// Principal-branch log-Gamma (up to an irrelevant 2*pi*i on the reflected
// half-plane); relative accuracy ~1e-14 for moderate |z|.
inline Complex ln_gamma(Complex z) {
    if (near_nonpositive_integer(z))
        throw PoleError("ln_gamma: argument at a non-positive integer");
    if (z.real() >= 0.5) return detail::lanczos_lngamma(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(std::numbers::pi) - detail::log_sin_pi(z) - detail::lanczos_lngamma(1.0 - z);
}

inline Complex gamma_fn(Complex z) { return std::exp(ln_gamma(z)); }

// (c)_l as the direct product c(c+1)...(c+l-1); exact zero at negative-integer
// bases, no poles.
inline Complex pochhammer(Complex c, int l) {
    if (l < 0) throw EvaluationError("pochhammer: negative length");
    Complex v = 1.0;
    for (int j = 0; j < l; ++j) v *= c + static_cast<double>(j);
    return v;
}

struct Hyp2F1Result {
    Complex value;
    int terms = 0;
};

inline constexpr double kHyp2F1Radius = 0.95;
inline constexpr int kHyp2F1MaxTerms = 10000;

// Gauss 2F1 by Taylor series, |z| <= 0.95. Summation order is fixed, so the
// a<->b symmetry holds bit for bit.
inline Hyp2F1Result hyp2f1_full(Complex a, Complex b, Complex c, Complex z) {
    if (std::abs(z) > kHyp2F1Radius)
        throw EvaluationError("hyp2f1: |z| > 0.95 outside supported disk");
    if (near_nonpositive_integer(c))
        throw PoleError("hyp2f1: c at a non-positive integer");
    Complex sum = 1.0, term = 1.0;
    for (int k = 0; k < kHyp2F1MaxTerms; ++k) {
        double kk = static_cast<double>(k);
        term *= (a + kk) * (b + kk) / ((c + kk) * (1.0 + kk)) * z;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) return {sum, k + 1};
    }
    throw NonConvergence("hyp2f1: 10000 terms without convergence");
}

inline Complex hyp2f1(Complex a, Complex b, Complex c, Complex z) {
    return hyp2f1_full(a, b, c, z).value;
}

// G(1+nu+k)/G(1+nu) for integer k, as a finite product of Gamma values
// (recurrence G(x+1) = Gamma(x) G(x)).
inline Complex barnes_g_ratio(Complex nu, int k) {
    Complex v = 1.0;
    if (k >= 0) {
        for (int j = 0; j < k; ++j) v *= gamma_fn(1.0 + nu + static_cast<double>(j));
    } else {
        for (int j = 1; j <= -k; ++j) v /= gamma_fn(1.0 + nu - static_cast<double>(j));
    }
    return v;
}

// log G(1+z), Barnes G. Recurrence up to Re z >= 25, then the asymptotic
// expansion; additive 2*pi*i ambiguities cancel under exp.
inline Complex ln_barnes_g1p(Complex z) {
    if (near_nonpositive_integer(z + 1.0))
        throw PoleError("ln_barnes_g1p: argument at a zero of G");
    Complex shift = 0.0;
    int guard = 0;
    while (z.real() < 25.0) {
        shift += ln_gamma(1.0 + z);
        z += 1.0;
        if (++guard > 4000) throw NonConvergence("ln_barnes_g1p: shift runaway");
    }
    const double zeta_prime_m1 = -0.16542114370045092921391966;
    Complex w2 = z * z;
    Complex series = -1.0 / (360.0 * w2);          // B4 /(2*3*4 z^2)
    Complex z4 = w2 * w2;
    series += 1.0 / (1260.0 * z4);                 // B6 /(4*5*6 z^4)
    series += -1.0 / (1680.0 * z4 * w2);           // B8 /(6*7*8 z^6)
    series += 1.0 / (1188.0 * z4 * z4);            // B10/(8*9*10 z^8)
    series += -691.0 / (360360.0 * z4 * z4 * w2);  // B12/(10*11*12 z^10)
    Complex lz = std::log(z);
    Complex val = 0.5 * w2 * lz - 0.75 * w2 + 0.5 * z * std::log(2.0 * std::numbers::pi) -
                  lz / 12.0 + zeta_prime_m1 + series;
    return val - shift;
}

}  // namespace isotau
