#pragma once

// Minimal double-double arithmetic for reference summations in tests.
// Error-free transforms: Dekker two-sum / two-prod (via FMA).

#include <cmath>
#include <complex>

namespace ddtest {

struct dd {
    double hi = 0.0, lo = 0.0;
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    double lo = a.lo + b.lo + s.lo;
    return quick_sum(s.hi, lo);
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_sum(p.hi, p.lo);
}

inline dd from(double x) { return {x, 0.0}; }

inline dd div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = add(a, mul(from(-q1), b));
    double q2 = r.hi / b.hi;
    r = add(r, mul(from(-q2), b));
    double q3 = r.hi / b.hi;
    dd q = quick_sum(q1, q2);
    return add(q, from(q3));
}

struct cdd {
    dd re, im;
};

inline cdd from(std::complex<double> z) { return {from(z.real()), from(z.imag())}; }

inline cdd add(cdd a, cdd b) { return {add(a.re, b.re), add(a.im, b.im)}; }

inline cdd mul(cdd a, cdd b) {
    dd re = add(mul(a.re, b.re), mul(mul(a.im, b.im), from(-1.0)));
    dd im = add(mul(a.re, b.im), mul(a.im, b.re));
    return {re, im};
}

inline cdd div(cdd a, cdd b) {
    dd den = add(mul(b.re, b.re), mul(b.im, b.im));
    cdd conj = {b.re, mul(b.im, from(-1.0)).hi == 0.0 && b.im.hi == 0.0 ? b.im : dd{-b.im.hi, -b.im.lo}};
    conj.im = dd{-b.im.hi, -b.im.lo};
    cdd num = mul(a, conj);
    return {div(num.re, den), div(num.im, den)};
}

inline std::complex<double> to_complex(cdd z) {
    return {z.re.hi + z.re.lo, z.im.hi + z.im.lo};
}

// 2F1 reference: fixed 5000-term summation carried in double-double.
inline std::complex<double> hyp2f1_reference(std::complex<double> a, std::complex<double> b,
                                             std::complex<double> c, std::complex<double> z,
                                             int nterms = 5000) {
    cdd sum = from({1.0, 0.0});
    cdd term = from({1.0, 0.0});
    cdd zz = from(z);
    for (int k = 0; k < nterms; ++k) {
        double kk = static_cast<double>(k);
        cdd num = mul(from(a + kk), from(b + kk));
        cdd den = mul(from(c + kk), from(std::complex<double>(1.0 + kk, 0.0)));
        term = mul(term, div(num, den));
        term = mul(term, zz);
        sum = add(sum, term);
    }
    return to_complex(sum);
}

}  // namespace ddtest
