#pragma once
// Low-level numerics shared by the prime-sum and zeta evaluators:
//
//  * error-free transformations (two_sum / two_prod) and a minimal
//    double-double type for phase arithmetic,
//  * Neumaier compensated accumulation (all prime sums are required to be
//    reproducible to ~1e-15 relative regardless of length),
//  * exact-enough reduction of t*log(p) modulo 2*pi.  Arguments reach ~1e8,
//    so a plain double product would already lose ~1e-9 of phase; every
//    oscillatory sum in the library goes through reduced_angle instead,
//  * a libm-free sin/cos pair on the reduced range (deterministic across
//    libm versions, and considerably faster than large-argument std::cos),
//  * Gauss-Legendre nodes computed at startup by Newton iteration on the
//    Legendre recurrence (no hard-coded tables).

#include <cmath>
#include <cstddef>
#include <vector>

namespace zml::num {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi_hi = 6.283185307179586476925286766559005768;  // rounds to 2pi
inline constexpr double two_pi_lo = 2.4492935982947063545861752219016939528e-16;
inline constexpr double inv_two_pi = 0.15915494309189533576888376337251436203;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243104;

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

// Knuth two-sum: a + b = s.hi + s.lo exactly.
inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// a * b = p.hi + p.lo exactly (requires a correctly rounded fma).
inline dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

// (a.hi + a.lo) * (b.hi + b.lo), first-order in the low parts.
inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return p;
}

// Reduce x.hi + x.lo modulo 2*pi into [-pi - eps, pi + eps].  |x| may be as
// large as ~2^52; the quotient fits a double exactly, so the subtraction of
// n*2pi in double-double leaves an absolute error of a few 1e-17.
inline double reduce_two_pi(dd x) {
    double n = std::nearbyint(x.hi * inv_two_pi);
    dd r = two_prod(n, two_pi_hi);
    return ((x.hi - r.hi) - r.lo - n * two_pi_lo) + x.lo;
}

// angle = time * freq mod 2pi, with both factors carried in double-double.
inline double reduced_angle(dd time, dd freq) {
    return reduce_two_pi(dd_mul(time, freq));
}

// sin/cos on the already-reduced range (|x| <= pi + 1).  Quadrant fold to
// |y| <= pi/4 followed by Taylor kernels; max error observed < 4e-16 against
// libm over 1e7 samples.
struct sincos_pair {
    double sin;
    double cos;
};

sincos_pair sincos_reduced(double x);

inline double cos_reduced(double x) { return sincos_reduced(x).cos; }

// Natural log of an integer as a double-double (long double intermediate;
// relative accuracy ~5e-20, enough that phases up to ~1e8 keep ~1e-11 rad).
dd log_dd(double x);

// Neumaier variant of Kahan summation.
class compensated_sum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Nodes/weights of n-point Gauss-Legendre on [-1, 1].  Built once per order
// and cached; thread-safe.
struct gauss_rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const gauss_rule& gauss_legendre(int order);

}  // namespace zml::num
