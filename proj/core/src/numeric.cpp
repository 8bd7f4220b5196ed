#include "zml/numeric.hpp"

#include <limits>
#include <map>
#include <mutex>

namespace zml::num {

namespace {

// Taylor kernels on |y| <= pi/4.  Terms through y^15 / y^16 put the
// truncation error below 1e-17 at the interval edge.
inline double sin_kernel(double y) {
    double y2 = y * y;
    double s = 1.0 / 1307674368000.0;            // 1/15!
    s = s * y2 - 1.0 / 6227020800.0;             // 1/13!
    s = s * y2 + 1.0 / 39916800.0;               // 1/11!
    s = s * y2 - 1.0 / 362880.0;                 // 1/9!
    s = s * y2 + 1.0 / 5040.0;                   // 1/7!
    s = s * y2 - 1.0 / 120.0;                    // 1/5!
    s = s * y2 + 1.0 / 6.0;                      // 1/3!
    return y - y * y2 * s;
}

inline double cos_kernel(double y) {
    double y2 = y * y;
    double c = 1.0 / 20922789888000.0;           // 1/16!
    c = c * y2 - 1.0 / 87178291200.0;            // 1/14!
    c = c * y2 + 1.0 / 479001600.0;              // 1/12!
    c = c * y2 - 1.0 / 3628800.0;                // 1/10!
    c = c * y2 + 1.0 / 40320.0;                  // 1/8!
    c = c * y2 - 1.0 / 720.0;                    // 1/6!
    c = c * y2 + 1.0 / 24.0;                     // 1/4!
    return 1.0 - y2 * (0.5 - y2 * c);
}

constexpr double half_pi_hi = 1.5707963267948966;
constexpr double half_pi_lo = 6.123233995736766e-17;

}  // namespace

sincos_pair sincos_reduced(double x) {
    // Quadrant index; |x| <= pi + 1 so k is in {-3,...,3}.
    double kd = std::nearbyint(x * (2.0 / pi));
    int k = static_cast<int>(kd);
    double y = (x - kd * half_pi_hi) - kd * half_pi_lo;
    double s = sin_kernel(y);
    double c = cos_kernel(y);
    switch (k & 3) {
        case 0: return {s, c};
        case 1: return {c, -s};
        case 2: return {-s, -c};
        default: return {-c, s};
    }
}

dd log_dd(double x) {
    long double l = logl(static_cast<long double>(x));
    double hi = static_cast<double>(l);
    double lo = static_cast<double>(l - static_cast<long double>(hi));
    return {hi, lo};
}

const gauss_rule& gauss_legendre(int order) {
    static std::mutex mu;
    static std::map<int, gauss_rule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    gauss_rule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Tricomi initial guess, then Newton on the recurrence.
        double z = std::cos(pi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= order; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            double dz = -p1 / pp;
            z += dz;
            if (std::abs(dz) < std::numeric_limits<double>::epsilon()) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[order - 1 - i] = z;
        rule.weights[i] = rule.weights[order - 1 - i] =
            2.0 / ((1.0 - z * z) * pp * pp);
    }
    auto [pos, inserted] = cache.emplace(order, std::move(rule));
    (void)inserted;
    return pos->second;
}

}  // namespace zml::num
