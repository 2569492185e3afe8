#pragma once

#include <cmath>
#include <functional>
#include <utility>

namespace vdc {

// Small deterministic 1-D search helpers shared by bounds/extremal.

/// Golden-section maximization of a unimodal f on [a,b] to xtol in x.
/// Returns {argmax, max}.
inline std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                            double a, double b, double xtol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

inline std::pair<double, double> golden_min(const std::function<double(double)>& f,
                                            double a, double b, double xtol) {
    auto neg = [&](double x) { return -f(x); };
    auto [x, v] = golden_max(neg, a, b, xtol);
    return {x, -v};
}

/// Bisection for a sign change of g on [a,b] (g(a), g(b) of opposite sign),
/// refined until the bracket is shorter than xtol. Returns the midpoint.
inline double bisect_root(const std::function<double(double)>& g, double a, double b,
                          double xtol) {
    double ga = g(a);
    for (int i = 0; i < 200 && b - a > xtol; ++i) {
        double m = 0.5 * (a + b);
        double gm = g(m);
        if (gm == 0.0) return m;
        if ((ga < 0) != (gm < 0)) {
            b = m;
        } else {
            a = m;
            ga = gm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace vdc
