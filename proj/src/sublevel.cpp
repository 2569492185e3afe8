#include "vdc/sublevel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vdc {

SublevelMeasurement measure_sublevel(const RealFn& f, double a, double b, double alpha,
                                     int grid) {
    if (!(a < b)) throw std::invalid_argument("measure_sublevel: empty interval");
    if (!(alpha > 0.0)) throw std::invalid_argument("measure_sublevel: alpha must be > 0");
    if (grid < 2) throw std::invalid_argument("measure_sublevel: grid too small");

    auto g = [&](double x) {
        double v = f(x);
        if (!std::isfinite(v))
            throw std::invalid_argument("measure_sublevel: f not finite on the interval");
        return std::abs(v) - alpha;
    };

    // Sample, then pin each boundary crossing down to 1e-12 by bisection.
    // A sample of exactly zero counts as inside (the set is closed).
    SublevelMeasurement m;
    m.alpha = alpha;
    m.resolution = grid;

    // bracket [in, out] with g(in) <= 0 < g(out); returns the boundary point
    auto crossing = [&](double in, double out) {
        for (int it = 0; it < 200 && std::abs(out - in) > 1e-12; ++it) {
            double mid = 0.5 * (in + out);
            if (g(mid) <= 0.0)
                in = mid;
            else
                out = mid;
        }
        return 0.5 * (in + out);
    };

    const double h = (b - a) / grid;
    double left_edge = a;  // start of the current inside-run
    bool inside = g(a) <= 0.0;
    double prev_x = a;
    for (int i = 1; i <= grid; ++i) {
        double x = (i == grid) ? b : a + i * h;
        bool in_now = g(x) <= 0.0;
        if (in_now != inside) {
            double cross = inside ? crossing(prev_x, x) : crossing(x, prev_x);
            if (inside) {
                m.intervals.emplace_back(left_edge, cross);
            } else {
                left_edge = cross;
            }
            inside = in_now;
        }
        prev_x = x;
    }
    if (inside) m.intervals.emplace_back(left_edge, b);

    double total = 0.0;
    for (auto& [lo, hi] : m.intervals) total += hi - lo;
    m.measure = total;
    return m;
}

double sublevel_bound(int n, double alpha, double lambda) {
    if (n < 1) throw std::invalid_argument("sublevel_bound: need n >= 1");
    if (!(alpha > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("sublevel_bound: alpha and lambda must be > 0");
    double lg = std::lgamma(n + 1.0) + (2.0 * n - 1.0) * std::log(2.0) +
                std::log(alpha) - std::log(lambda);
    return std::exp(lg / n);
}

BoundReport verify_sublevel(const RealFn& f, int n, double a, double b, double alpha,
                            double lambda, int grid, const RealFn* f_n) {
    if (f_n != nullptr) {
        // fail fast if the claimed derivative floor is false anywhere on the grid
        for (int i = 0; i <= 1000; ++i) {
            double x = a + (b - a) * i / 1000.0;
            if (std::abs((*f_n)(x)) < lambda * (1.0 - 1e-9)) {
                std::ostringstream msg;
                msg << "verify_sublevel: |f^(" << n << ")(" << x << ")| = "
                    << std::abs((*f_n)(x)) << " < lambda = " << lambda;
                throw std::invalid_argument(msg.str());
            }
        }
    }
    auto m = measure_sublevel(f, a, b, alpha, grid);
    m.lambda = lambda;
    std::ostringstream name;
    name << "sublevel measure vs (n! 2^(2n-1) alpha/lambda)^(1/n), n = " << n;
    auto r = make_bound_report(name.str(), sublevel_bound(n, alpha, lambda), m.measure);
    r.aux = {{"alpha", alpha},
             {"lambda", lambda},
             {"intervals", static_cast<double>(m.intervals.size())},
             {"resolution", static_cast<double>(m.resolution)}};
    return r;
}

}  // namespace vdc
