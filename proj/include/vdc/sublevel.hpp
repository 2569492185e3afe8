#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "vdc/poly.hpp"
#include "vdc/report.hpp"

namespace vdc {

/// Measured sublevel set {x in (a,b) : |f(x)| <= alpha} as a disjoint union
/// of intervals. `lambda` is carried along when the measurement is made in
/// the context of a derivative lower bound (verify_sublevel fills it in).
struct SublevelMeasurement {
    double alpha = 0.0;
    std::optional<double> lambda;
    double measure = 0.0;
    std::vector<std::pair<double, double>> intervals;
    int resolution = 0;
};

/// Grid-bracketed measurement: sample |f| - alpha on `grid` cells, refine
/// every crossing by bisection to 1e-12 in x, and assemble the intervals.
/// Throws std::invalid_argument on a non-finite sample or alpha <= 0.
SublevelMeasurement measure_sublevel(const RealFn& f, double a, double b, double alpha,
                                     int grid = 100000);

/// (n! 2^(2n-1))^(1/n) * (alpha/lambda)^(1/n), evaluated through log-gamma so
/// n up to 1e5 stays finite and accurate.
double sublevel_bound(int n, double alpha, double lambda);

/// Measure the sublevel set and compare against the bound. When the n-th
/// derivative is supplied it is spot-checked against lambda on the grid first
/// (std::invalid_argument if the claimed lower bound fails anywhere).
BoundReport verify_sublevel(const RealFn& f, int n, double a, double b, double alpha,
                            double lambda, int grid = 100000,
                            const RealFn* f_n = nullptr);

}  // namespace vdc
