#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vdc/report.hpp"

namespace vdc {

// Closed-form constants of the sharp estimates. Everything factorial-shaped
// goes through lgamma so the formulas stay usable out to n ~ 1e5.

/// ((n-1)! 2^(2n-1) / (n-1)^(n-2))^(1/n) for n >= 2: the constant of the
/// general n-th derivative test. Equals 2*sqrt(2) at n=2, peaks at exactly
/// 2^(5/3) at n=3, and drifts down to 4/e.
double vdc_constant(int n);

/// vdc_constant(n) * n / lambda^(1/n): the full bound for |f^(n)| >= lambda.
double vdc_bound(int n, double lambda);

/// Constant for degree-n polynomial phases with unit leading coefficient:
/// 2 at n=1 (direct integration), (2^(2n-1) n^(n-1)/(n-1)^(n-2))^(1/n) after.
/// Stays below 11/2 for every n and tends to 4.
double poly_corollary_constant(int n);

/// Sharp-side n=2 bound 3^(3/4) * 2 / sqrt(lambda).
double n2_bound(double lambda);

/// Maximize the alpha-optimized objective 2*sqrt((1+sin t) cos t) over
/// t in [0, pi/2] by golden section. Returns (theta*, value); theta* = pi/6
/// and value = 3^(3/4), which doubled gives n2_bound(1).
std::pair<double, double> n2_theta_optimum(double xtol = 1e-10);

/// 2^(5/2) pi^(1/n) (1 - 1/n): the comparison constant from the explicit
/// exponential-sum literature.
double arhipov_constant(int n);

/// Quadrature of |int_{-1}^{1} e^{i T_n(x)/n} dx| against the two-sided
/// squeeze [2 - 1/n^2, (2^n n^n/(n-1)^(n-2))^(1/n)]. The report's aux carries
/// lower, upper and the measured value; pass means the sandwich holds.
/// n is capped at 50 (trig evaluation of T_n keeps the phase exact there).
BoundReport asymptotic_sharpness_check(int n, double tol = 1e-8);

struct ConstantsRow {
    int n = 0;
    double sublevel_C = 0.0;
    double vdc_C = 0.0;
    double corollary_C = 0.0;
    double arhipov_C = 0.0;
    double target_4n_over_e = 0.0;
    double target_4_over_e = 0.0;
};

/// Historical data points kept next to the table: these are quoted values,
/// not formulas evaluated here.
struct ConstantAnnotation {
    std::string name;
    double value = 0.0;
    std::string source;
};

struct ConstantsTable {
    std::vector<ConstantsRow> rows;
    std::vector<ConstantAnnotation> annotations;
};

/// Rows for n = 2..n_max plus the classical first/second-derivative constants
/// as annotations.
ConstantsTable constants_table(int n_max);

}  // namespace vdc
