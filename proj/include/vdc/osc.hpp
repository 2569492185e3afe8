#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vdc/poly.hpp"
#include "vdc/report.hpp"

namespace vdc {

using Cplx = std::complex<double>;
using CplxFn = std::function<Cplx(double)>;

/// Result of a complex quadrature: value, its polar pieces, and the summed
/// local error estimates (conservative for smooth oscillatory integrands).
struct IntegralResult {
    Cplx value{0.0, 0.0};
    double modulus = 0.0;
    double argument = 0.0;  // in (-pi, pi]
    double error_estimate = 0.0;
};

/// Thrown when the adaptive subdivision hits its depth cap or panel budget
/// before reaching the requested tolerance.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Real phase with optional analytic derivatives on (lo, hi).
 *
 *  derivs[k-1] is the k-th derivative when supplied; deriv() falls back to
 *  central differences otherwise. derivatives_consistent() spot-checks the
 *  supplied derivatives against finite differences at seeded random points —
 *  callers that are about to trust f' for a precondition run it first.
 */
struct PhaseFunction {
    RealFn f;
    std::vector<RealFn> derivs;
    double lo = 0.0;
    double hi = 1.0;

    double deriv(double x, int k = 1) const;
    bool derivatives_consistent(std::uint64_t seed = 1, int points = 32,
                                double rel_tol = 1e-5) const;

    /// Polynomial phase with every derivative filled in analytically.
    static PhaseFunction from_polynomial(const Polynomial& p, double lo, double hi);
};

/** Adaptive complex quadrature of g over [a,b].
 *
 *  Bisection with an embedded Gauss(7)/Kronrod(15) pair: a panel is accepted
 *  once |K15 - G7| <= tol * len/(b-a), so the accepted-panel estimates sum to
 *  at most tol. Panels are accumulated left to right, which keeps results
 *  bit-reproducible. Throws QuadratureError at depth `max_depth` or once
 *  `panel_budget` panels have been evaluated.
 */
IntegralResult integrate_complex(const CplxFn& g, double a, double b, double tol = 1e-10,
                                 int max_depth = 60, long panel_budget = 1000000);

/// |int_a^b e^{i f(x)} dx| and friends for a real phase.
IntegralResult oscillatory_integral(const PhaseFunction& phase, double a, double b,
                                    double tol = 1e-10);

/// (int_0^u cos x^2 dx, int_0^u sin x^2 dx). The range is pre-split at the
/// quarter-period points sqrt(k pi/2) so each adaptive piece sees a bounded
/// amount of oscillation; u up to a few hundred is routine.
std::pair<double, double> fresnel(double u, double tol = 1e-10);

/** Split point of the complex second mean value theorem.
 *
 *  For monotone real f and continuous complex g with I = int_a^b f g and
 *  theta = arg I, finds c with
 *    |I| = f(a) Re(e^{-i theta} int_a^c g) + f(b) Re(e^{-i theta} int_c^b g)
 *  by scanning the continuous difference for a sign change and bisecting.
 *  Monotonicity of f is spot-checked on a grid. Throws std::runtime_error if
 *  no root is found at a 1e5-point scan (which the theorem rules out).
 */
double complex_mvt_point(const RealFn& f, const CplxFn& g, double a, double b,
                         double tol = 1e-9);

/// Variant for f of constant sign with |f| decreasing: the right-hand term
/// drops (extend f by 0 at b), leaving |I| = f(a) Re(e^{-i theta} int_a^c g).
double complex_mvt_point_decaying(const RealFn& f, const CplxFn& g, double a, double b,
                                  double tol = 1e-9);

/** First-derivative test: for f' increasing with f' >= lambda on (a,b),
 *    |int_a^b e^{i f}| <= (1 + sin(theta - f(a)))/lambda <= 2/lambda,
 *  theta the argument of the integral itself. Returns the sharp bound as the
 *  report's bound and carries the 2/lambda cushion (and its margin) in aux.
 *  Preconditions are spot-checked on a grid; violations throw
 *  std::invalid_argument.
 */
BoundReport verify_first_vdc(const PhaseFunction& phase, double a, double b,
                             double lambda, double tol = 1e-10);

/** Fourier-coefficient decay audit for increasing f on [0,1] against the
 *  n-th coefficient int_0^1 f(x) e^{-2 pi i n x} dx.
 *
 *  Two candidate bounds are evaluated side by side:
 *    printed variant:  (f(1) - f(0)) (1 - sin theta) / (2 pi n)
 *    consistent variant: (f(1) - f(0)) (1 + sin theta) / (2 pi n)
 *  The sign inside the parenthesis is the whole story: the printed variant is
 *  violated already by f(x) = x at n = 1 (it degenerates to 0 against a
 *  modulus of 1/(2 pi)), while the consistent variant is exactly what the
 *  first-derivative test above yields. pass tracks the consistent variant;
 *  both margins ride along in aux so the mismatch stays visible.
 */
BoundReport verify_riemann_lebesgue(const RealFn& f, int n, double tol = 1e-10);

}  // namespace vdc
