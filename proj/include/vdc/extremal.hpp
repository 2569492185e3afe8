#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "vdc/osc.hpp"

namespace vdc {

/** Sampled antiderivative curve G(t) = int_{t0}^{t} e^{i f} over a window.
 *
 *  `segment(t1, t2)` integrates e^{i f} between arbitrary parameters, so
 *  chord searches can refine between samples instead of interpolating.
 *  truncation_bound is the two-tail cushion 2/|f'(lo)| + 2/|f'(hi)|: any
 *  chord of the full-line curve exceeds the windowed optimum by at most this
 *  much when |f'| is monotone increasing outward of the window.
 */
struct CurveTrace {
    std::vector<double> ts;
    std::vector<Cplx> points;
    double truncation_bound = 0.0;
    std::function<Cplx(double, double)> segment;
};

/// Trace G over [window.first, window.second] at `samples` uniform parameters.
/// Throws std::invalid_argument when f' vanishes at a window edge (the tail
/// cushion would be meaningless).
CurveTrace trace_antiderivative(const PhaseFunction& phase,
                                std::pair<double, double> window, int samples = 4000,
                                double tol = 1e-9);

/// Outcome of a chord/diameter or parameter search.
struct SearchResult {
    std::vector<double> params;                  // searched parameters (if any)
    double objective = 0.0;                      // value at the optimum
    std::pair<double, double> endpoints{0, 0};   // chord parameters (t_a, t_b)
    long iterations = 0;
    std::pair<double, double> window{0, 0};
    double achieved_tol = 0.0;
    std::vector<std::pair<std::string, double>> diagnostics;
};

/// Largest chord max_{a,b} |G(b) - G(a)| of a trace: O(N^2) over the samples,
/// then coordinate-wise golden refinement (via `segment`) to 1e-8 in t.
SearchResult max_chord(const CurveTrace& trace);

/// 2 sqrt(2) max_theta [cos(theta) Fc(sqrt(pi/2+theta)) +
///                      sin(theta) Fs(sqrt(pi/2+theta))] over [0, 2 pi],
/// dense scan plus golden refinement to `xtol` in theta. This is the
/// conjectured sharp n=2 value (~3.3643); it must land between the quadratic
/// reproduction 3.33346 and the proven 4.55901.
double conjectured_n2_constant(double xtol = 1e-10);

/** Search over cubic phases a1 x + x^3 (a1 < 0) for the largest chord of the
 *  antiderivative curve, reported scale-free: a3/a1^3 is the shape parameter.
 *
 *  Windows follow the tail rule 2/|f'(edge)| < tol/10 per side; the a1 scan
 *  runs on reduced windows before golden refinement, and only the final
 *  reported trace uses the full window. diagnostics carry the truncation
 *  cushion, the phase values at the interior extrema +-(2/3)|a1|sqrt(|a1|/3),
 *  and a flag if the coarse scan was still rising at its boundary.
 */
SearchResult cubic_search(double tol = 1e-3, double window_halfwidth = 0.0,
                          int samples = 4000);

}  // namespace vdc
