#include "vdc/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "vdc/optim.hpp"

namespace vdc {

namespace {

// Panelized antiderivative shared by the trace and its segment callable.
// Integrals between arbitrary parameters reuse the cumulative panel sums, so
// the O(N^2) chord scan costs one tail quadrature per query, not a full
// re-integration of the window.
class PanelCache {
  public:
    PanelCache(RealFn f, double lo, double hi, int pieces, double tol)
        : f_(std::move(f)), piece_tol_(tol / pieces) {
        edges_.reserve(pieces + 1);
        cum_.reserve(pieces + 1);
        edges_.push_back(lo);
        cum_.emplace_back(0.0, 0.0);
        Cplx run{0.0, 0.0};
        for (int i = 1; i <= pieces; ++i) {
            double r = lo + (hi - lo) * i / pieces;
            run += integrate_complex(integrand(), edges_.back(), r, piece_tol_).value;
            edges_.push_back(r);
            cum_.push_back(run);
        }
    }

    CplxFn integrand() const {
        const RealFn& f = f_;
        return [&f](double x) { return std::exp(Cplx{0.0, f(x)}); };
    }

    // int_{lo}^{t} e^{i f}
    Cplx prefix(double t) const {
        t = std::clamp(t, edges_.front(), edges_.back());
        auto it = std::upper_bound(edges_.begin(), edges_.end(), t);
        size_t idx = static_cast<size_t>(
            std::max<std::ptrdiff_t>(0, std::distance(edges_.begin(), it) - 1));
        idx = std::min(idx, edges_.size() - 2);
        if (t <= edges_[idx]) return cum_[idx];
        return cum_[idx] +
               integrate_complex(integrand(), edges_[idx], t, piece_tol_).value;
    }

    Cplx between(double t1, double t2) const { return prefix(t2) - prefix(t1); }

  private:
    RealFn f_;
    std::vector<double> edges_;
    std::vector<Cplx> cum_;
    double piece_tol_;
};

}  // namespace

CurveTrace trace_antiderivative(const PhaseFunction& phase,
                                std::pair<double, double> window, int samples,
                                double tol) {
    auto [lo, hi] = window;
    if (!(lo < hi)) throw std::invalid_argument("trace_antiderivative: empty window");
    if (samples < 2) throw std::invalid_argument("trace_antiderivative: samples < 2");
    double dlo = phase.deriv(lo), dhi = phase.deriv(hi);
    if (dlo == 0.0 || dhi == 0.0)
        throw std::invalid_argument(
            "trace_antiderivative: f' vanishes at a window edge, no tail cushion");

    auto cache = std::make_shared<PanelCache>(phase.f, lo, hi,
                                              std::max(samples - 1, 256), tol);
    CurveTrace trace;
    trace.ts.reserve(samples);
    trace.points.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        double t = lo + (hi - lo) * i / (samples - 1);
        trace.ts.push_back(t);
        trace.points.push_back(cache->prefix(t));
    }
    trace.truncation_bound = 2.0 / std::abs(dlo) + 2.0 / std::abs(dhi);
    trace.segment = [cache](double t1, double t2) { return cache->between(t1, t2); };
    return trace;
}

SearchResult max_chord(const CurveTrace& trace) {
    const size_t n = trace.ts.size();
    if (n == 0) throw std::invalid_argument("max_chord: empty trace");
    SearchResult res;
    res.window = {trace.ts.front(), trace.ts.back()};
    if (n == 1) {
        res.endpoints = {trace.ts[0], trace.ts[0]};
        return res;
    }

    size_t bi = 0, bj = 1;
    double best2 = -1.0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            double dx = trace.points[j].real() - trace.points[i].real();
            double dy = trace.points[j].imag() - trace.points[i].imag();
            double d2 = dx * dx + dy * dy;
            if (d2 > best2) {
                best2 = d2;
                bi = i;
                bj = j;
            }
        }
    }
    res.iterations = static_cast<long>(n * (n - 1) / 2);

    double ta = trace.ts[bi], tb = trace.ts[bj];
    double lo = res.window.first, hi = res.window.second;
    double step = (hi - lo) / static_cast<double>(n - 1);
    const double xtol = 1e-8;
    if (trace.segment) {
        auto chord = [&](double a, double b) { return std::abs(trace.segment(a, b)); };
        // coordinate ascent: each pass refines one endpoint on its sample cell
        for (int pass = 0; pass < 40; ++pass) {
            double ta_old = ta, tb_old = tb;
            ta = golden_max([&](double t) { return chord(t, tb); },
                            std::max(lo, ta - step), std::min(hi, ta + step), xtol)
                     .first;
            tb = golden_max([&](double t) { return chord(ta, t); },
                            std::max(lo, tb - step), std::min(hi, tb + step), xtol)
                     .first;
            res.iterations += 2;
            if (std::abs(ta - ta_old) < xtol && std::abs(tb - tb_old) < xtol) break;
        }
        res.objective = chord(ta, tb);
        res.achieved_tol = xtol;
    } else {
        res.objective = std::sqrt(best2);
        res.achieved_tol = step;
    }
    res.endpoints = {ta, tb};
    res.diagnostics = {{"truncation_bound", trace.truncation_bound},
                       {"sample_count", static_cast<double>(n)},
                       {"grid_chord", std::sqrt(best2)}};
    return res;
}

double conjectured_n2_constant(double xtol) {
    auto objective = [](double theta) {
        auto [fc, fs] = fresnel(std::sqrt(M_PI / 2.0 + theta), 1e-12);
        return std::cos(theta) * fc + std::sin(theta) * fs;
    };
    const int scan = 1000;
    int best_i = 0;
    double best = -1e300;
    for (int i = 0; i <= scan; ++i) {
        double v = objective(2.0 * M_PI * i / scan);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    double lo = 2.0 * M_PI * std::max(0, best_i - 1) / scan;
    double hi = 2.0 * M_PI * std::min(scan, best_i + 1) / scan;
    auto [theta, value] = golden_max(objective, lo, hi, xtol);
    (void)theta;
    return 2.0 * std::sqrt(2.0) * value;
}

namespace {

// Window half-width for the phase a1 x + x^3 under the tail rule
// 2/f'(edge) < cushion per side; f'(w) = 3w^2 + a1.
double cubic_window(double a1, double per_side_cushion) {
    double w2 = (2.0 / per_side_cushion - a1) / 3.0;
    return std::sqrt(std::max(w2, 1.0));
}

double cubic_chord(double a1, double per_side_cushion, int samples) {
    Polynomial p({0.0, a1, 0.0, 1.0});
    double w = cubic_window(a1, per_side_cushion);
    auto trace = trace_antiderivative(PhaseFunction::from_polynomial(p, -w, w), {-w, w},
                                      samples, 1e-9);
    return max_chord(trace).objective;
}

}  // namespace

SearchResult cubic_search(double tol, double window_halfwidth, int samples) {
    if (!(tol > 0.0)) throw std::invalid_argument("cubic_search: tol must be > 0");
    if (samples < 16) throw std::invalid_argument("cubic_search: samples too small");

    // stage 1: coarse a1 scan with a cheap cushion and thin sampling
    const double coarse_cushion = 1e-2;
    const int coarse_samples = 400;
    const double a1_lo = -4.0, a1_hi = -0.05;
    const int scan = 80;
    int best_i = 0;
    double best = -1e300;
    for (int i = 0; i <= scan; ++i) {
        double a1 = a1_lo + (a1_hi - a1_lo) * i / scan;
        double v = cubic_chord(a1, coarse_cushion, coarse_samples);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    bool rising_at_boundary = (best_i == 0 || best_i == scan);

    // stage 2: golden refinement of a1 on the bracketing cells
    double ga = a1_lo + (a1_hi - a1_lo) * std::max(0, best_i - 1) / scan;
    double gb = a1_lo + (a1_hi - a1_lo) * std::min(scan, best_i + 1) / scan;
    const double mid_cushion = 1e-3;
    const int mid_samples = 1200;
    auto [a1_star, obj_mid] = golden_max(
        [&](double a1) { return cubic_chord(a1, mid_cushion, mid_samples); }, ga, gb,
        1e-6);
    (void)obj_mid;

    // stage 3: final trace at the design-rule window 2/f'(edge) < tol/10
    double w = window_halfwidth > 0.0 ? window_halfwidth
                                      : cubic_window(a1_star, tol / 10.0);
    Polynomial p({0.0, a1_star, 0.0, 1.0});
    auto trace = trace_antiderivative(PhaseFunction::from_polynomial(p, -w, w), {-w, w},
                                      samples, 1e-9);
    SearchResult res = max_chord(trace);
    res.params = {a1_star, 1.0};  // phase a1 x + a3 x^3 with a3 = 1
    res.window = {-w, w};
    res.achieved_tol = tol;

    double mag = std::abs(a1_star);
    double extremum = (2.0 / 3.0) * mag * std::sqrt(mag / 3.0);
    res.diagnostics.push_back({"ratio_a3_over_a1_cubed", 1.0 / (a1_star * a1_star * a1_star)});
    res.diagnostics.push_back({"phase_local_max", extremum});
    res.diagnostics.push_back({"phase_local_min", -extremum});
    res.diagnostics.push_back({"boundary_rising", rising_at_boundary ? 1.0 : 0.0});
    return res;
}

}  // namespace vdc
