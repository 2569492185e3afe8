// Acceptance gate: one line per criterion, exit code = number of failures.
// Criterion 6 splits into 6a (the squeeze itself) and 6b (the endpoint
// proximity clause); 6b fails by construction of its quoted target, which the
// line spells out numerically.

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vdc/divdiff.hpp"
#include "vdc/osc.hpp"
#include "vdc/poly.hpp"
#include "vdc/sublevel.hpp"
#include "vdc/verify.hpp"

namespace {

using vdc::Cplx;
using vdc::NodeSet;
using vdc::Polynomial;

int failures = 0;

void line(const std::string& label, bool ok, const std::string& text) {
    std::printf("[%3s] %s  %s\n", label.c_str(), ok ? "PASS" : "FAIL", text.c_str());
    if (!ok) ++failures;
}

const vdc::verify::CheckResult* find(const vdc::verify::VerifyReport& rep,
                                     const std::string& id) {
    for (const auto& it : rep.items)
        if (it.id == id) return &it;
    return nullptr;
}

double value_of(const vdc::verify::CheckResult* item, const std::string& key,
                double fallback = 0.0) {
    if (item == nullptr) return fallback;
    for (const auto& [k, v] : item->values)
        if (k == key) return v;
    return fallback;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::vector<double> random_nodes(std::mt19937_64& rng, int count, double min_gap) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> pts;
    while (static_cast<int>(pts.size()) < count) {
        const double x = u(rng);
        bool ok = true;
        for (double p : pts)
            if (std::abs(p - x) < min_gap) ok = false;
        if (ok) pts.push_back(x);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

// Property suite A: recursive vs explicit divided differences, 1000 cases,
// agreement to 1e-9 against a conditioning-aware denominator.
bool dd_agreement_suite(std::string& note) {
    std::mt19937_64 rng(1001);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    int bad = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int count = 2 + static_cast<int>(rng() % 8);
        const NodeSet nodes = NodeSet::from_nodes(random_nodes(rng, count, 0.02));
        vdc::RealFn f;
        const int pick = static_cast<int>(rng() % 3);
        if (pick == 0) {
            const int deg = static_cast<int>(rng() % 9);
            std::vector<double> c(static_cast<std::size_t>(deg) + 1);
            for (double& v : c) v = coeff(rng);
            Polynomial p(c);
            f = [p](double x) { return p(x); };
        } else if (pick == 1) {
            f = [](double x) { return std::sin(3.0 * x); };
        } else {
            f = [](double x) { return std::exp(x); };
        }
        const double a = vdc::divided_difference(f, nodes);
        const double b = vdc::divided_difference_explicit(f, nodes);
        const auto mv = vdc::mean_value_coefficients(nodes);
        double term_scale = 0.0;
        for (int j = 0; j < nodes.count(); ++j)
            term_scale += std::abs(mv.c[static_cast<std::size_t>(j)] *
                                   f(nodes.nodes[static_cast<std::size_t>(j)]));
        term_scale /= std::exp(std::lgamma(nodes.order() + 1.0));
        const double rel = std::abs(a - b) / std::max({std::abs(a), term_scale, 1e-300});
        worst = std::max(worst, rel);
        if (rel >= 1e-9) ++bad;
    }
    note = "1000 node sets, worst relative gap " + num(worst);
    return bad == 0;
}

// Property suite B: the divided difference against two dense linear-algebra
// oracles for the leading interpolation coefficient.
bool linear_algebra_suite(std::string& note) {
    std::mt19937_64 rng(1002);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    int bad = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const NodeSet nodes = NodeSet::from_nodes(random_nodes(rng, n + 1, 0.05));
        const int deg = static_cast<int>(rng() % (n + 1));
        std::vector<double> c(static_cast<std::size_t>(deg) + 1);
        for (double& v : c) v = coeff(rng);
        const Polynomial p(c);
        std::vector<double> fx(nodes.nodes.size());
        for (std::size_t j = 0; j < fx.size(); ++j) fx[j] = p(nodes.nodes[j]);
        const double dd = vdc::divided_difference([&](double x) { return p(x); }, nodes);
        const double ge = oracle::vandermonde_leading(nodes.nodes, fx);
        const double cr = oracle::cramer_leading(nodes.nodes, fx);
        const double scale = std::max(1.0, std::abs(dd));
        const double rel = std::max(std::abs(dd - ge), std::abs(dd - cr)) / scale;
        worst = std::max(worst, rel);
        if (rel >= 1e-7) ++bad;
    }
    note = "60 systems to order 6, worst gap " + num(worst);
    return bad == 0;
}

// Property suite C: mean value split points for random monotone weights
// against oscillating complex factors; the two-term identity is recomputed
// with independent quadrature and must close to 1e-9.
bool mvt_suite(std::string& note) {
    std::mt19937_64 rng(1003);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    int bad = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const double a = -1.0 + 2.0 * u01(rng);
        const double b = a + 0.5 + 1.5 * u01(rng);
        // Monotone weight: integral of a positive even polynomial, randomly
        // reflected so both directions are exercised.
        const double p0 = 0.05 + u01(rng);
        const double p2 = u01(rng);
        const double p4 = u01(rng);
        const double sign = (rng() % 2 == 0) ? 1.0 : -1.0;
        const double shift = -1.0 + 2.0 * u01(rng);
        auto f = [=](double x) {
            return shift + sign * (p0 * x + p2 * x * x * x / 3.0 +
                                   p4 * x * x * x * x * x / 5.0);
        };
        // Continuous complex factor: affine complex envelope times e^{i q}.
        const Cplx c0(u01(rng) - 0.5, u01(rng) - 0.5);
        const Cplx c1(u01(rng) - 0.5, u01(rng) - 0.5);
        const double q1 = -3.0 + 6.0 * u01(rng);
        const double q2 = -3.0 + 6.0 * u01(rng);
        const double q3 = -1.0 + 2.0 * u01(rng);
        auto g = [=](double x) {
            return (c0 + c1 * x) *
                   std::exp(Cplx(0.0, x * (q1 + x * (q2 + x * q3))));
        };

        double c = 0.0;
        try {
            c = vdc::complex_mvt_point(f, g, a, b, 1e-9);
        } catch (const std::exception&) {
            ++bad;
            continue;
        }
        auto fg = [&](double x) { return f(x) * g(x); };
        const auto I = vdc::integrate_complex(fg, a, b, 1e-12);
        const auto whole = vdc::integrate_complex(g, a, b, 1e-12);
        const auto head = vdc::integrate_complex(g, a, c, 1e-12);
        const Cplx rot = std::exp(Cplx(0.0, -I.argument));
        const double residual = std::abs(
            f(a) * (rot * head.value).real() +
            f(b) * (rot * (whole.value - head.value)).real() - I.modulus);
        worst = std::max(worst, residual);
        if (!(residual < 1e-9)) ++bad;
    }
    note = "100 weighted integrals, worst identity residual " + num(worst);
    return bad == 0;
}

// Property suite D: random polynomials of exact degree n never exceed the
// sublevel ceiling computed from their known derivative floor n! |a_n|.
bool sublevel_suite(std::string& note) {
    std::mt19937_64 rng(1004);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_real_distribution<double> lead(0.2, 3.0);
    std::uniform_real_distribution<double> alpha_draw(0.01, 2.0);
    int bad = 0;
    double closest = 1e300;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<double> c(static_cast<std::size_t>(n) + 1);
        for (double& v : c) v = coeff(rng);
        double an = lead(rng);
        if (rng() % 2 == 0) an = -an;
        c.back() = an;
        const Polynomial p(c);
        const double lambda = std::abs(p.derivative(n).coeffs()[0]);
        const double alpha = alpha_draw(rng);
        const double measured =
            vdc::measure_sublevel([&](double x) { return p(x); }, -1.0, 1.0, alpha, 2000)
                .measure;
        const double ceiling = vdc::sublevel_bound(n, alpha, lambda);
        closest = std::min(closest, ceiling - measured);
        if (measured > ceiling + 1e-9) ++bad;
    }
    note = "1000 polynomials, smallest bound margin " + num(closest);
    return bad == 0;
}

}  // namespace

int main() {
    const vdc::verify::VerifyReport rep = vdc::verify::run_all();

    const auto* c1 = find(rep, "integral-values");
    line("1", c1 != nullptr && c1->passed,
         "oscillatory integral reproduction: quadratic " +
             num(value_of(c1, "quadratic_modulus")) + ", cubic " +
             num(value_of(c1, "cubic_modulus")) + ", both above 4n/e");

    const auto* c2 = find(rep, "minimal-node-identity");
    line("2", c2 != nullptr && c2->passed,
         "minimal inverse-distance sums equal 2^(n-1) for n = 1..15 (worst "
         "relative deviation " +
             num(value_of(c2, "worst_relative_deviation")) + ")");

    const auto* c3 = find(rep, "sublevel-equality");
    line("3", c3 != nullptr && c3->passed,
         "scaled Chebyshev sublevel sets meet the bound with equality for n = "
         "2..6 (worst equality gap " +
             num(value_of(c3, "worst_equality_gap")) + ")");

    const auto* c4 = find(rep, "constant-inequalities");
    line("4", c4 != nullptr && c4->passed,
         "constant inequalities for n = 2..1000 and the 4/e, 4 limits (peak " +
             num(value_of(c4, "vdc_peak")) + " at n = " +
             num(value_of(c4, "vdc_peak_n")) + ")");

    const auto* c5 = find(rep, "first-derivative-test");
    line("5", c5 != nullptr && c5->passed,
         "first-derivative estimate: equality at the linear phase, " +
             num(value_of(c5, "fuzz_cases")) + " convex phases, " +
             num(value_of(c5, "fuzz_violations")) + " violations");

    const auto* c6a = find(rep, "phase-sandwich");
    line("6a", c6a != nullptr && c6a->passed,
         "Chebyshev-phase modulus inside the two-sided squeeze for n = 2, 5, "
         "10, 20");

    const auto* c6b = find(rep, "sandwich-endpoint-proximity");
    line("6b", c6b != nullptr && c6b->passed,
         "squeeze endpoints within 0.15 of 2 at n = 20: lower is " +
             num(value_of(c6b, "lower_distance")) + " away, upper is " +
             num(value_of(c6b, "upper_distance")) +
             " away (upper endpoint " + num(value_of(c6b, "upper_endpoint")) +
             "; it first comes within 0.15 near n = 150)");

    const auto* c7 = find(rep, "n2-optimum");
    line("7", c7 != nullptr && c7->passed,
         "split-angle optimum at pi/6 with doubled value " +
             num(value_of(c7, "constant")));

    const auto* c8 = find(rep, "n2-conjecture");
    line("8", c8 != nullptr && c8->passed,
         "conjectured sharp n = 2 value " +
             num(value_of(c8, "conjectured_constant")) +
             " within 5e-4 of 3.3643 and inside its bracket");

    const auto* c9 = find(rep, "cubic-extremal-search");
    line("9", c9 != nullptr && c9->passed,
         "cubic-phase search: shape ratio " + num(value_of(c9, "ratio")) +
             ", chord " + num(value_of(c9, "objective")) + " (< 4)");

    const auto* c10 = find(rep, "fourier-sign-audit");
    const bool c10_ok = c10 != nullptr &&
                        std::abs(value_of(c10, "modulus") - 0.1591549431) < 1e-6 &&
                        std::abs(value_of(c10, "printed_bound")) < 1e-9 &&
                        std::abs(value_of(c10, "consistent_bound") - 0.3183098862) < 1e-6;
    line("10", c10_ok,
         "Fourier-decay audit reports both variants: printed " +
             num(value_of(c10, "printed_bound")) + " (violated), consistent " +
             num(value_of(c10, "consistent_bound")) + " (holds), modulus " +
             num(value_of(c10, "modulus")));

    std::string note_a, note_b, note_c, note_d;
    const bool sa = dd_agreement_suite(note_a);
    const bool sb = linear_algebra_suite(note_b);
    const bool sc = mvt_suite(note_c);
    const bool sd = sublevel_suite(note_d);
    line("11", sa && sb && sc && sd,
         "property suites: [" + note_a + "] [" + note_b + "] [" + note_c +
             "] [" + note_d + "]");

    const auto* audit = find(rep, "extremum-value-audit");
    if (audit != nullptr)
        std::printf("[aud] NOTE  quoted cubic extremum 0.5935 vs computed %s "
                    "(reported as a discrepancy, not gated)\n",
                    num(value_of(audit, "computed_extremum")).c_str());

    std::printf("summary: %d of 12 criterion lines passed, %d failed\n",
                12 - failures, failures);
    return failures;
}
