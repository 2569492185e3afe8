#pragma once

#include <functional>
#include <vector>

namespace vdc {

using RealFn = std::function<double(double)>;

/** Dense polynomial with real coefficients, ascending powers.
 *
 *  Trailing zero coefficients are stripped on construction so that
 *  degree() == coeffs().size() - 1 and the leading coefficient is nonzero
 *  unless the polynomial is identically zero (kept as the single
 *  coefficient 0).
 */
class Polynomial {
  public:
    Polynomial() : c_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs);

    const std::vector<double>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0.0; }

    /// Evaluate at x. Uses a compensated (FMA error-free) Horner scheme, so
    /// badly conditioned coefficient sets (high-degree Chebyshev) still come
    /// out near full working precision on [-1,1].
    double operator()(double x) const;

    /// k-th derivative (k >= 0); the 0-th derivative is the polynomial itself.
    Polynomial derivative(int k = 1) const;

  private:
    std::vector<double> c_;
};

/** Strictly ascending node set over an interval.
 *
 *  closed=true allows nodes at the interval endpoints (Chebyshev extrema live
 *  on the closed interval); closed=false demands strict interior containment.
 *  The constructor rejects unsorted or coincident nodes.
 */
struct NodeSet {
    std::vector<double> nodes;
    double lo = -1.0;
    double hi = 1.0;
    bool closed = true;

    NodeSet(std::vector<double> nodes_, double lo_, double hi_, bool closed_ = true);

    /// Nodes over their own hull [min, max], closed.
    static NodeSet from_nodes(std::vector<double> nodes_);

    int count() const { return static_cast<int>(nodes.size()); }
    /// Order of the divided difference these nodes support (#nodes - 1).
    int order() const { return count() - 1; }
};

/// Chebyshev polynomial of the first kind, exact integer coefficients via the
/// binomial double sum. Exact through n = 64 (128-bit accumulation); larger n
/// is refused since the coefficient form is useless that far out anyway.
Polynomial chebyshev(int n);

/// cos(n arccos x) for |x| <= 1, stable three-term recurrence outside.
/// This is the evaluation path of choice once coefficients get ill-conditioned
/// (degree beyond ~30).
double chebyshev_value(int n, double x);

/// The n+1 extrema of T_n on [-1,1], ascending: cos(j*pi/n) for j = n..0.
/// T_n alternates as (-1)^(j+n) along the ascending order.
NodeSet chebyshev_extrema(int n);

}  // namespace vdc
