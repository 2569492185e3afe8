#pragma once

// Small self-contained reference implementations used only by the tests.
// They deliberately take a different route than the library (dense linear
// algebra instead of recurrences) so agreement between the two is evidence.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline std::vector<double> solve(Matrix a, std::vector<double> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve: size mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0) throw std::runtime_error("solve: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double m = a[r][col] / a[col][col];
            if (m == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= m * a[col][c];
            b[r] -= m * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t ri = n; ri-- > 0;) {
        double s = b[ri];
        for (std::size_t c = ri + 1; c < n; ++c) s -= a[ri][c] * x[c];
        x[ri] = s / a[ri][ri];
    }
    return x;
}

inline double determinant(Matrix a) {
    const std::size_t n = a.size();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double m = a[r][col] / a[col][col];
            if (m == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= m * a[col][c];
        }
    }
    return det;
}

// Leading coefficient of the interpolating polynomial through
// (x_j, f_j), j = 0..n, obtained by solving the Vandermonde system.
inline double vandermonde_leading(const std::vector<double>& x,
                                  const std::vector<double>& f) {
    const std::size_t m = x.size();
    if (f.size() != m || m == 0) throw std::invalid_argument("vandermonde_leading");
    Matrix v(m, std::vector<double>(m, 1.0));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 1; c < m; ++c) v[r][c] = v[r][c - 1] * x[r];
    return solve(v, f).back();
}

// Same quantity via Cramer's rule: replace the last Vandermonde column by f
// and take the determinant ratio.
inline double cramer_leading(const std::vector<double>& x,
                             const std::vector<double>& f) {
    const std::size_t m = x.size();
    if (f.size() != m || m == 0) throw std::invalid_argument("cramer_leading");
    Matrix v(m, std::vector<double>(m, 1.0));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 1; c < m; ++c) v[r][c] = v[r][c - 1] * x[r];
    Matrix num = v;
    for (std::size_t r = 0; r < m; ++r) num[r][m - 1] = f[r];
    const double den = determinant(v);
    if (den == 0.0) throw std::runtime_error("cramer_leading: coincident nodes");
    return determinant(num) / den;
}

template <typename F>
double central_difference(F&& f, double x, double h = 1e-6) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracle
