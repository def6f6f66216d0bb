#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace anc {

/// Central-difference gradient with per-coordinate steps.
template <typename F>
std::vector<double> central_gradient(F&& f, std::vector<double> x,
                                     const std::vector<double>& step) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        const double h = step[i];
        x[i] = xi + h;
        const double fp = f(x);
        x[i] = xi - h;
        const double fm = f(x);
        x[i] = xi;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

/// Central-difference Hessian (symmetric by construction).
template <typename F>
std::vector<std::vector<double>> central_hessian(F&& f, std::vector<double> x,
                                                 const std::vector<double>& step) {
    const std::size_t n = x.size();
    std::vector<std::vector<double>> h(n, std::vector<double>(n, 0.0));
    const double f0 = f(x);
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        const double hi = step[i];
        x[i] = xi + hi;
        const double fp = f(x);
        x[i] = xi - hi;
        const double fm = f(x);
        x[i] = xi;
        h[i][i] = (fp - 2.0 * f0 + fm) / (hi * hi);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double xi = x[i], xj = x[j];
            const double hi = step[i], hj = step[j];
            x[i] = xi + hi; x[j] = xj + hj;
            const double fpp = f(x);
            x[j] = xj - hj;
            const double fpm = f(x);
            x[i] = xi - hi; x[j] = xj + hj;
            const double fmp = f(x);
            x[j] = xj - hj;
            const double fmm = f(x);
            x[i] = xi; x[j] = xj;
            h[i][j] = h[j][i] = (fpp - fpm - fmp + fmm) / (4.0 * hi * hj);
        }
    }
    return h;
}

double matrix_determinant(const std::vector<std::vector<double>>& m);

/// Eigenvalues of a small symmetric matrix (cyclic Jacobi), ascending.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> m);

}  // namespace anc
