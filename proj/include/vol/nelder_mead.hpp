#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace vol::opt {

struct NelderMeadResult {
    std::vector<double> x;
    double fmin = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
};

/// Derivative-free simplex minimizer. The objective may return +inf to mark
/// infeasible points (barrier); the simplex contracts away from them.
/// Converged means the max coordinate spread of the simplex fell below `tol`.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& x0,
                                    const std::vector<double>& steps,
                                    int max_iter, double tol) {
    const std::size_t n = x0.size();
    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    std::vector<std::vector<double>> x(n + 1, x0);
    for (std::size_t j = 0; j < n; ++j) x[j + 1][j] += steps[j];
    std::vector<double> fx(n + 1);
    for (std::size_t j = 0; j <= n; ++j) fx[j] = f(x[j]);

    auto order = [&]() {
        std::vector<std::size_t> idx(n + 1);
        for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
        std::vector<std::vector<double>> x2(n + 1);
        std::vector<double> fx2(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            x2[i] = x[idx[i]];
            fx2[i] = fx[idx[i]];
        }
        x.swap(x2);
        fx.swap(fx2);
    };

    NelderMeadResult result;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        order();

        double spread = 0.0;
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                spread = std::max(spread, std::fabs(x[j][k] - x[0][k]));
        if (spread < tol) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) centroid[k] += x[j][k];
        for (double& c : centroid) c /= static_cast<double>(n);

        std::vector<double> xr(n);
        for (std::size_t k = 0; k < n; ++k)
            xr[k] = centroid[k] + alpha * (centroid[k] - x[n][k]);
        const double fr = f(xr);

        if (fr < fx[0]) {
            std::vector<double> xe(n);
            for (std::size_t k = 0; k < n; ++k)
                xe[k] = centroid[k] + gamma * (xr[k] - centroid[k]);
            const double fe = f(xe);
            if (fe < fr) {
                x[n] = std::move(xe);
                fx[n] = fe;
            } else {
                x[n] = std::move(xr);
                fx[n] = fr;
            }
        } else if (fr < fx[n - 1]) {
            x[n] = std::move(xr);
            fx[n] = fr;
        } else {
            const bool outside = fr < fx[n];
            std::vector<double> xc(n);
            if (outside) {
                for (std::size_t k = 0; k < n; ++k)
                    xc[k] = centroid[k] + rho * (xr[k] - centroid[k]);
            } else {
                for (std::size_t k = 0; k < n; ++k)
                    xc[k] = centroid[k] + rho * (x[n][k] - centroid[k]);
            }
            const double fc = f(xc);
            if (fc < (outside ? fr : fx[n])) {
                x[n] = std::move(xc);
                fx[n] = fc;
            } else {
                for (std::size_t j = 1; j <= n; ++j) {
                    for (std::size_t k = 0; k < n; ++k)
                        x[j][k] = x[0][k] + sigma * (x[j][k] - x[0][k]);
                    fx[j] = f(x[j]);
                }
            }
        }
    }
    order();
    result.x = x[0];
    result.fmin = fx[0];
    result.iterations = iter;
    return result;
}

}  // namespace vol::opt
