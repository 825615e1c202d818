#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "vol/errors.hpp"

namespace vol::metrics {

struct EvalReport {
    std::string model_id;
    double mae = 0.0;
    double mse = 0.0;
    double rmse = 0.0;
    std::size_t n = 0;
};

namespace detail {
inline void check_lengths(const std::vector<double>& y, const std::vector<double>& y_hat) {
    if (y.empty() || y.size() != y_hat.size())
        throw AlignmentError("metrics: sequences must be nonempty and of equal length");
}
}  // namespace detail

inline double mae(const std::vector<double>& y, const std::vector<double>& y_hat) {
    detail::check_lengths(y, y_hat);
    double acc = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) acc += std::fabs(y[i] - y_hat[i]);
    return acc / static_cast<double>(y.size());
}

inline double mse(const std::vector<double>& y, const std::vector<double>& y_hat) {
    detail::check_lengths(y, y_hat);
    double acc = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double e = y[i] - y_hat[i];
        acc += e * e;
    }
    return acc / static_cast<double>(y.size());
}

inline double rmse(const std::vector<double>& y, const std::vector<double>& y_hat) {
    return std::sqrt(mse(y, y_hat));
}

inline EvalReport evaluate(const std::string& model_id, const std::vector<double>& y,
                           const std::vector<double>& y_hat) {
    EvalReport r;
    r.model_id = model_id;
    r.mae = mae(y, y_hat);
    r.mse = mse(y, y_hat);
    r.rmse = std::sqrt(r.mse);
    r.n = y.size();
    return r;
}

}  // namespace vol::metrics
