#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vol/errors.hpp"

namespace vol::ts {

/// A dated sequence of values. Dates are opaque ordered labels (canonical
/// ISO strings after ingestion); values are dimensionless decimal fractions
/// when the series holds returns (0.01 == 1%).
struct ReturnSeries {
    std::vector<std::string> dates;
    std::vector<double> values;
    std::string label;

    std::size_t size() const { return values.size(); }

    /// Enforce the type invariants: equal lengths, strictly increasing
    /// dates, finite values. Throws on violation.
    void validate() const {
        if (dates.size() != values.size())
            throw DomainError(label + ": dates/values length mismatch");
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!std::isfinite(values[i]))
                throw DomainError(label + ": non-finite value at index " + std::to_string(i));
            if (i > 0 && !(dates[i - 1] < dates[i]))
                throw DomainError(label + ": dates not strictly increasing at index " +
                                  std::to_string(i));
        }
    }
};

struct DescriptiveStats {
    double mean = 0.0;
    double std_dev = 0.0;   // n-1 denominator
    double skewness = 0.0;  // standardized third central moment
    double kurtosis = 0.0;  // raw fourth standardized moment, normal = 3
    double max = 0.0;
    double min = 0.0;
    std::size_t count = 0;
};

struct SplitSpec {
    double train_fraction = 0.8;
    std::size_t train_len = 0;
    std::size_t test_len = 0;
};

/// Arithmetic returns r_t = (P_t - P_{t-1}) / P_{t-1} from a dated price
/// sequence. Output is one element shorter and keeps the dates of the later
/// observation of each pair.
inline ReturnSeries compute_returns(const ReturnSeries& prices) {
    if (prices.size() < 2)
        throw InsufficientDataError("compute_returns: need at least 2 prices");
    for (std::size_t i = 0; i < prices.size(); ++i)
        if (!(prices.values[i] > 0.0))
            throw DomainError("compute_returns: non-positive price at index " +
                              std::to_string(i));
    ReturnSeries out;
    out.label = prices.label;
    out.dates.assign(prices.dates.begin() + 1, prices.dates.end());
    out.values.resize(prices.size() - 1);
    for (std::size_t t = 1; t < prices.size(); ++t)
        out.values[t - 1] = (prices.values[t] - prices.values[t - 1]) / prices.values[t - 1];
    return out;
}

/// Sample variance with n-1 denominator.
inline double sample_variance(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n < 2) throw InsufficientDataError("sample_variance: need at least 2 observations");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : values) {
        const double d = v - mean;
        ss += d * d;
    }
    return ss / static_cast<double>(n - 1);
}

inline double sample_variance(const ReturnSeries& series) {
    return sample_variance(series.values);
}

/// Descriptive statistics over a return series. Skewness and kurtosis are
/// the population-moment standardized versions (kurtosis of a normal is 3);
/// both are reported as 0 for a constant series.
inline DescriptiveStats describe(const ReturnSeries& series) {
    const std::size_t n = series.size();
    if (n < 2) throw InsufficientDataError("describe: need at least 2 observations");
    DescriptiveStats s;
    s.count = n;
    s.min = series.values[0];
    s.max = series.values[0];
    double mean = 0.0;
    for (double v : series.values) {
        mean += v;
        if (v < s.min) s.min = v;
        if (v > s.max) s.max = v;
    }
    mean /= static_cast<double>(n);
    s.mean = mean;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0, ss = 0.0;
    for (double v : series.values) {
        const double d = v - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
        ss += d2;
    }
    m2 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);
    m4 /= static_cast<double>(n);
    s.std_dev = std::sqrt(ss / static_cast<double>(n - 1));
    if (m2 > 0.0) {
        s.skewness = m3 / std::pow(m2, 1.5);
        s.kurtosis = m4 / (m2 * m2);
    }
    return s;
}

/// Squared-return volatility proxy: proxy[t] = r_t^2, dates preserved.
inline ReturnSeries squared_return_proxy(const ReturnSeries& series) {
    ReturnSeries out;
    out.label = series.label.empty() ? "proxy" : series.label + "_sq";
    out.dates = series.dates;
    out.values.resize(series.size());
    for (std::size_t t = 0; t < series.size(); ++t)
        out.values[t] = series.values[t] * series.values[t];
    return out;
}

/// Split boundary: train gets the first floor(fraction * n) observations.
inline SplitSpec make_split(std::size_t n, double train_fraction) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw ConfigError("split: train_fraction must be in (0,1)");
    SplitSpec spec;
    spec.train_fraction = train_fraction;
    spec.train_len = static_cast<std::size_t>(
        std::floor(train_fraction * static_cast<double>(n)));
    if (spec.train_len < 2 || spec.train_len >= n)
        throw ConfigError("split: degenerate split for n = " + std::to_string(n));
    spec.test_len = n - spec.train_len;
    return spec;
}

/// Chronological train/test split; concatenation reproduces the input.
inline std::pair<ReturnSeries, ReturnSeries> split(const ReturnSeries& series,
                                                   double train_fraction) {
    const SplitSpec spec = make_split(series.size(), train_fraction);
    ReturnSeries train, test;
    train.label = series.label;
    test.label = series.label;
    train.dates.assign(series.dates.begin(), series.dates.begin() + spec.train_len);
    train.values.assign(series.values.begin(), series.values.begin() + spec.train_len);
    test.dates.assign(series.dates.begin() + spec.train_len, series.dates.end());
    test.values.assign(series.values.begin() + spec.train_len, series.values.end());
    return {std::move(train), std::move(test)};
}

}  // namespace vol::ts
