#pragma once

#include "ostat/dist.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace ostat::test {

// One instance of every builtin family, unscaled.
inline std::vector<Distribution> builtin_families() {
    return {
        Distribution::uniform01(),
        Distribution::pareto(2.0),
        Distribution::exponential(1.0),
        Distribution::half_gaussian(1.0),
        Distribution::piecewise_linear({{0.0, 0.0}, {1.0, 0.3}, {2.0, 0.3}, {5.0, 1.0}}),
        Distribution::atomic({{1.0, 0.25}, {2.0, 0.5}, {4.0, 0.25}}),
    };
}

// Log-spaced t values, num per decade.
inline std::vector<double> log_points(double lo, double hi, int per_decade) {
    std::vector<double> ts;
    const int steps = static_cast<int>(std::ceil(std::log10(hi / lo) * per_decade));
    for (int i = 0; i <= steps; ++i) ts.push_back(lo * std::pow(10.0, double(i) / per_decade));
    return ts;
}

inline bool rel_close(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

} // namespace ostat::test
