#include "ostat/mc.hpp"

#include "ostat/error.hpp"
#include "numeric.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace ostat::mc {

namespace {

// Uniform on the open interval (0, 1) with 53 random bits.
double open_unit(std::mt19937_64& gen) {
    for (;;) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        if (u > 0.0) return u;
    }
}

} // namespace

double sample(const Distribution& d, double u) {
    if (!(u > 0.0 && u < 1.0)) {
        throw DomainError("inverse-transform input must lie in (0, 1)");
    }
    return d.quantile(u);
}

double kth_smallest(std::span<double> values, std::size_t k) {
    if (k < 1 || k > values.size()) {
        throw DomainError("rank k=" + std::to_string(k) + " outside 1.." +
                          std::to_string(values.size()));
    }
    auto nth = values.begin() + static_cast<std::ptrdiff_t>(k - 1);
    std::nth_element(values.begin(), nth, values.end());
    return *nth;
}

bool SimResult::operator==(const SimResult& o) const {
    return replicates == o.replicates && estimate == o.estimate && ci_low == o.ci_low &&
           ci_high == o.ci_high && rank_low == o.rank_low && rank_high == o.rank_high &&
           ci_level == o.ci_level && seed == o.seed && generator == o.generator;
}

std::size_t median_ci_rank(std::size_t R, double level) {
    const double alpha = (1.0 - level) / 2.0;
    const double n = static_cast<double>(R);
    const double log_half = n * std::log(0.5);
    // cdf(j-1) = P(Bin <= j-1); scan upward while it stays within alpha.
    double cdf = 0.0;
    std::size_t j = 0;
    for (std::size_t i = 0; i <= R / 2; ++i) {
        const double x = static_cast<double>(i);
        const double log_pmf = std::lgamma(n + 1) - std::lgamma(x + 1) - std::lgamma(n - x + 1) + log_half;
        cdf += std::exp(log_pmf);
        if (cdf > alpha) break;
        j = i + 1;
    }
    return j;
}

SimResult simulate_median(const OrderStatModel& m, const SimOptions& opts) {
    if (opts.replicates < kMinReplicates) {
        throw DomainError("simulation needs at least " + std::to_string(kMinReplicates) +
                          " replicates");
    }
    if (!(opts.ci_level > 0.5 && opts.ci_level < 1.0)) {
        throw DomainError("confidence level must lie in (0.5, 1)");
    }
    const auto start = std::chrono::steady_clock::now();
    const std::size_t R = opts.replicates;
    const std::size_t n = m.size();
    const std::size_t k = m.rank();

    std::vector<const Distribution*> laws;
    laws.reserve(n);
    for (const auto& c : m.components()) {
        laws.insert(laws.end(), c.repeat, &c.dist);
    }

    std::vector<double> draws(R);
    detail::parallel_for(R, opts.threads, [&](std::size_t rep) {
        thread_local std::vector<double> xs;
        xs.resize(n);
        std::mt19937_64 gen(numeric::mix64(opts.seed ^ numeric::mix64(rep)));
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = laws[i]->quantile(open_unit(gen));
        }
        draws[rep] = kth_smallest(xs, k);
    });

    const std::size_t j = std::max<std::size_t>(1, median_ci_rank(R, opts.ci_level));
    SimResult res;
    res.replicates = R;
    res.seed = opts.seed;
    res.ci_level = opts.ci_level;
    res.generator = kGeneratorName;
    res.rank_low = j;
    res.rank_high = R - j + 1;
    res.estimate = kth_smallest(draws, (R + 1) / 2);
    res.ci_low = kth_smallest(draws, res.rank_low);
    res.ci_high = kth_smallest(draws, res.rank_high);
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

} // namespace ostat::mc
