#pragma once

#include "ostat/order_stat.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace ostat::mc {

// Inverse-transform draw: d.quantile(u) for u in (0, 1).
double sample(const Distribution& d, double u);

// Value of rank k (1-based, ascending, ties counted with multiplicity).
// Reorders `values` in place.
double kth_smallest(std::span<double> values, std::size_t k);

struct SimOptions {
    std::size_t replicates = 100000;
    std::uint64_t seed = 0;
    double ci_level = 0.99;
    unsigned threads = 1;
};

inline constexpr std::size_t kMinReplicates = 100;

struct SimResult {
    std::size_t replicates = 0;
    double estimate = 0.0;  // left sample median, rank ceil(R/2)
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::size_t rank_low = 0;   // 1-based ranks bounding the interval
    std::size_t rank_high = 0;
    double ci_level = 0.0;
    std::uint64_t seed = 0;
    std::string generator;
    double elapsed_seconds = 0.0;

    // Equality ignores elapsed_seconds.
    bool operator==(const SimResult& o) const;
};

// Generator and stream derivation recorded in SimResult::generator.
inline constexpr const char* kGeneratorName = "mt19937_64/splitmix64(seed,replicate)";

// Sample median of R independent k-min draws with a distribution-free
// binomial-rank confidence interval for the true median. Replicate i draws
// from its own stream derived from (seed, i), so the result does not depend
// on the thread count.
SimResult simulate_median(const OrderStatModel& m, const SimOptions& opts);

// Largest rank j >= 1 with P(Bin(R, 1/2) <= j - 1) <= (1 - level)/2.
std::size_t median_ci_rank(std::size_t R, double level);

} // namespace ostat::mc
