#pragma once

#include <cstddef>
#include <cstdint>

namespace ostat::oracle {

// P(k-th smallest of n iid Uniform(0,1) <= t) by the binomial sum
// sum_{j>=k} C(n,j) t^j (1-t)^(n-j). Exact binomial coefficients for n <= 60.
double iid_uniform_kmin_cdf(std::size_t n, std::size_t k, double t);

struct OracleReport {
    std::uint64_t seed = 0;
    std::size_t vectors = 0;          // random success vectors checked
    double max_tail_discrepancy = 0;  // |tail_at_least - brute_force_tail|
    double max_pmf_discrepancy = 0;   // |pmf[j] - brute-force P(S=j)|
    std::size_t beta_cases = 0;
    double max_beta_discrepancy = 0;  // |kmin_cdf - binomial sum| on iid uniforms
    bool passed = false;
};

inline constexpr double kTailOracleTolerance = 1e-12;
inline constexpr double kBetaOracleTolerance = 1e-10;

// Cross-checks the Poisson-binomial engine against enumeration on `vectors`
// seeded random vectors with n <= max_n, and the order-statistic engine
// against the iid-uniform closed form for n <= beta_max_n, all k, and
// t in {0.1, ..., 0.9}.
OracleReport run_oracles(std::uint64_t seed, std::size_t vectors = 500, std::size_t max_n = 15,
                         std::size_t beta_max_n = 50);

} // namespace ostat::oracle
