#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ostat::pbin {

// Success probabilities of independent Bernoulli trials.
class SuccessVector {
public:
    explicit SuccessVector(std::vector<double> p);

    std::span<const double> p() const { return p_; }
    std::size_t size() const { return p_.size(); }
    // Sum of the p_i, the expected number of successes.
    double mean_sum() const { return mean_sum_; }

private:
    std::vector<double> p_;
    double mean_sum_ = 0.0;
};

// P(S = j) for j = 0..n, by the O(n^2) convolution recursion.
std::vector<double> pmf(const SuccessVector& sv);

// P(S >= k), 0 <= k <= n+1. Truncated recursion of cost O(n * min(k, n-k+1)).
double tail_at_least(const SuccessVector& sv, std::size_t k);

// P(S < k) = 1 - tail_at_least(sv, k), computed without the subtraction.
double tail_below(const SuccessVector& sv, std::size_t k);

// Reference value of P(S >= k) by enumerating all 2^n outcomes (n <= 20).
double brute_force_tail(const SuccessVector& sv, std::size_t k);

inline constexpr std::size_t kBruteForceMaxTrials = 20;

struct ChebyshevGap {
    double exact;  // P(|S - sum p| >= t)
    double bound;  // (sum p) / t^2
};

// Concentration of the success count around its mean: exact two-sided tail
// next to the bound (sum p_i) / t^2.
ChebyshevGap chebyshev_bound_gap(const SuccessVector& sv, double t);

} // namespace ostat::pbin
