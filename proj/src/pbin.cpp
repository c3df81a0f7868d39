#include "ostat/pbin.hpp"

#include "ostat/error.hpp"

#include <cmath>
#include <string>

namespace ostat::pbin {

namespace {

// P(S >= k) for 1 <= k <= n: counts 0..k-1 exact, slot k absorbs everything above.
double absorbing_tail(std::span<const double> p, std::size_t k) {
    std::vector<double> dp(k + 1, 0.0);
    dp[0] = 1.0;
    std::size_t reach = 0;
    for (double pi : p) {
        const double qi = 1.0 - pi;
        if (reach < k) ++reach;
        dp[k] += pi * dp[k - 1];
        for (std::size_t j = std::min(reach, k - 1); j >= 1; --j) {
            dp[j] = dp[j] * qi + dp[j - 1] * pi;
        }
        dp[0] *= qi;
    }
    return dp[k];
}

// P(F <= m) where F counts failures, keeping only counts 0..m.
double failures_at_most(std::span<const double> p, std::size_t m) {
    std::vector<double> dp(m + 1, 0.0);
    dp[0] = 1.0;
    std::size_t reach = 0;
    for (double pi : p) {
        const double qi = 1.0 - pi;
        if (reach < m) ++reach;
        for (std::size_t j = reach; j >= 1; --j) {
            dp[j] = dp[j] * pi + dp[j - 1] * qi;
        }
        dp[0] *= pi;
    }
    double s = 0.0;
    for (double v : dp) s += v;
    return s;
}

void check_rank(const SuccessVector& sv, std::size_t k) {
    if (k > sv.size() + 1) {
        throw DomainError("success count " + std::to_string(k) + " outside 0.." +
                          std::to_string(sv.size() + 1));
    }
}

} // namespace

SuccessVector::SuccessVector(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) {
        throw DomainError("success vector must be non-empty");
    }
    for (double v : p_) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw DomainError("success probabilities must lie in [0, 1]");
        }
        mean_sum_ += v;
    }
}

std::vector<double> pmf(const SuccessVector& sv) {
    const std::size_t n = sv.size();
    std::vector<double> dp(n + 1, 0.0);
    dp[0] = 1.0;
    std::size_t m = 0;
    for (double pi : sv.p()) {
        const double qi = 1.0 - pi;
        ++m;
        dp[m] = dp[m - 1] * pi;
        for (std::size_t j = m - 1; j >= 1; --j) {
            dp[j] = dp[j] * qi + dp[j - 1] * pi;
        }
        dp[0] *= qi;
    }
    return dp;
}

double tail_at_least(const SuccessVector& sv, std::size_t k) {
    check_rank(sv, k);
    const std::size_t n = sv.size();
    if (k == 0) return 1.0;
    if (k == n + 1) return 0.0;
    // S >= k  <=>  failures <= n - k; pick the shorter recursion.
    if (k <= n - k + 1) {
        return absorbing_tail(sv.p(), k);
    }
    return failures_at_most(sv.p(), n - k);
}

double tail_below(const SuccessVector& sv, std::size_t k) {
    check_rank(sv, k);
    const std::size_t n = sv.size();
    if (k == 0) return 0.0;
    if (k == n + 1) return 1.0;
    // S < k  <=>  failures >= n - k + 1.
    const std::size_t f = n - k + 1;
    if (f <= k) {
        std::vector<double> q(sv.p().begin(), sv.p().end());
        for (auto& v : q) v = 1.0 - v;
        return absorbing_tail(q, f);
    }
    // P(S <= k-1) directly from the success counts 0..k-1.
    std::vector<double> q(sv.p().begin(), sv.p().end());
    for (auto& v : q) v = 1.0 - v;
    return failures_at_most(q, k - 1);
}

double brute_force_tail(const SuccessVector& sv, std::size_t k) {
    const std::size_t n = sv.size();
    if (n > kBruteForceMaxTrials) {
        throw ResourceError("brute-force enumeration limited to " +
                            std::to_string(kBruteForceMaxTrials) + " trials");
    }
    check_rank(sv, k);
    const auto p = sv.p();
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::size_t successes = 0;
        double prob = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1U) {
                prob *= p[i];
                ++successes;
            } else {
                prob *= 1.0 - p[i];
            }
        }
        if (successes >= k) total += prob;
    }
    return total;
}

ChebyshevGap chebyshev_bound_gap(const SuccessVector& sv, double t) {
    if (!(t > 0.0)) {
        throw DomainError("deviation t must be positive");
    }
    const double mean = sv.mean_sum();
    const auto dist = pmf(sv);
    double exact = 0.0;
    for (std::size_t j = 0; j < dist.size(); ++j) {
        if (std::abs(static_cast<double>(j) - mean) >= t) exact += dist[j];
    }
    return {exact, mean / (t * t)};
}

} // namespace ostat::pbin
