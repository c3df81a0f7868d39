#pragma once

#include "ostat/dist.hpp"
#include "ostat/pbin.hpp"

#include <cstddef>
#include <vector>

namespace ostat {

// n independent non-negative components and a rank 1 <= k <= n. Components
// are stored as blocks of identical laws so large homogeneous models stay small.
class OrderStatModel {
public:
    OrderStatModel(std::vector<ModelComponent> components, std::size_t k);
    OrderStatModel(const std::vector<Distribution>& components, std::size_t k);

    std::size_t size() const { return n_; }
    std::size_t rank() const { return k_; }
    const std::vector<ModelComponent>& components() const { return components_; }

    OrderStatModel with_rank(std::size_t k) const { return {components_, k}; }
    // Every component multiplied by c.
    OrderStatModel scaled(double c) const;

    MixtureCdf mixture() const { return MixtureCdf(components_); }

    // (F_1(t), ..., F_n(t)) and the left-limit counterpart.
    pbin::SuccessVector successes_at(double t) const;
    pbin::SuccessVector successes_before(double t) const;

    std::vector<double> atoms() const;

    bool operator==(const OrderStatModel&) const = default;

private:
    std::vector<ModelComponent> components_;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
};

// P(k-min <= t) = P(#{i : X_i <= t} >= k).
double kmin_cdf(const OrderStatModel& m, double t);
// P(k-min < t), through left-limit cdfs.
double kmin_strict_cdf(const OrderStatModel& m, double t);
// P(k-min > t) = P(#{i : X_i <= t} < k), without forming 1 - kmin_cdf.
double kmin_survival(const OrderStatModel& m, double t);

// Left quantile inf{t : kmin_cdf(t) >= r} for 0 < r < 1. Brackets by doubling
// from t = 1 (at most 200 steps either way), then bisects.
double kmin_quantile(const OrderStatModel& m, double r);
double kmin_median(const OrderStatModel& m);

inline constexpr int kMaxBracketDoublings = 200;

// P(k-max <= t) where the model's rank is read as "k-th largest"; the k-th
// largest of n values is the (n-k+1)-th smallest.
double kmax_cdf(const OrderStatModel& m, double t);

// q_F((k - 1/2) / n) for the averaged cdf F of the model.
double averaged_quantile(const OrderStatModel& m);
inline double averaged_level(const OrderStatModel& m) {
    return (static_cast<double>(m.rank()) - 0.5) / static_cast<double>(m.size());
}

} // namespace ostat
