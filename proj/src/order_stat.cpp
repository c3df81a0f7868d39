#include "ostat/order_stat.hpp"

#include "ostat/error.hpp"
#include "numeric.hpp"

#include <cmath>
#include <string>

namespace ostat {

namespace {

template <class Eval>
pbin::SuccessVector expand(const std::vector<ModelComponent>& comps, std::size_t n, Eval&& eval) {
    std::vector<double> p;
    p.reserve(n);
    for (const auto& c : comps) {
        p.insert(p.end(), c.repeat, eval(c.dist));
    }
    return pbin::SuccessVector(std::move(p));
}

std::vector<ModelComponent> singletons(const std::vector<Distribution>& ds) {
    std::vector<ModelComponent> out;
    out.reserve(ds.size());
    for (const auto& d : ds) out.push_back({d, 1});
    return out;
}

} // namespace

OrderStatModel::OrderStatModel(std::vector<ModelComponent> components, std::size_t k)
    : components_(std::move(components)), k_(k) {
    for (const auto& c : components_) {
        if (c.repeat == 0) {
            throw DomainError("component repeat must be at least 1");
        }
        n_ += c.repeat;
    }
    if (n_ == 0) {
        throw DomainError("model needs at least one component");
    }
    if (k_ < 1 || k_ > n_) {
        throw DomainError("rank k=" + std::to_string(k_) + " outside 1.." + std::to_string(n_));
    }
}

OrderStatModel::OrderStatModel(const std::vector<Distribution>& components, std::size_t k)
    : OrderStatModel(singletons(components), k) {}

OrderStatModel OrderStatModel::scaled(double c) const {
    auto comps = components_;
    for (auto& comp : comps) comp.dist = comp.dist.scaled(c);
    return {std::move(comps), k_};
}

pbin::SuccessVector OrderStatModel::successes_at(double t) const {
    return expand(components_, n_, [t](const Distribution& d) { return d.cdf(t); });
}

pbin::SuccessVector OrderStatModel::successes_before(double t) const {
    return expand(components_, n_, [t](const Distribution& d) { return d.cdf_left_limit(t); });
}

std::vector<double> OrderStatModel::atoms() const {
    std::vector<double> out;
    for (const auto& c : components_) {
        auto a = c.dist.atoms();
        out.insert(out.end(), a.begin(), a.end());
    }
    return out;
}

double kmin_cdf(const OrderStatModel& m, double t) {
    return pbin::tail_at_least(m.successes_at(t), m.rank());
}

double kmin_strict_cdf(const OrderStatModel& m, double t) {
    return pbin::tail_at_least(m.successes_before(t), m.rank());
}

double kmin_survival(const OrderStatModel& m, double t) {
    return pbin::tail_below(m.successes_at(t), m.rank());
}

double kmin_quantile(const OrderStatModel& m, double r) {
    if (!(r > 0.0 && r < 1.0)) {
        throw DomainError("order-statistic quantile level must lie in (0, 1)");
    }
    auto f = [&](double t) { return kmin_cdf(m, t); };
    if (f(0.0) >= r) {
        return 0.0;
    }
    double lo = 1.0;
    double hi = 1.0;
    if (f(1.0) >= r) {
        int steps = 0;
        do {
            hi = lo;
            lo = hi / 2;
            if (++steps > kMaxBracketDoublings) {
                throw RangeError("quantile out of representable range");
            }
        } while (f(lo) >= r);
    } else {
        int steps = 0;
        do {
            lo = hi;
            hi = lo * 2;
            if (++steps > kMaxBracketDoublings) {
                throw RangeError("quantile out of representable range");
            }
        } while (f(hi) < r);
    }
    return numeric::bisect_left_fn(f, r, lo, hi, m.atoms());
}

double kmin_median(const OrderStatModel& m) { return kmin_quantile(m, 0.5); }

double kmax_cdf(const OrderStatModel& m, double t) {
    return kmin_cdf(m.with_rank(m.size() - m.rank() + 1), t);
}

double averaged_quantile(const OrderStatModel& m) { return m.mixture().quantile(averaged_level(m)); }

} // namespace ostat
