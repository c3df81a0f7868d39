#include "ostat/bounds.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ostat {

namespace {

void require_K(double K) {
    if (!(K > 1.0) || !std::isfinite(K)) {
        throw DomainError("K must be a finite number greater than 1");
    }
}

bool all_pass(const std::vector<ComponentCertificate>& certs) {
    return std::all_of(certs.begin(), certs.end(),
                       [](const ComponentCertificate& c) { return c.certificate.passed; });
}

template <class Exact, class Bound>
std::vector<TailBoundRow> tail_rows(TailSide side, double q, std::span<const double> t_grid,
                                    const TailOptions& opts, Exact&& exact, Bound&& bound) {
    std::vector<double> ts(t_grid.begin(), t_grid.end());
    std::sort(ts.begin(), ts.end());
    std::vector<TailBoundRow> rows(ts.size());
    detail::parallel_for(ts.size(), opts.threads, [&](std::size_t i) {
        TailBoundRow row;
        row.t = ts[i];
        row.side = side;
        row.threshold = ts[i] * q;
        row.exact_prob = exact(row.threshold);
        const double b = bound(ts[i]);
        row.vacuous = b >= 1.0;
        row.bound = b * opts.bound_scale;
        row.passed = row.exact_prob <= row.bound + kTailTolerance;
        rows[i] = row;
    });
    return rows;
}

} // namespace

std::string_view to_string(TheoremVerdict v) {
    switch (v) {
    case TheoremVerdict::pass: return "pass";
    case TheoremVerdict::fail: return "fail";
    case TheoremVerdict::precondition_failed: return "precondition-failed";
    }
    return "unknown";
}

TheoremVerdict theorem_verdict_from_string(std::string_view name) {
    for (auto v : {TheoremVerdict::pass, TheoremVerdict::fail, TheoremVerdict::precondition_failed}) {
        if (to_string(v) == name) return v;
    }
    throw ParseError("unknown theorem verdict '" + std::string(name) + "'");
}

std::string_view to_string(TailSide side) { return side == TailSide::lower ? "lower" : "upper"; }

TailSide tail_side_from_string(std::string_view name) {
    if (name == "lower") return TailSide::lower;
    if (name == "upper") return TailSide::upper;
    throw ParseError("unknown tail side '" + std::string(name) + "'");
}

std::vector<ComponentCertificate> certify_components(const OrderStatModel& m, double K,
                                                     const GridSpec& grid, unsigned threads) {
    const auto& comps = m.components();
    std::vector<ComponentCertificate> out(comps.size());
    detail::parallel_for(comps.size(), threads, [&](std::size_t i) {
        out[i].index = i;
        out[i].repeat = comps[i].repeat;
        out[i].description = comps[i].dist.describe();
        out[i].certificate = check_condition(comps[i].dist, K, grid, {1, false});
    });
    return out;
}

TheoremReport verify_theorem(const OrderStatModel& m, double K, const TheoremOptions& opts) {
    require_K(K);
    TheoremReport r;
    r.K = K;
    r.n = m.size();
    r.k = m.rank();
    r.components = certify_components(m, K, opts.grid, opts.threads);
    r.components_pass = all_pass(r.components);

    r.q = averaged_quantile(m);
    r.med = kmin_median(m);
    r.ratio = r.med / r.q;
    r.lower = std::pow(K, -10.0);
    r.upper = std::pow(K, 13.0);
    r.sandwich_holds = r.med >= r.lower * r.q * (1.0 - kSandwichRelTol) &&
                       r.med <= r.upper * r.q * (1.0 + kSandwichRelTol);
    r.prob_below_lower = kmin_strict_cdf(m, r.lower * r.q);
    r.prob_at_most_upper = kmin_cdf(m, r.upper * r.q);
    r.one_sided_holds = r.prob_below_lower < 0.5 && r.prob_at_most_upper > 0.5;

    if (!r.components_pass) {
        r.verdict = TheoremVerdict::precondition_failed;
    } else {
        r.verdict = r.sandwich_holds ? TheoremVerdict::pass : TheoremVerdict::fail;
    }
    return r;
}

double lower_tail_bound(double t, double K) { return 4.0 * std::pow(t, 1.0 / (4.0 * std::log(K))); }

double upper_tail_bound(double t, double K) { return 4.0 * std::pow(t, -1.0 / (6.0 * std::log(K))); }

std::vector<double> default_tail_grid(TailSide side, double K, int count) {
    require_K(K);
    std::vector<double> ts;
    for (int j = 1; j <= count; ++j) {
        ts.push_back(std::pow(K, side == TailSide::lower ? -(5.0 + j) : 5.0 + j));
    }
    std::sort(ts.begin(), ts.end());
    return ts;
}

std::vector<TailBoundRow> verify_lower_tail(const OrderStatModel& m, double K,
                                            std::span<const double> t_grid,
                                            const TailOptions& opts) {
    require_K(K);
    const double edge = std::pow(K, -5.0);
    for (double t : t_grid) {
        if (!(t > 0.0 && t < edge)) {
            throw DomainError("lower-tail t must lie in (0, K^-5)");
        }
    }
    const double q = averaged_quantile(m);
    return tail_rows(
        TailSide::lower, q, t_grid, opts, [&](double s) { return kmin_strict_cdf(m, s); },
        [&](double t) { return lower_tail_bound(t, K); });
}

std::vector<TailBoundRow> verify_upper_tail(const OrderStatModel& m, double K,
                                            std::span<const double> t_grid,
                                            const TailOptions& opts) {
    require_K(K);
    const double edge = std::pow(K, 5.0);
    for (double t : t_grid) {
        if (!(t > edge) || !std::isfinite(t)) {
            throw DomainError("upper-tail t must lie in (K^5, inf)");
        }
    }
    const double q = averaged_quantile(m);
    return tail_rows(
        TailSide::upper, q, t_grid, opts, [&](double s) { return kmin_survival(m, s); },
        [&](double t) { return upper_tail_bound(t, K); });
}

TailReport verify_tails(const OrderStatModel& m, double K, std::span<const TailSide> sides,
                        std::span<const double> t_grid, const GridSpec& grid,
                        const TailOptions& opts) {
    require_K(K);
    TailReport rep;
    rep.K = K;
    rep.n = m.size();
    rep.k = m.rank();
    rep.q = averaged_quantile(m);
    rep.components = certify_components(m, K, grid, opts.threads);
    rep.components_pass = all_pass(rep.components);
    for (TailSide side : sides) {
        std::vector<double> ts;
        if (t_grid.empty()) {
            ts = default_tail_grid(side, K);
        } else if (sides.size() == 1) {
            ts.assign(t_grid.begin(), t_grid.end());
        } else {
            // Both sides share one list: t < 1 belongs to the lower side.
            for (double t : t_grid) {
                if ((t < 1.0) == (side == TailSide::lower)) ts.push_back(t);
            }
        }
        auto rows = side == TailSide::lower ? verify_lower_tail(m, K, ts, opts)
                                            : verify_upper_tail(m, K, ts, opts);
        rep.rows.insert(rep.rows.end(), rows.begin(), rows.end());
    }
    rep.rows_pass = std::all_of(rep.rows.begin(), rep.rows.end(),
                                [](const TailBoundRow& r) { return r.passed; });
    return rep;
}

} // namespace ostat
