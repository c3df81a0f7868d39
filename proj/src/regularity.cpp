#include "ostat/regularity.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ostat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_K(double K) {
    if (!(K > 1.0) || !std::isfinite(K)) {
        throw DomainError("K must be a finite number greater than 1");
    }
}

// Log grid plus each breakpoint b * mult and its two neighbouring doubles.
std::vector<double> evaluation_points(const Distribution& d, const GridSpec& grid,
                                      std::initializer_list<double> multipliers) {
    auto pts = log_grid(grid);
    for (double b : d.breakpoints()) {
        for (double mult : multipliers) {
            const double x = b * mult;
            for (double v : {std::nextafter(x, 0.0), x, std::nextafter(x, kInf)}) {
                if (v >= grid.t_min && v <= grid.t_max) pts.push_back(v);
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

template <class Eval>
RegularityCertificate certify(Inequality form, double K, const GridSpec& grid,
                              const std::vector<double>& ts, const CheckOptions& opts,
                              Eval&& eval) {
    std::vector<GridPoint> points(ts.size());
    detail::parallel_for(ts.size(), opts.threads, [&](std::size_t i) { points[i] = eval(ts[i]); });

    RegularityCertificate cert;
    cert.inequality = form;
    cert.K = K;
    cert.grid = grid;
    cert.margin = kInf;
    const GridPoint* worst = nullptr;
    for (const auto& p : points) {
        if (!p.applicable) continue;
        ++cert.evaluated;
        if (p.margin() < cert.margin) {
            cert.margin = p.margin();
            worst = &p;
        }
    }
    cert.passed = cert.margin >= -kMarginTolerance;
    if (!cert.passed) {
        cert.witness = Witness{worst->t, worst->lhs, worst->rhs};
    }
    if (opts.keep_points) {
        cert.points = std::move(points);
    }
    return cert;
}

} // namespace

std::vector<double> log_grid(const GridSpec& grid) {
    if (!(grid.t_min > 0.0) || !(grid.t_max > grid.t_min) || !std::isfinite(grid.t_max) ||
        grid.points_per_decade < 1) {
        throw DomainError("grid needs 0 < t_min < t_max and at least one point per decade");
    }
    const double decades = std::log10(grid.t_max / grid.t_min);
    const auto steps = static_cast<std::size_t>(std::ceil(decades * grid.points_per_decade - 1e-9));
    std::vector<double> ts;
    ts.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        const double t = grid.t_min * std::pow(10.0, static_cast<double>(i) / grid.points_per_decade);
        ts.push_back(std::min(t, grid.t_max));
    }
    ts.back() = grid.t_max;
    return ts;
}

std::string_view to_string(Inequality form) {
    switch (form) {
    case Inequality::condition: return "condition";
    case Inequality::measure_form: return "measure_form";
    case Inequality::weak: return "weak";
    case Inequality::growth_odds: return "growth_odds";
    case Inequality::growth_tail: return "growth_tail";
    }
    return "unknown";
}

Inequality inequality_from_string(std::string_view name) {
    for (auto f : {Inequality::condition, Inequality::measure_form, Inequality::weak,
                   Inequality::growth_odds, Inequality::growth_tail}) {
        if (to_string(f) == name) return f;
    }
    throw ParseError("unknown inequality '" + std::string(name) + "'");
}

RegularityCertificate check_condition(const Distribution& d, double K, const GridSpec& grid,
                                      const CheckOptions& opts) {
    require_K(K);
    const auto ts = evaluation_points(d, grid, {1.0, 1.0 / K});
    return certify(Inequality::condition, K, grid, ts, opts, [&](double t) {
        const double f = d.cdf(t);
        const double s = d.survival(t);
        const double fk = d.cdf(K * t);
        const double sk = d.survival(K * t);
        return GridPoint{t, fk * s, 2.0 * f * sk};
    });
}

RegularityCertificate check_measure_form(const Distribution& d, double K, const GridSpec& grid,
                                         const CheckOptions& opts) {
    require_K(K);
    const auto ts = evaluation_points(d, grid, {1.0, 1.0 / K});
    return certify(Inequality::measure_form, K, grid, ts, opts, [&](double t) {
        const double f = d.cdf(t);
        const double fk = d.cdf(K * t);
        const double sk = d.survival(K * t);
        return GridPoint{t, fk - f, f * sk};
    });
}

RegularityCertificate check_weak_condition(const Distribution& d, double K, const GridSpec& grid,
                                           const CheckOptions& opts) {
    require_K(K);
    const double K2 = K * K;
    const auto ts = evaluation_points(d, grid, {1.0, K2});
    return certify(Inequality::weak, K, grid, ts, opts, [&](double t) {
        const double f = d.cdf(t);
        return GridPoint{t, f, 2.0 * d.cdf(t / K2), f <= 0.5};
    });
}

MinKResult find_min_K(const Distribution& d, const GridSpec& grid, double K_lo, double K_hi,
                      double tol, const CheckOptions& opts) {
    if (!(K_lo > 1.0 && K_hi > K_lo) || !std::isfinite(K_hi)) {
        throw DomainError("K range must satisfy 1 < K_lo < K_hi");
    }
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    CheckOptions quiet = opts;
    quiet.keep_points = false;
    MinKResult res;
    res.K_lo = K_lo;
    res.K_hi = K_hi;
    res.tol = tol;
    auto passes = [&](double K) {
        ++res.checks;
        return check_condition(d, K, grid, quiet).passed;
    };
    if (!passes(K_hi)) {
        return res;
    }
    res.found = true;
    if (passes(K_lo)) {
        res.K = K_lo;
        return res;
    }
    double lo = K_lo;
    double hi = K_hi;
    while (hi - lo > tol) {
        const double mid = lo + (hi - lo) / 2;
        if (passes(mid)) hi = mid;
        else lo = mid;
    }
    res.K = hi;
    return res;
}

GrowthReport check_lemma_growth(const Distribution& d, double K, int ell, double gamma,
                                const GridSpec& grid, const CheckOptions& opts) {
    require_K(K);
    if (ell < 1) {
        throw DomainError("ell must be at least 1");
    }
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw DomainError("gamma must lie in (0, 1)");
    }
    auto pre = check_condition(d, K, grid, opts);
    if (!pre.passed) {
        throw PreconditionError("distribution fails the regularity condition at K=" +
                                    std::to_string(K) + " on the grid",
                                std::move(pre));
    }
    const double step = std::pow(K, ell);
    const double two_l = std::ldexp(1.0, ell);
    const double tail_factor = two_l / (two_l * gamma + 1.0);
    const auto ts = evaluation_points(d, grid, {1.0, step});

    GrowthReport report;
    report.K = K;
    report.ell = ell;
    report.gamma = gamma;
    report.odds = certify(Inequality::growth_odds, K, grid, ts, opts, [&](double t) {
        return GridPoint{t, d.cdf(t), two_l * d.survival(t) * d.cdf(t / step)};
    });
    report.tail = certify(Inequality::growth_tail, K, grid, ts, opts, [&](double t) {
        return GridPoint{t, d.survival(t / step), tail_factor * d.survival(t),
                         d.cdf(t) >= 1.0 - gamma};
    });
    report.odds.ell = report.tail.ell = ell;
    report.odds.gamma = report.tail.gamma = gamma;
    report.passed = report.odds.passed && report.tail.passed;
    return report;
}

RegularityCertificate check_logconcave_k3(const Distribution& d, const GridSpec& grid,
                                          const CheckOptions& opts) {
    const auto& fam = d.family();
    if (!std::holds_alternative<Exponential>(fam) && !std::holds_alternative<HalfGaussian>(fam) &&
        !std::holds_alternative<Uniform01>(fam)) {
        throw DomainError("log-concave check covers exponential, half_gaussian and uniform01 only");
    }
    return check_condition(d, 3.0, grid, opts);
}

} // namespace ostat
