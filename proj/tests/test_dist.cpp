#include <doctest.h>

#include "ostat/dist.hpp"
#include "ostat/error.hpp"
#include "test_support.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace ostat;
using doctest::Approx;

namespace {
const double kInf = std::numeric_limits<double>::infinity();

Distribution two_point() { return Distribution::atomic({{1.0, 0.5}, {2.0, 0.5}}); }
} // namespace

TEST_CASE("cdf closed forms") {
    CHECK(Distribution::uniform01().cdf(0.3) == 0.3);
    CHECK(Distribution::pareto(2.0).cdf(2.0) == Approx(0.75).epsilon(1e-15));
    CHECK(Distribution::exponential(1.0, 2.0).cdf(2.0 * std::log(2.0)) == Approx(0.5).epsilon(1e-15));
    CHECK(Distribution::half_gaussian(1.0).cdf(1.0) == Approx(std::erf(1.0 / std::sqrt(2.0))));
    for (const auto& d : test::builtin_families()) {
        CHECK(d.cdf(-1.0) == 0.0);
        CHECK(d.cdf(1e300) == 1.0);
    }
}

TEST_CASE("cdf of a scaled law is the cdf at t/scale") {
    for (const auto& d : test::builtin_families()) {
        const auto s = d.scaled(3.5);
        for (double t : {0.2, 0.9, 1.7, 3.1, 8.0}) {
            CHECK(s.cdf(t * 3.5) == Approx(d.cdf(t)).epsilon(1e-14));
        }
    }
}

TEST_CASE("survival complements the cdf") {
    for (const auto& d : test::builtin_families()) {
        for (double t : test::log_points(1e-3, 1e3, 5)) {
            CHECK(d.survival(t) + d.cdf(t) == Approx(1.0).epsilon(1e-14));
        }
    }
    // Far tails stay accurate where 1 - cdf would round to zero.
    CHECK(Distribution::exponential(1.0).survival(50.0) == Approx(std::exp(-50.0)).epsilon(1e-14));
}

TEST_CASE("left limits") {
    CHECK(Distribution::uniform01().cdf_left_limit(0.3) == 0.3);
    CHECK(two_point().cdf_left_limit(2.0) == 0.5);
    CHECK(two_point().cdf_left_limit(1.5) == 0.5);
    CHECK(two_point().cdf_left_limit(1.0) == 0.0);
    CHECK(two_point().cdf(1.0) == 0.5);
    CHECK(two_point().cdf(2.0) == 1.0);
}

TEST_CASE("quantile examples") {
    CHECK(Distribution::uniform01().quantile(0.3) == Approx(0.3).epsilon(1e-15));
    CHECK(two_point().quantile(0.5) == 1.0);
    CHECK(two_point().quantile(0.50001) == 2.0);

    // (e^-t + e^-2t)/2 = 0.75  <=>  e^-t = (sqrt(7) - 1)/2; value computed
    // independently with a scalar root finder on the closed form.
    const MixtureCdf mix({{Distribution::exponential(1.0), 1}, {Distribution::exponential(2.0), 1}});
    const double expected = 0.19495017655787056;
    CHECK(mix.quantile(0.25) == Approx(expected).epsilon(1e-12));
    CHECK(-std::log((std::sqrt(7.0) - 1.0) / 2.0) == Approx(expected).epsilon(1e-14));
}

TEST_CASE("quantile conventions at the endpoints") {
    for (const auto& d : test::builtin_families()) {
        CHECK(d.quantile(0.0) == 0.0);
    }
    CHECK(Distribution::exponential(1.0).quantile(1.0) == kInf);
    CHECK(Distribution::pareto(1.0).quantile(1.0) == kInf);
    CHECK(Distribution::half_gaussian(2.0).quantile(1.0) == kInf);
    CHECK(Distribution::uniform01(4.0).quantile(1.0) == 4.0);
    CHECK(two_point().quantile(1.0) == 2.0);
    CHECK_THROWS_AS(Distribution::uniform01().quantile(-0.1), DomainError);
    CHECK_THROWS_AS(Distribution::uniform01().quantile(1.1), DomainError);
    CHECK_THROWS_AS(Distribution::uniform01().quantile(std::nan("")), DomainError);
}

TEST_CASE("monotone cdf on a log grid") {
    for (const auto& d : test::builtin_families()) {
        double prev = 0.0;
        for (double t : test::log_points(1e-6, 1e6, 32)) {
            const double f = d.cdf(t);
            CHECK(f >= prev);
            prev = f;
        }
    }
}

TEST_CASE("quantile satisfies both defining inequalities") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto families = test::builtin_families();
    families.push_back(Distribution::pareto(0.5, 7.0));
    for (const auto& d : families) {
        for (int i = 0; i < 1000; ++i) {
            const double r = unit(gen);
            if (r == 0.0) continue;
            const double q = d.quantile(r);
            CHECK(d.cdf(q) >= r);
            // Continuous laws hit r only up to rounding of the closed form.
            CHECK(d.cdf_left_limit(q) <= r + 1e-14);
        }
    }
}

TEST_CASE("mixture quantile satisfies both defining inequalities") {
    const MixtureCdf mix({{Distribution::exponential(1.0), 2},
                          {Distribution::atomic({{0.5, 0.5}, {3.0, 0.5}}), 1},
                          {Distribution::pareto(1.0, 0.1), 1}});
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double r = unit(gen);
        const double q = mix.quantile(r);
        CHECK(mix.cdf(q) >= r);
        CHECK(mix.cdf_left_limit(q) <= r + 1e-12);
    }
    // Flat stretch of the averaged cdf: levels inside the 0.5-atom jump map to 0.5.
    const double at = mix.cdf_left_limit(0.5);
    CHECK(mix.quantile(at + 0.01) == 0.5);
}

TEST_CASE("quantile is scale equivariant") {
    for (const auto& d : test::builtin_families()) {
        for (double c : {0.01, 2.5, 100.0}) {
            for (double r : {0.05, 0.3, 0.5, 0.77, 0.999}) {
                CHECK(test::rel_close(d.scaled(c).quantile(r), c * d.quantile(r), 1e-10));
            }
        }
    }
}

TEST_CASE("quantile inverts strictly increasing cdfs") {
    const std::vector<Distribution> continuous = {
        Distribution::uniform01(), Distribution::pareto(2.0), Distribution::exponential(0.7),
        Distribution::half_gaussian(1.3), Distribution::exponential(1.0, 1e-3)};
    for (const auto& d : continuous) {
        for (double t : test::log_points(1e-4, 30.0, 8)) {
            const double f = d.cdf(t);
            if (f <= 0.0 || f >= 1.0 - 1e-6) continue;
            CHECK(test::rel_close(d.quantile(f), t, 1e-9));
        }
    }
}

TEST_CASE("piecewise-linear left quantile skips flat stretches") {
    const auto d = Distribution::piecewise_linear({{0.0, 0.0}, {1.0, 0.3}, {2.0, 0.3}, {5.0, 1.0}});
    CHECK(d.cdf(1.5) == Approx(0.3));
    CHECK(d.quantile(0.3) == Approx(1.0));
    CHECK(d.quantile(0.65) == Approx(3.5));
    CHECK(d.quantile(0.15) == Approx(0.5));
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Distribution::uniform01(0.0), DomainError);
    CHECK_THROWS_AS(Distribution::uniform01(-1.0), DomainError);
    CHECK_THROWS_AS(Distribution::pareto(0.0), DomainError);
    CHECK_THROWS_AS(Distribution::exponential(-2.0), DomainError);
    CHECK_THROWS_AS(Distribution::half_gaussian(0.0), DomainError);
    CHECK_THROWS_AS(Distribution::atomic({{1.0, 0.5}}), DomainError);
    CHECK_THROWS_AS(Distribution::atomic({{2.0, 0.5}, {1.0, 0.5}}), DomainError);
    CHECK_THROWS_AS(Distribution::atomic({{-1.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(Distribution::piecewise_linear({{0.0, 0.0}, {1.0, 0.9}}), DomainError);
    CHECK_THROWS_AS(Distribution::piecewise_linear({{0.0, 0.1}, {1.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(Distribution::piecewise_linear({{0.0, 0.0}, {0.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(MixtureCdf({}), DomainError);
}

TEST_CASE("atom at the origin") {
    const auto d = Distribution::atomic({{0.0, 0.4}, {1.0, 0.6}});
    CHECK(d.cdf(0.0) == 0.4);
    CHECK(d.cdf_left_limit(0.0) == 0.0);
    CHECK(d.quantile(0.3) == 0.0);
    CHECK(d.quantile(0.5) == 1.0);
}
