#include <doctest.h>

#include "ostat/regularity.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace ostat;
using doctest::Approx;

namespace {

// Direct evaluation of the cross-multiplied condition on a test-side grid;
// used to scan K independently of find_min_K's bisection.
bool condition_holds_on(const Distribution& d, double K, const std::vector<double>& ts) {
    for (double t : ts) {
        const double lhs = d.cdf(K * t) * (1.0 - d.cdf(t));
        const double rhs = 2.0 * d.cdf(t) * (1.0 - d.cdf(K * t));
        if (lhs - rhs < -1e-12) return false;
    }
    return true;
}

double scan_min_K(const Distribution& d) {
    const auto ts = log_grid(GridSpec{});
    for (double K = 1.01; K <= 8.0; K += 5e-4) {
        if (condition_holds_on(d, K, ts)) return K;
    }
    return 0.0;
}

std::vector<std::pair<Distribution, double>> catalogue() {
    return {
        {Distribution::uniform01(), 2.0},
        {Distribution::pareto(0.5), std::pow(2.0, 2.0)},
        {Distribution::pareto(1.0), 2.0},
        {Distribution::pareto(2.0), std::pow(2.0, 0.5)},
        {Distribution::pareto(4.0), std::pow(2.0, 0.25)},
        {Distribution::exponential(1.0), 3.0},
        {Distribution::half_gaussian(1.0), 3.0},
    };
}

const GridSpec kAroundTenth{0.09, 0.1, 1};

} // namespace

TEST_CASE("log grid layout") {
    const auto ts = log_grid(GridSpec{});
    CHECK(ts.size() == 12 * 64 + 1);
    CHECK(ts.front() == 1e-6);
    CHECK(ts.back() == 1e6);
    CHECK(ts[64] == Approx(1e-5).epsilon(1e-14));
    CHECK_THROWS_AS(log_grid(GridSpec{1.0, 1.0, 64}), DomainError);
    CHECK_THROWS_AS(log_grid(GridSpec{0.0, 1.0, 64}), DomainError);
    CHECK_THROWS_AS(log_grid(GridSpec{1e-3, 1.0, 0}), DomainError);
}

TEST_CASE("condition examples") {
    CHECK(check_condition(Distribution::uniform01(), 2.0).passed);
    CHECK(check_condition(Distribution::pareto(1.0), 2.0).passed);

    const auto c = check_condition(Distribution::uniform01(), 1.5, kAroundTenth);
    CHECK_FALSE(c.passed);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->t == Approx(0.1));
    // 0.15 * 0.9 against 2 * 0.1 * 0.85.
    CHECK(c.witness->lhs == Approx(0.135));
    CHECK(c.witness->rhs == Approx(0.17));
    CHECK(c.margin == Approx(-0.035));

    CHECK_THROWS_AS(check_condition(Distribution::uniform01(), 1.0), DomainError);
    CHECK_THROWS_AS(check_condition(Distribution::uniform01(), 0.5), DomainError);
    CHECK_THROWS_AS(check_condition(Distribution::uniform01(), 2.0, GridSpec{2.0, 1.0, 4}), DomainError);
}

TEST_CASE("certificate invariants") {
    for (auto [d, K] : catalogue()) {
        for (double k : {1.5, K}) {
            const auto c = check_condition(d, k);
            CHECK(c.passed == (c.margin >= -kMarginTolerance));
            CHECK(c.witness.has_value() == !c.passed);
            CHECK(c.evaluated == c.points.size());
        }
    }
    const auto quiet = check_condition(Distribution::uniform01(), 2.0, {}, {1, false});
    CHECK(quiet.points.empty());
    CHECK(quiet.evaluated > 769);
}

TEST_CASE("breakpoints join the evaluation grid") {
    const auto d = Distribution::atomic({{1.0, 0.5}, {3.0, 0.5}}, 2.0);
    const auto c = check_condition(d, 2.0);
    auto has = [&](double t) {
        for (const auto& p : c.points) if (p.t == t) return true;
        return false;
    };
    CHECK(has(2.0));
    CHECK(has(std::nextafter(6.0, 0.0)));
    CHECK(has(3.0));  // 6 / K
}

TEST_CASE("measure form examples") {
    const auto a = check_condition(Distribution::uniform01(), 2.0);
    const auto b = check_measure_form(Distribution::uniform01(), 2.0);
    CHECK(b.passed);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK((a.points[i].margin() >= -kMarginTolerance) == (b.points[i].margin() >= -kMarginTolerance));
    }
    CHECK(check_measure_form(Distribution::exponential(1.0), 3.0).passed);
    const auto f = check_measure_form(Distribution::uniform01(), 1.5, kAroundTenth);
    CHECK_FALSE(f.passed);
    CHECK(f.witness->t == Approx(0.1));
}

TEST_CASE("condition and measure form agree pointwise") {
    auto families = test::builtin_families();
    for (auto [d, K] : catalogue()) families.push_back(d);
    for (const auto& d : families) {
        for (double K : {1.5, 2.0, 3.0}) {
            const auto a = check_condition(d, K);
            const auto b = check_measure_form(d, K);
            REQUIRE(a.points.size() == b.points.size());
            int mismatches = 0;
            for (std::size_t i = 0; i < a.points.size(); ++i) {
                mismatches += (a.points[i].margin() >= -kMarginTolerance) !=
                              (b.points[i].margin() >= -kMarginTolerance);
            }
            CHECK(mismatches == 0);
            CHECK(a.passed == b.passed);
        }
    }
}

TEST_CASE("condition verdict is scale invariant") {
    auto families = test::builtin_families();
    for (const auto& d : families) {
        for (double K : {1.5, 2.0, 3.0}) {
            const bool base = check_condition(d, K).passed;
            for (double s : {0.01, 100.0}) {
                CHECK(check_condition(d.scaled(s), K).passed == base);
            }
        }
    }
}

TEST_CASE("min K search") {
    const GridSpec grid;
    auto u = find_min_K(Distribution::uniform01(), grid, 1.01, 8.0, 1e-3);
    CHECK(u.found);
    CHECK(u.monotonicity_assumed);
    CHECK(u.K == Approx(2.0).epsilon(2e-3));
    CHECK(u.K == Approx(scan_min_K(Distribution::uniform01())).epsilon(2e-3));

    auto p = find_min_K(Distribution::pareto(2.0), grid, 1.01, 8.0, 1e-3);
    CHECK(p.found);
    CHECK(p.K == Approx(std::sqrt(2.0)).epsilon(2e-3));
    CHECK(p.K == Approx(scan_min_K(Distribution::pareto(2.0))).epsilon(2e-3));

    auto e = find_min_K(Distribution::exponential(1.0), grid, 1.01, 8.0, 1e-3);
    CHECK(e.found);
    CHECK(e.K <= 3.0);
    CHECK(e.K == Approx(scan_min_K(Distribution::exponential(1.0))).epsilon(2e-3));

    auto none = find_min_K(Distribution::pareto(0.1), grid, 1.01, 8.0, 1e-3);
    CHECK_FALSE(none.found);

    CHECK_THROWS_AS(find_min_K(Distribution::uniform01(), grid, 1.0, 8.0, 1e-3), DomainError);
    CHECK_THROWS_AS(find_min_K(Distribution::uniform01(), grid, 3.0, 2.0, 1e-3), DomainError);
    CHECK_THROWS_AS(find_min_K(Distribution::uniform01(), grid, 1.1, 2.0, 0.0), DomainError);
}

TEST_CASE("weak condition examples") {
    CHECK(check_weak_condition(Distribution::uniform01(), 2.0).passed);
    CHECK(check_weak_condition(Distribution::exponential(1.0), 3.0).passed);
    const auto point = check_weak_condition(Distribution::atomic({{1.0, 1.0}}), 2.0);
    CHECK(point.passed);
    // Points with F(t) > 1/2 are outside the inequality's scope.
    for (const auto& p : point.points) {
        if (p.t >= 1.0) CHECK_FALSE(p.applicable);
    }
    CHECK_THROWS_AS(check_weak_condition(Distribution::uniform01(), 1.0), DomainError);
}

TEST_CASE("lemma growth examples") {
    auto a = check_lemma_growth(Distribution::uniform01(), 2.0, 1, 0.5);
    CHECK(a.passed);
    auto b = check_lemma_growth(Distribution::exponential(1.0), 3.0, 5, std::pow(2.0, -2.5));
    CHECK(b.passed);
    auto c = check_lemma_growth(Distribution::pareto(1.0), 2.0, 3, 0.25);
    CHECK(c.passed);
    CHECK(c.odds.inequality == Inequality::growth_odds);
    CHECK(c.tail.inequality == Inequality::growth_tail);
    CHECK(c.tail.ell == 3);
    CHECK(c.tail.gamma == 0.25);
}

TEST_CASE("lemma growth oracle for Pareto p=1, K=2, l=3, gamma=1/4") {
    // F(t) = 1 - 1/t on t >= 1. Direct evaluation of both inequalities on a
    // test-side grid; the library must agree on every shared point.
    auto F = [](double t) { return t < 1.0 ? 0.0 : 1.0 - 1.0 / t; };
    const double step = 8.0;
    for (double t : test::log_points(1e-3, 1e6, 16)) {
        CHECK(F(t) - 8.0 * (1.0 - F(t)) * F(t / step) >= -1e-12);
        if (F(t) >= 0.75) CHECK((1.0 - F(t / step)) - 8.0 / 3.0 * (1.0 - F(t)) >= -1e-12);
    }
}

TEST_CASE("lemma growth precondition") {
    try {
        check_lemma_growth(Distribution::uniform01(), 1.5, 2, 0.5);
        FAIL("expected a precondition failure");
    } catch (const PreconditionError& e) {
        CHECK_FALSE(e.certificate().passed);
        CHECK(e.certificate().inequality == Inequality::condition);
        CHECK(e.certificate().K == 1.5);
    }
    CHECK_THROWS_AS(check_lemma_growth(Distribution::uniform01(), 2.0, 0, 0.5), DomainError);
    CHECK_THROWS_AS(check_lemma_growth(Distribution::uniform01(), 2.0, 1, 1.0), DomainError);
}

TEST_CASE("condition implies weak condition and growth inequalities") {
    for (auto [d, K] : catalogue()) {
        REQUIRE(check_condition(d, K).passed);
        CHECK(check_weak_condition(d, K).passed);
        for (int ell : {1, 3, 5, 8}) {
            for (double gamma : {std::pow(2.0, -ell / 2.0), 0.25, 0.9}) {
                CHECK(check_lemma_growth(d, K, ell, gamma).passed);
            }
        }
    }
}

TEST_CASE("log-concave families at K = 3") {
    CHECK(check_logconcave_k3(Distribution::exponential(1.0)).passed);
    CHECK(check_logconcave_k3(Distribution::half_gaussian(1.0)).passed);
    CHECK(check_logconcave_k3(Distribution::uniform01()).passed);
    CHECK(check_logconcave_k3(Distribution::half_gaussian(0.01, 50.0)).passed);
    CHECK_THROWS_AS(check_logconcave_k3(Distribution::pareto(1.0)), DomainError);
}

TEST_CASE("verdicts do not depend on the thread count") {
    const auto d = Distribution::half_gaussian(1.0);
    const auto one = check_condition(d, 3.0, {}, {1, true});
    const auto four = check_condition(d, 3.0, {}, {4, true});
    CHECK(one == four);
}
