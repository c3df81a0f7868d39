#include "ostat/ostat.h"

#include "ostat/bounds.hpp"
#include "ostat/mc.hpp"
#include "ostat/model_spec.hpp"
#include "ostat/oracle.hpp"
#include "ostat/report_io.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

struct ost_dist {
    ostat::Distribution value;
};

struct ost_model {
    ostat::OrderStatModel value;
};

struct ost_certificate {
    ostat::RegularityCertificate value;
};

struct ost_growth_report {
    ostat::GrowthReport value;
    ost_certificate odds{value.odds};
    ost_certificate tail{value.tail};
};

struct ost_theorem_report {
    ostat::TheoremReport value;
    std::vector<ost_certificate> components;
};

struct ost_tail_report {
    ostat::TailReport value;
};

namespace {

thread_local std::string g_last_error;

ost_status fail(ost_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

// Runs f and translates exceptions into status codes.
template <class F>
ost_status guard(F&& f) {
    try {
        g_last_error.clear();
        f();
        return OST_OK;
    } catch (const ostat::PreconditionError& e) {
        return fail(OST_ERR_PRECONDITION, e.what());
    } catch (const ostat::DomainError& e) {
        return fail(OST_ERR_DOMAIN, e.what());
    } catch (const ostat::RangeError& e) {
        return fail(OST_ERR_RANGE, e.what());
    } catch (const ostat::NotFoundError& e) {
        return fail(OST_ERR_NOT_FOUND, e.what());
    } catch (const ostat::ResourceError& e) {
        return fail(OST_ERR_RESOURCE, e.what());
    } catch (const ostat::ParseError& e) {
        return fail(OST_ERR_PARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(OST_ERR_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return fail(OST_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(OST_ERR_INTERNAL, "unknown error");
    }
}

#define OST_REQUIRE(ptr)                                                  \
    do {                                                                  \
        if ((ptr) == nullptr) return fail(OST_ERR_NULL, #ptr " is null"); \
    } while (0)

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ostat::GridSpec grid_of(const ost_grid* g) {
    if (g == nullptr) return {};
    return {g->t_min, g->t_max, g->points_per_decade};
}

ostat::CheckOptions opts_of(unsigned threads) { return {threads == 0 ? 1u : threads, true}; }

ost_dist* wrap(ostat::Distribution d) { return new ost_dist{std::move(d)}; }

std::vector<double> copy(const double* p, size_t count) {
    if (count > 0 && p == nullptr) throw ostat::DomainError("null array with non-zero length");
    return std::vector<double>(p, p + count);
}

template <class Check>
ost_status run_check(const ost_dist* d, ost_certificate** out, Check&& check) {
    OST_REQUIRE(d);
    OST_REQUIRE(out);
    return guard([&] { *out = new ost_certificate{check(d->value)}; });
}

ost_certificate_info info_of(const ostat::RegularityCertificate& c) {
    ost_certificate_info i{};
    i.inequality = static_cast<ost_inequality>(c.inequality);
    i.K = c.K;
    i.grid = {c.grid.t_min, c.grid.t_max, c.grid.points_per_decade};
    i.ell = c.ell;
    i.gamma = c.gamma;
    i.passed = c.passed;
    i.margin = c.margin;
    i.has_witness = c.witness.has_value();
    if (c.witness) {
        i.witness_t = c.witness->t;
        i.witness_lhs = c.witness->lhs;
        i.witness_rhs = c.witness->rhs;
    }
    i.evaluated = c.evaluated;
    i.point_count = c.points.size();
    return i;
}

} // namespace

extern "C" {

const char* ost_last_error(void) { return g_last_error.c_str(); }

const char* ost_version(void) { return "1.0.0"; }

void ost_string_free(char* s) { std::free(s); }

ost_status ost_dist_uniform01(double scale, ost_dist** out) {
    OST_REQUIRE(out);
    return guard([&] { *out = wrap(ostat::Distribution::uniform01(scale)); });
}

ost_status ost_dist_pareto(double p, double scale, ost_dist** out) {
    OST_REQUIRE(out);
    return guard([&] { *out = wrap(ostat::Distribution::pareto(p, scale)); });
}

ost_status ost_dist_exponential(double rate, double scale, ost_dist** out) {
    OST_REQUIRE(out);
    return guard([&] { *out = wrap(ostat::Distribution::exponential(rate, scale)); });
}

ost_status ost_dist_half_gaussian(double sigma, double scale, ost_dist** out) {
    OST_REQUIRE(out);
    return guard([&] { *out = wrap(ostat::Distribution::half_gaussian(sigma, scale)); });
}

ost_status ost_dist_piecewise_linear(const double* t, const double* F, size_t count, double scale,
                                     ost_dist** out) {
    OST_REQUIRE(out);
    return guard([&] {
        const auto ts = copy(t, count);
        const auto fs = copy(F, count);
        std::vector<ostat::Knot> knots;
        for (size_t i = 0; i < count; ++i) knots.push_back({ts[i], fs[i]});
        *out = wrap(ostat::Distribution::piecewise_linear(std::move(knots), scale));
    });
}

ost_status ost_dist_atomic(const double* values, const double* weights, size_t count, double scale,
                           ost_dist** out) {
    OST_REQUIRE(out);
    return guard([&] {
        const auto vs = copy(values, count);
        const auto ws = copy(weights, count);
        std::vector<ostat::Atom> atoms;
        for (size_t i = 0; i < count; ++i) atoms.push_back({vs[i], ws[i]});
        *out = wrap(ostat::Distribution::atomic(std::move(atoms), scale));
    });
}

ost_status ost_dist_from_json(const char* json, ost_dist** out) {
    OST_REQUIRE(json);
    OST_REQUIRE(out);
    return guard([&] { *out = wrap(ostat::parse_distribution_spec(json)); });
}

void ost_dist_free(ost_dist* d) { delete d; }

ost_status ost_dist_cdf(const ost_dist* d, double t, double* out) {
    OST_REQUIRE(d);
    OST_REQUIRE(out);
    return guard([&] { *out = d->value.cdf(t); });
}

ost_status ost_dist_cdf_left_limit(const ost_dist* d, double t, double* out) {
    OST_REQUIRE(d);
    OST_REQUIRE(out);
    return guard([&] { *out = d->value.cdf_left_limit(t); });
}

ost_status ost_dist_quantile(const ost_dist* d, double r, double* out) {
    OST_REQUIRE(d);
    OST_REQUIRE(out);
    return guard([&] { *out = d->value.quantile(r); });
}

ost_status ost_dist_describe(const ost_dist* d, char** out) {
    OST_REQUIRE(d);
    OST_REQUIRE(out);
    return guard([&] { *out = dup_string(d->value.describe()); });
}

ost_status ost_model_create(const ost_dist* const* components, const size_t* repeats, size_t count,
                            size_t k, ost_model** out) {
    OST_REQUIRE(out);
    if (count > 0) OST_REQUIRE(components);
    return guard([&] {
        std::vector<ostat::ModelComponent> comps;
        for (size_t i = 0; i < count; ++i) {
            if (components[i] == nullptr) throw ostat::DomainError("null component handle");
            comps.push_back({components[i]->value, repeats ? repeats[i] : 1});
        }
        *out = new ost_model{ostat::OrderStatModel(std::move(comps), k)};
    });
}

ost_status ost_model_from_json(const char* json, ost_model** out) {
    OST_REQUIRE(json);
    OST_REQUIRE(out);
    return guard([&] { *out = new ost_model{ostat::parse_model_spec(json)}; });
}

ost_status ost_model_to_json(const ost_model* m, char** out) {
    OST_REQUIRE(m);
    OST_REQUIRE(out);
    return guard([&] { *out = dup_string(ostat::model_to_json(m->value)); });
}

ost_status ost_model_scaled(const ost_model* m, double c, ost_model** out) {
    OST_REQUIRE(m);
    OST_REQUIRE(out);
    return guard([&] { *out = new ost_model{m->value.scaled(c)}; });
}

ost_status ost_model_size(const ost_model* m, size_t* n, size_t* k) {
    OST_REQUIRE(m);
    if (n) *n = m->value.size();
    if (k) *k = m->value.rank();
    return OST_OK;
}

void ost_model_free(ost_model* m) { delete m; }

ost_status ost_kmin_cdf(const ost_model* m, double t, double* out) {
    OST_REQUIRE(m);
    OST_REQUIRE(out);
    return guard([&] { *out = ostat::kmin_cdf(m->value, t); });
}

ost_status ost_kmin_strict_cdf(const ost_model* m, double t, double* out) {
    OST_REQUIRE(m);
    OST_REQUIRE(out);
    return guard([&] { *out = ostat::kmin_strict_cdf(m->value, t); });
}

ost_status ost_kmin_quantile(const ost_model* m, double r, double* out) {
    OST_REQUIRE(m);
    OST_REQUIRE(out);
    return guard([&] { *out = ostat::kmin_quantile(m->value, r); });
}

ost_status ost_kmin_median(const ost_model* m, double* out) {
    OST_REQUIRE(m);
    OST_REQUIRE(out);
    return guard([&] { *out = ostat::kmin_median(m->value); });
}

ost_status ost_kmax_cdf(const ost_model* m, double t, double* out) {
    OST_REQUIRE(m);
    OST_REQUIRE(out);
    return guard([&] { *out = ostat::kmax_cdf(m->value, t); });
}

ost_status ost_averaged_quantile(const ost_model* m, double* out) {
    OST_REQUIRE(m);
    OST_REQUIRE(out);
    return guard([&] { *out = ostat::averaged_quantile(m->value); });
}

ost_status ost_pbin_pmf(const double* p, size_t count, double* out) {
    OST_REQUIRE(out);
    return guard([&] {
        const auto dist = ostat::pbin::pmf(ostat::pbin::SuccessVector(copy(p, count)));
        std::copy(dist.begin(), dist.end(), out);
    });
}

ost_status ost_pbin_tail_at_least(const double* p, size_t count, size_t k, double* out) {
    OST_REQUIRE(out);
    return guard([&] { *out = ostat::pbin::tail_at_least(ostat::pbin::SuccessVector(copy(p, count)), k); });
}

ost_status ost_pbin_brute_force_tail(const double* p, size_t count, size_t k, double* out) {
    OST_REQUIRE(out);
    return guard([&] { *out = ostat::pbin::brute_force_tail(ostat::pbin::SuccessVector(copy(p, count)), k); });
}

ost_status ost_pbin_chebyshev(const double* p, size_t count, double t, double* exact, double* bound) {
    OST_REQUIRE(exact);
    OST_REQUIRE(bound);
    return guard([&] {
        const auto gap = ostat::pbin::chebyshev_bound_gap(ostat::pbin::SuccessVector(copy(p, count)), t);
        *exact = gap.exact;
        *bound = gap.bound;
    });
}

ost_grid ost_grid_default(void) {
    const ostat::GridSpec g;
    return {g.t_min, g.t_max, g.points_per_decade};
}

ost_status ost_check_condition(const ost_dist* d, double K, const ost_grid* grid, unsigned threads,
                               ost_certificate** out) {
    return run_check(d, out, [&](const ostat::Distribution& x) {
        return ostat::check_condition(x, K, grid_of(grid), opts_of(threads));
    });
}

ost_status ost_check_measure_form(const ost_dist* d, double K, const ost_grid* grid,
                                  unsigned threads, ost_certificate** out) {
    return run_check(d, out, [&](const ostat::Distribution& x) {
        return ostat::check_measure_form(x, K, grid_of(grid), opts_of(threads));
    });
}

ost_status ost_check_weak_condition(const ost_dist* d, double K, const ost_grid* grid,
                                    unsigned threads, ost_certificate** out) {
    return run_check(d, out, [&](const ostat::Distribution& x) {
        return ostat::check_weak_condition(x, K, grid_of(grid), opts_of(threads));
    });
}

ost_status ost_check_logconcave_k3(const ost_dist* d, const ost_grid* grid, unsigned threads,
                                   ost_certificate** out) {
    return run_check(d, out, [&](const ostat::Distribution& x) {
        return ostat::check_logconcave_k3(x, grid_of(grid), opts_of(threads));
    });
}

ost_status ost_certificate_info_get(const ost_certificate* c, ost_certificate_info* out) {
    OST_REQUIRE(c);
    OST_REQUIRE(out);
    *out = info_of(c->value);
    return OST_OK;
}

ost_status ost_certificate_point(const ost_certificate* c, size_t i, ost_grid_point* out) {
    OST_REQUIRE(c);
    OST_REQUIRE(out);
    if (i >= c->value.points.size()) return fail(OST_ERR_DOMAIN, "point index out of range");
    const auto& p = c->value.points[i];
    *out = {p.t, p.lhs, p.rhs, p.margin(), p.applicable};
    return OST_OK;
}

ost_status ost_certificate_write(const ost_certificate* c, ost_format format, char** out) {
    OST_REQUIRE(c);
    OST_REQUIRE(out);
    return guard([&] {
        *out = dup_string(format == OST_FORMAT_CSV ? ostat::io::to_csv(c->value)
                                                   : ostat::io::to_json(c->value));
    });
}

void ost_certificate_free(ost_certificate* c) { delete c; }

ost_status ost_find_min_k(const ost_dist* d, const ost_grid* grid, double K_lo, double K_hi,
                          double tol, ost_min_k_result* out) {
    OST_REQUIRE(d);
    OST_REQUIRE(out);
    return guard([&] {
        const auto r = ostat::find_min_K(d->value, grid_of(grid), K_lo, K_hi, tol);
        *out = {r.found, r.K, r.checks, r.monotonicity_assumed};
    });
}

ost_status ost_check_lemma_growth(const ost_dist* d, double K, int ell, double gamma,
                                  const ost_grid* grid, unsigned threads, ost_growth_report** out,
                                  ost_certificate** failed) {
    OST_REQUIRE(d);
    OST_REQUIRE(out);
    if (failed) *failed = nullptr;
    try {
        auto rep = ostat::check_lemma_growth(d->value, K, ell, gamma, grid_of(grid), opts_of(threads));
        *out = new ost_growth_report{rep};
        g_last_error.clear();
        return OST_OK;
    } catch (const ostat::PreconditionError& e) {
        if (failed) *failed = new ost_certificate{e.certificate()};
        return fail(OST_ERR_PRECONDITION, e.what());
    } catch (...) {
        return guard([] { throw; });
    }
}

ost_status ost_growth_passed(const ost_growth_report* r, int* passed) {
    OST_REQUIRE(r);
    OST_REQUIRE(passed);
    *passed = r->value.passed;
    return OST_OK;
}

ost_status ost_growth_certificate(const ost_growth_report* r, int which, const ost_certificate** out) {
    OST_REQUIRE(r);
    OST_REQUIRE(out);
    if (which != 0 && which != 1) return fail(OST_ERR_DOMAIN, "which must be 0 (odds) or 1 (tail)");
    *out = which == 0 ? &r->odds : &r->tail;
    return OST_OK;
}

ost_status ost_growth_write(const ost_growth_report* r, char** json) {
    OST_REQUIRE(r);
    OST_REQUIRE(json);
    return guard([&] { *json = dup_string(ostat::io::to_json(r->value)); });
}

void ost_growth_free(ost_growth_report* r) { delete r; }

ost_status ost_verify_theorem(const ost_model* m, double K, const ost_grid* grid, unsigned threads,
                              ost_theorem_report** out) {
    OST_REQUIRE(m);
    OST_REQUIRE(out);
    return guard([&] {
        auto rep = ostat::verify_theorem(m->value, K, {grid_of(grid), threads == 0 ? 1u : threads});
        auto* h = new ost_theorem_report{std::move(rep), {}};
        for (const auto& c : h->value.components) h->components.push_back({c.certificate});
        *out = h;
    });
}

ost_status ost_theorem_info_get(const ost_theorem_report* r, ost_theorem_info* out) {
    OST_REQUIRE(r);
    OST_REQUIRE(out);
    const auto& v = r->value;
    *out = {v.K, v.n, v.k, v.q, v.med, v.ratio, v.lower, v.upper, v.sandwich_holds,
            v.prob_below_lower, v.prob_at_most_upper, v.one_sided_holds, v.components_pass,
            static_cast<ost_theorem_verdict>(v.verdict), v.components.size()};
    return OST_OK;
}

ost_status ost_theorem_component(const ost_theorem_report* r, size_t i, const ost_certificate** out) {
    OST_REQUIRE(r);
    OST_REQUIRE(out);
    if (i >= r->components.size()) return fail(OST_ERR_DOMAIN, "component index out of range");
    *out = &r->components[i];
    return OST_OK;
}

ost_status ost_theorem_write(const ost_theorem_report* r, char** json) {
    OST_REQUIRE(r);
    OST_REQUIRE(json);
    return guard([&] { *json = dup_string(ostat::io::to_json(r->value)); });
}

void ost_theorem_free(ost_theorem_report* r) { delete r; }

ost_status ost_verify_tails(const ost_model* m, double K, ost_tail_side side, const double* t,
                            size_t count, const ost_grid* grid, double bound_scale, unsigned threads,
                            ost_tail_report** out) {
    OST_REQUIRE(m);
    OST_REQUIRE(out);
    return guard([&] {
        std::vector<ostat::TailSide> sides;
        if (side == OST_TAIL_LOWER || side == OST_TAIL_BOTH) sides.push_back(ostat::TailSide::lower);
        if (side == OST_TAIL_UPPER || side == OST_TAIL_BOTH) sides.push_back(ostat::TailSide::upper);
        if (sides.empty()) throw ostat::DomainError("unknown tail side");
        const auto ts = copy(t, count);
        ostat::TailOptions opts{bound_scale, threads == 0 ? 1u : threads};
        *out = new ost_tail_report{ostat::verify_tails(m->value, K, sides, ts, grid_of(grid), opts)};
    });
}

ost_status ost_tail_info_get(const ost_tail_report* r, ost_tail_info* out) {
    OST_REQUIRE(r);
    OST_REQUIRE(out);
    const auto& v = r->value;
    *out = {v.K, v.q, v.components_pass, v.rows_pass, v.rows.size()};
    return OST_OK;
}

ost_status ost_tail_row_get(const ost_tail_report* r, size_t i, ost_tail_row* out) {
    OST_REQUIRE(r);
    OST_REQUIRE(out);
    if (i >= r->value.rows.size()) return fail(OST_ERR_DOMAIN, "row index out of range");
    const auto& row = r->value.rows[i];
    *out = {row.t,     row.side == ostat::TailSide::lower ? OST_TAIL_LOWER : OST_TAIL_UPPER,
            row.threshold, row.exact_prob, row.bound, row.vacuous, row.passed};
    return OST_OK;
}

ost_status ost_tail_write(const ost_tail_report* r, ost_format format, char** out) {
    OST_REQUIRE(r);
    OST_REQUIRE(out);
    return guard([&] {
        *out = dup_string(format == OST_FORMAT_CSV ? ostat::io::to_csv(r->value.rows)
                                                   : ostat::io::to_json(r->value));
    });
}

void ost_tail_free(ost_tail_report* r) { delete r; }

ost_status ost_sample(const ost_dist* d, double u, double* out) {
    OST_REQUIRE(d);
    OST_REQUIRE(out);
    return guard([&] { *out = ostat::mc::sample(d->value, u); });
}

ost_status ost_kth_smallest(double* values, size_t count, size_t k, double* out) {
    OST_REQUIRE(out);
    if (count > 0) OST_REQUIRE(values);
    return guard([&] { *out = ostat::mc::kth_smallest(std::span<double>(values, count), k); });
}

ost_status ost_simulate_median(const ost_model* m, size_t replicates, uint64_t seed, double ci_level,
                               unsigned threads, ost_sim_result* out) {
    OST_REQUIRE(m);
    OST_REQUIRE(out);
    return guard([&] {
        const auto r = ostat::mc::simulate_median(
            m->value, {replicates, seed, ci_level, threads == 0 ? 1u : threads});
        *out = {r.replicates, r.estimate, r.ci_low, r.ci_high, r.rank_low, r.rank_high,
                r.ci_level,   r.seed,     ostat::mc::kGeneratorName, r.elapsed_seconds};
    });
}

ost_status ost_sim_result_write(const ost_sim_result* r, char** json) {
    OST_REQUIRE(r);
    OST_REQUIRE(json);
    return guard([&] {
        ostat::mc::SimResult s;
        s.replicates = r->replicates;
        s.estimate = r->estimate;
        s.ci_low = r->ci_low;
        s.ci_high = r->ci_high;
        s.rank_low = r->rank_low;
        s.rank_high = r->rank_high;
        s.ci_level = r->ci_level;
        s.seed = r->seed;
        s.generator = r->generator ? r->generator : "";
        s.elapsed_seconds = r->elapsed_seconds;
        *json = dup_string(ostat::io::to_json(s));
    });
}

ost_status ost_run_oracles(uint64_t seed, size_t vectors, ost_oracle_report* out) {
    OST_REQUIRE(out);
    return guard([&] {
        const auto r = ostat::oracle::run_oracles(seed, vectors);
        *out = {r.seed, r.vectors, r.max_tail_discrepancy, r.max_pmf_discrepancy, r.beta_cases,
                r.max_beta_discrepancy, r.passed};
    });
}

} // extern "C"
