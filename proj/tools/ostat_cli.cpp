// Command-line front end. Talks to the library only through ostat.h.
#include "ostat/ostat.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

// Library error, already described by ost_last_error().
struct ApiError {
    ost_status status;
    std::string message;
};

// Bad user input detected by the CLI itself.
struct UsageError {
    std::string message;
};

void check(ost_status s) {
    if (s != OST_OK) throw ApiError{s, ost_last_error()};
}

std::string real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

// Non-finite values become strings, as in the library's reports.
std::string json_real(double v) { return std::isfinite(v) ? real(v) : quoted(real(v)); }

std::string take(char* s) {
    std::string out = s ? s : "";
    ost_string_free(s);
    return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Free(p); }
};

using Dist = Handle<ost_dist, ost_dist_free>;
using Model = Handle<ost_model, ost_model_free>;
using Certificate = Handle<ost_certificate, ost_certificate_free>;
using Growth = Handle<ost_growth_report, ost_growth_free>;
using Theorem = Handle<ost_theorem_report, ost_theorem_free>;
using Tails = Handle<ost_tail_report, ost_tail_free>;

struct Global {
    std::string format = "table";
    std::string out;
    unsigned threads = 1;
    std::uint64_t seed = 0;
    std::string grid;
    std::string model;
};

// Component given on the command line as --family/--param/--scale or as a
// single JSON object via --component.
struct ComponentArgs {
    std::string family;
    std::vector<std::string> params;
    double scale = 1.0;
    std::string json;

    void add(CLI::App* sub) {
        sub->add_option("--family", family, "distribution family");
        sub->add_option("--param", params, "family parameter NAME=VALUE (repeatable)");
        sub->add_option("--scale", scale, "scale factor")->check(CLI::PositiveNumber);
        sub->add_option("--component", json,
                        "component object in model-spec syntax, e.g. "
                        "'{\"family\":\"atomic\",\"params\":{\"atoms\":[[1,0.5],[2,0.5]]}}'");
    }

    bool given() const { return !family.empty() || !json.empty(); }

    std::string to_json() const {
        if (!json.empty()) {
            if (!family.empty() || !params.empty()) {
                throw UsageError{"--component cannot be combined with --family/--param"};
            }
            return json;
        }
        if (family.empty()) throw UsageError{"one of --family or --component is required"};
        std::string j = "{\"family\":" + quoted(family) + ",\"params\":{";
        for (std::size_t i = 0; i < params.size(); ++i) {
            const auto eq = params[i].find('=');
            if (eq == std::string::npos || eq == 0) {
                throw UsageError{"--param expects NAME=VALUE, got '" + params[i] + "'"};
            }
            const std::string value = params[i].substr(eq + 1);
            char* end = nullptr;
            std::strtod(value.c_str(), &end);
            if (value.empty() || *end != '\0') {
                throw UsageError{"--param value must be a number, got '" + value + "'"};
            }
            j += (i ? "," : "") + quoted(params[i].substr(0, eq)) + ":" + value;
        }
        return j + "},\"scale\":" + real(scale) + "}";
    }

    void load(Dist& d) const { check(ost_dist_from_json(to_json().c_str(), &d.p)); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError{"cannot read model file '" + path + "'"};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void load_model(const Global& g, Model& m) {
    if (g.model.empty()) throw UsageError{"--model PATH is required"};
    check(ost_model_from_json(read_file(g.model).c_str(), &m.p));
}

ost_grid parse_grid(const std::string& spec) {
    if (spec.empty()) return ost_grid_default();
    ost_grid g{};
    char tail = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d%c", &g.t_min, &g.t_max, &g.points_per_decade, &tail) != 3) {
        throw UsageError{"--grid expects TMIN:TMAX:PPD, got '" + spec + "'"};
    }
    return g;
}

std::pair<double, double> parse_range(const std::string& spec) {
    double lo = 0, hi = 0;
    char tail = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf%c", &lo, &hi, &tail) != 2) {
        throw UsageError{"--K-range expects LO:HI, got '" + spec + "'"};
    }
    return {lo, hi};
}

// Human-readable key/value block.
class Table {
public:
    Table& row(const std::string& key, const std::string& value) {
        rows_.emplace_back(key, value);
        return *this;
    }
    std::string str() const {
        std::size_t w = 0;
        for (const auto& r : rows_) w = std::max(w, r.first.size());
        std::string out;
        for (const auto& [k, v] : rows_) out += k + std::string(w - k.size() + 2, ' ') + v + "\n";
        return out;
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

const char* inequality_name(ost_inequality i) {
    switch (i) {
    case OST_INEQ_CONDITION: return "condition";
    case OST_INEQ_MEASURE_FORM: return "measure_form";
    case OST_INEQ_WEAK: return "weak";
    case OST_INEQ_GROWTH_ODDS: return "growth_odds";
    case OST_INEQ_GROWTH_TAIL: return "growth_tail";
    }
    return "unknown";
}

const char* verdict_name(ost_theorem_verdict v) {
    switch (v) {
    case OST_VERDICT_PASS: return "pass";
    case OST_VERDICT_FAIL: return "fail";
    case OST_VERDICT_PRECONDITION_FAILED: return "precondition-failed";
    }
    return "unknown";
}

const char* kScopeNote = "grid evidence: necessary, not a proof for all t > 0";

void certificate_table(Table& t, const ost_certificate* c) {
    ost_certificate_info i{};
    check(ost_certificate_info_get(c, &i));
    t.row("inequality", inequality_name(i.inequality)).row("K", real(i.K));
    if (i.inequality == OST_INEQ_GROWTH_ODDS || i.inequality == OST_INEQ_GROWTH_TAIL) {
        t.row("ell", std::to_string(i.ell)).row("gamma", real(i.gamma));
    }
    t.row("grid", real(i.grid.t_min) + ":" + real(i.grid.t_max) + ":" + std::to_string(i.grid.points_per_decade));
    t.row("points", std::to_string(i.evaluated));
    t.row("margin", real(i.margin));
    if (i.has_witness) {
        t.row("witness t", real(i.witness_t))
            .row("witness lhs", real(i.witness_lhs))
            .row("witness rhs", real(i.witness_rhs));
    }
    t.row("verdict", i.passed ? "pass" : "fail");
}

std::string certificate_output(const Global& g, const ost_certificate* c) {
    if (g.format == "table") {
        Table t;
        certificate_table(t, c);
        return t.row("scope", kScopeNote).str();
    }
    char* s = nullptr;
    check(ost_certificate_write(c, g.format == "csv" ? OST_FORMAT_CSV : OST_FORMAT_JSON, &s));
    return take(s);
}

bool certificate_passed(const ost_certificate* c) {
    ost_certificate_info i{};
    check(ost_certificate_info_get(c, &i));
    return i.passed != 0;
}

struct Outcome {
    std::string text;
    int code = kPass;
    std::string note;  // extra line for standard error

    Outcome() = default;
    Outcome(std::string t) : text(std::move(t)) {}
};

// ---- subcommands ----------------------------------------------------------

struct CheckArgs {
    ComponentArgs comp;
    double K = 0;
    std::string form = "condition";
    int ell = 1;
    double gamma = 0.5;
};

Outcome run_check(const Global& g, const CheckArgs& a) {
    Dist d;
    a.comp.load(d);
    const ost_grid grid = parse_grid(g.grid);
    Certificate c;
    if (a.form == "logconcave-k3") {
        check(ost_check_logconcave_k3(d.p, &grid, g.threads, &c.p));
    } else if (a.K == 0) {
        throw UsageError{"--K is required"};
    } else if (a.form == "condition") {
        check(ost_check_condition(d.p, a.K, &grid, g.threads, &c.p));
    } else if (a.form == "measure") {
        check(ost_check_measure_form(d.p, a.K, &grid, g.threads, &c.p));
    } else if (a.form == "weak") {
        check(ost_check_weak_condition(d.p, a.K, &grid, g.threads, &c.p));
    } else {
        Growth r;
        Certificate failed;
        const ost_status s = ost_check_lemma_growth(d.p, a.K, a.ell, a.gamma, &grid, g.threads, &r.p, &failed.p);
        if (s == OST_ERR_PRECONDITION) {
            Outcome o;
            o.code = kFail;
            o.note = "precondition-failed: the regularity condition does not hold at this K";
            if (g.format == "table") {
                Table t;
                t.row("verdict", "precondition-failed");
                certificate_table(t, failed.p);
                o.text = t.str();
            } else {
                o.text = certificate_output(g, failed.p);
            }
            return o;
        }
        check(s);
        int passed = 0;
        check(ost_growth_passed(r.p, &passed));
        const ost_certificate* odds = nullptr;
        const ost_certificate* tail = nullptr;
        check(ost_growth_certificate(r.p, 0, &odds));
        check(ost_growth_certificate(r.p, 1, &tail));
        Outcome o;
        o.code = passed ? kPass : kFail;
        if (g.format == "json") {
            char* s2 = nullptr;
            check(ost_growth_write(r.p, &s2));
            o.text = take(s2);
        } else if (g.format == "csv") {
            // Odds-form rows, then tail-form rows, under one header.
            const std::string first = certificate_output(g, odds);
            std::string second = certificate_output(g, tail);
            second.erase(0, second.find('\n') + 1);
            o.text = first + second;
        } else {
            Table t;
            certificate_table(t, odds);
            certificate_table(t, tail);
            t.row("overall", passed ? "pass" : "fail");
            o.text = t.row("scope", kScopeNote).str();
        }
        return o;
    }
    Outcome o;
    o.text = certificate_output(g, c.p);
    o.code = certificate_passed(c.p) ? kPass : kFail;
    return o;
}

struct MinKArgs {
    ComponentArgs comp;
    std::string range = "1.01:8";
    double tol = 1e-3;
};

Outcome run_min_k(const Global& g, const MinKArgs& a) {
    Dist d;
    a.comp.load(d);
    const ost_grid grid = parse_grid(g.grid);
    const auto [lo, hi] = parse_range(a.range);
    ost_min_k_result r{};
    check(ost_find_min_k(d.p, &grid, lo, hi, a.tol, &r));
    Outcome o;
    o.code = r.found ? kPass : kFail;
    if (g.format == "json") {
        o.text = "{\"found\":" + std::string(r.found ? "true" : "false") + ",\"K\":" + json_real(r.K) +
                 ",\"K_lo\":" + json_real(lo) + ",\"K_hi\":" + json_real(hi) + ",\"tol\":" + json_real(a.tol) +
                 ",\"checks\":" + std::to_string(r.checks) + ",\"monotonicity_assumed\":" +
                 (r.monotonicity_assumed ? "true" : "false") + "}\n";
    } else if (g.format == "csv") {
        o.text = "found,K,K_lo,K_hi,tol,checks\n" + std::string(r.found ? "true" : "false") + "," + real(r.K) +
                 "," + real(lo) + "," + real(hi) + "," + real(a.tol) + "," + std::to_string(r.checks) + "\n";
    } else {
        Table t;
        t.row("found", r.found ? "yes" : "no")
            .row("K", r.found ? real(r.K) : "none in range")
            .row("range", real(lo) + ":" + real(hi))
            .row("tolerance", real(a.tol))
            .row("checks", std::to_string(r.checks))
            .row("assumption", "condition monotone in K");
        o.text = t.str();
    }
    return o;
}

struct Field {
    std::string key;
    std::string value;
    bool text = false;  // quoted in JSON
};

std::string scalar_output(const Global& g, const std::vector<Field>& fields) {
    if (g.format == "json") {
        std::string s = "{";
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const auto& f = fields[i];
            s += (i ? "," : "") + quoted(f.key) + ":" + (f.text ? quoted(f.value) : f.value);
        }
        return s + "}\n";
    }
    if (g.format == "csv") {
        std::string head, row;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            head += (i ? "," : "") + fields[i].key;
            row += (i ? "," : "") + fields[i].value;
        }
        return head + "\n" + row + "\n";
    }
    Table t;
    for (const auto& f : fields) t.row(f.key, f.value);
    return t.str();
}

Outcome run_median(const Global& g) {
    Model m;
    load_model(g, m);
    std::size_t n = 0, k = 0;
    check(ost_model_size(m.p, &n, &k));
    double med = 0, q = 0;
    check(ost_kmin_median(m.p, &med));
    check(ost_averaged_quantile(m.p, &q));
    return {scalar_output(g, {{"n", std::to_string(n)},
                              {"k", std::to_string(k)},
                              {"median", real(med)},
                              {"q", real(q)},
                              {"convention", "left", true}})};
}

struct QuantileArgs {
    ComponentArgs comp;
    double r = 0.5;
};

Outcome run_quantile(const Global& g, const QuantileArgs& a) {
    double v = 0;
    if (a.comp.given()) {
        if (!g.model.empty()) throw UsageError{"use either --model or a single distribution, not both"};
        Dist d;
        a.comp.load(d);
        check(ost_dist_quantile(d.p, a.r, &v));
        return {scalar_output(g, {{"r", real(a.r)}, {"quantile", real(v)}, {"convention", "left", true}})};
    }
    Model m;
    load_model(g, m);
    check(ost_kmin_quantile(m.p, a.r, &v));
    std::size_t n = 0, k = 0;
    check(ost_model_size(m.p, &n, &k));
    return {scalar_output(g, {{"n", std::to_string(n)},
                              {"k", std::to_string(k)},
                              {"r", real(a.r)},
                              {"quantile", real(v)},
                              {"convention", "left", true}})};
}

Outcome run_theorem(const Global& g, double K) {
    Model m;
    load_model(g, m);
    const ost_grid grid = parse_grid(g.grid);
    Theorem r;
    check(ost_verify_theorem(m.p, K, &grid, g.threads, &r.p));
    ost_theorem_info i{};
    check(ost_theorem_info_get(r.p, &i));
    Outcome o;
    o.code = i.verdict == OST_VERDICT_PASS ? kPass : kFail;
    if (i.verdict == OST_VERDICT_PRECONDITION_FAILED) {
        o.note = "precondition-failed: some component fails the regularity condition at this K";
    } else if (i.verdict == OST_VERDICT_FAIL) {
        o.note = "fail: the median lies outside [K^-10 q, K^13 q]";
    }
    if (g.format == "json") {
        char* s = nullptr;
        check(ost_theorem_write(r.p, &s));
        o.text = take(s);
    } else if (g.format == "csv") {
        o.text = scalar_output(g, {{"K", real(i.K)},
                                   {"n", std::to_string(i.n)},
                                   {"k", std::to_string(i.k)},
                                   {"q", real(i.q)},
                                   {"med", real(i.med)},
                                   {"ratio", real(i.ratio)},
                                   {"lower", real(i.lower)},
                                   {"upper", real(i.upper)},
                                   {"prob_below_lower", real(i.prob_below_lower)},
                                   {"prob_at_most_upper", real(i.prob_at_most_upper)},
                                   {"verdict", verdict_name(i.verdict), true}});
    } else {
        Table t;
        t.row("K", real(i.K))
            .row("n", std::to_string(i.n))
            .row("k", std::to_string(i.k))
            .row("q (left)", real(i.q))
            .row("median", real(i.med))
            .row("ratio", real(i.ratio))
            .row("lower", real(i.lower))
            .row("upper", real(i.upper))
            .row("P(k-min < lower q)", real(i.prob_below_lower))
            .row("P(k-min <= upper q)", real(i.prob_at_most_upper))
            .row("components", std::to_string(i.component_count) + (i.components_pass ? " pass" : " FAIL"));
        for (std::size_t c = 0; c < i.component_count; ++c) {
            const ost_certificate* cert = nullptr;
            check(ost_theorem_component(r.p, c, &cert));
            if (!certificate_passed(cert)) {
                ost_certificate_info ci{};
                check(ost_certificate_info_get(cert, &ci));
                t.row("  component " + std::to_string(c),
                      "fails at t=" + real(ci.witness_t) + " (margin " + real(ci.margin) + ")");
            }
        }
        o.text = t.row("verdict", verdict_name(i.verdict)).str();
    }
    return o;
}

struct TailArgs {
    double K = 0;
    std::string side = "both";
    std::vector<double> t;
    double override_bound = 1.0;
};

Outcome run_tails(const Global& g, const TailArgs& a) {
    Model m;
    load_model(g, m);
    const ost_grid grid = parse_grid(g.grid);
    const ost_tail_side side = a.side == "lower" ? OST_TAIL_LOWER : a.side == "upper" ? OST_TAIL_UPPER : OST_TAIL_BOTH;
    Tails r;
    check(ost_verify_tails(m.p, a.K, side, a.t.empty() ? nullptr : a.t.data(), a.t.size(), &grid,
                           a.override_bound, g.threads, &r.p));
    ost_tail_info i{};
    check(ost_tail_info_get(r.p, &i));
    Outcome o;
    o.code = i.rows_pass && i.components_pass ? kPass : kFail;
    if (!i.components_pass) {
        o.note = "precondition-failed: some component fails the regularity condition at this K";
    } else if (!i.rows_pass) {
        o.note = "fail: an exact tail probability exceeds its bound";
    }
    if (g.format == "table") {
        std::ostringstream s;
        s << "K " << real(i.K) << "  q " << real(i.q) << "  components "
          << (i.components_pass ? "pass" : "precondition-failed") << "\n";
        char line[256];
        std::snprintf(line, sizeof line, "%-24s %-6s %-24s %-24s %-24s %s\n", "t", "side", "threshold",
                      "exact_prob", "bound", "verdict");
        s << line;
        for (std::size_t k = 0; k < i.row_count; ++k) {
            ost_tail_row row{};
            check(ost_tail_row_get(r.p, k, &row));
            std::string verdict = row.passed ? "pass" : "fail";
            if (row.vacuous) verdict += " (vacuous)";
            std::snprintf(line, sizeof line, "%-24s %-6s %-24s %-24s %-24s %s\n", real(row.t).c_str(),
                          row.side == OST_TAIL_LOWER ? "lower" : "upper", real(row.threshold).c_str(),
                          real(row.exact_prob).c_str(), real(row.bound).c_str(), verdict.c_str());
            s << line;
        }
        o.text = s.str();
    } else {
        char* s = nullptr;
        check(ost_tail_write(r.p, g.format == "csv" ? OST_FORMAT_CSV : OST_FORMAT_JSON, &s));
        o.text = take(s);
    }
    return o;
}

struct SimArgs {
    std::size_t R = 100000;
    double ci = 0.99;
};

Outcome run_simulate(const Global& g, const SimArgs& a) {
    Model m;
    load_model(g, m);
    ost_sim_result r{};
    check(ost_simulate_median(m.p, a.R, g.seed, a.ci, g.threads, &r));
    if (g.format == "json") {
        char* s = nullptr;
        check(ost_sim_result_write(&r, &s));
        return {take(s)};
    }
    return {scalar_output(g, {{"replicates", std::to_string(r.replicates)},
                              {"estimate", json_real(r.estimate)},
                              {"ci_low", real(r.ci_low)},
                              {"ci_high", real(r.ci_high)},
                              {"ci_level", real(r.ci_level)},
                              {"seed", std::to_string(r.seed)},
                              {"generator", r.generator, true},
                              {"elapsed_seconds", real(r.elapsed_seconds)}})};
}

Outcome run_oracle(const Global& g, std::size_t vectors) {
    ost_oracle_report r{};
    check(ost_run_oracles(g.seed, vectors, &r));
    Outcome o;
    o.code = r.passed ? kPass : kFail;
    o.text = scalar_output(g, {{"seed", std::to_string(r.seed)},
                               {"vectors", std::to_string(r.vectors)},
                               {"max_tail_discrepancy", real(r.max_tail_discrepancy)},
                               {"max_pmf_discrepancy", real(r.max_pmf_discrepancy)},
                               {"beta_cases", std::to_string(r.beta_cases)},
                               {"max_beta_discrepancy", real(r.max_beta_discrepancy)},
                               {"verdict", r.passed ? "pass" : "fail", true}});
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact order statistics of independent non-identical variables and certificates for "
                 "the regularity condition and median/quantile bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--out", g.out, "write output to PATH instead of standard output");
    app.add_option("--threads", g.threads, "worker threads (results do not depend on it)")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--seed", g.seed, "seed for randomized commands");
    app.add_option("--grid", g.grid, "certificate grid TMIN:TMAX:PPD (default 1e-6:1e6:64)");
    app.add_option("--model", g.model, "model spec file (JSON syntax)");

    CheckArgs check_args;
    auto* check_cmd = app.add_subcommand("check-condition", "certify a regularity inequality on a grid");
    check_args.comp.add(check_cmd);
    check_cmd->add_option("--K", check_args.K, "regularity constant K > 1");
    check_cmd->add_option("--form", check_args.form, "inequality to check")
        ->check(CLI::IsMember({"condition", "measure", "weak", "growth", "logconcave-k3"}));
    check_cmd->add_option("--ell", check_args.ell, "growth steps (form growth)");
    check_cmd->add_option("--gamma", check_args.gamma, "tail level in (0,1) (form growth)");

    MinKArgs min_args;
    auto* min_cmd = app.add_subcommand("min-k", "smallest K passing the condition on the grid");
    min_args.comp.add(min_cmd);
    min_cmd->add_option("--K-range", min_args.range, "search interval LO:HI");
    min_cmd->add_option("--tol", min_args.tol, "absolute tolerance on K");

    auto* median_cmd = app.add_subcommand("median", "exact median of the k-th smallest");

    QuantileArgs q_args;
    auto* q_cmd = app.add_subcommand("quantile", "quantile of the k-th smallest (--model) or of one distribution");
    q_args.comp.add(q_cmd);
    q_cmd->add_option("--r", q_args.r, "level");

    double theorem_K = 0;
    auto* th_cmd = app.add_subcommand("verify-theorem", "check K^-10 q <= median <= K^13 q");
    th_cmd->add_option("--K", theorem_K, "regularity constant K > 1")->required();

    TailArgs tail_args;
    auto* tail_cmd = app.add_subcommand("tail-bounds", "compare exact tail probabilities with the bounds");
    tail_cmd->add_option("--K", tail_args.K, "regularity constant K > 1")->required();
    tail_cmd->add_option("--side", tail_args.side, "which tail")->check(CLI::IsMember({"lower", "upper", "both"}));
    tail_cmd->add_option("--t", tail_args.t, "multipliers of q (default K^-(5+j), K^(5+j), j=1..10)")
        ->delimiter(',');
    tail_cmd->add_option("--unsafe-override-bound", tail_args.override_bound,
                         "multiply every bound by FACTOR (testing only)");

    SimArgs sim_args;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo median with a distribution-free interval");
    sim_cmd->add_option("--R", sim_args.R, "replicates");
    sim_cmd->add_option("--ci", sim_args.ci, "confidence level");

    std::size_t oracle_vectors = 500;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force cross-checks of the exact engine");
    oracle_cmd->add_option("--vectors", oracle_vectors, "random success vectors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    Outcome o;
    try {
        if (*check_cmd) o = run_check(g, check_args);
        else if (*min_cmd) o = run_min_k(g, min_args);
        else if (*median_cmd) o = run_median(g);
        else if (*q_cmd) o = run_quantile(g, q_args);
        else if (*th_cmd) o = run_theorem(g, theorem_K);
        else if (*tail_cmd) o = run_tails(g, tail_args);
        else if (*sim_cmd) o = run_simulate(g, sim_args);
        else if (*oracle_cmd) o = run_oracle(g, oracle_vectors);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kUsage;
    } catch (const ApiError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kUsage;
    }

    if (g.out.empty()) {
        std::cout << o.text;
    } else {
        std::ofstream out(g.out, std::ios::binary);
        out << o.text;
        if (!out) {
            std::cerr << "error: cannot write '" << g.out << "'\n";
            return kUsage;
        }
    }
    if (!o.note.empty()) std::cerr << o.note << "\n";
    return o.code;
}
