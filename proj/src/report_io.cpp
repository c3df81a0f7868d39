#include "ostat/report_io.hpp"

#include "json_out.hpp"

#include <sstream>

namespace ostat::io {

using detail::JsonOut;
using detail::read_real;
using nlohmann::json;

namespace {

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

template <class F>
auto guarded(std::string_view what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed ") + std::string(what) + ": " + e.what());
    }
}

void write_grid(JsonOut& w, const GridSpec& g) {
    w.key("grid").begin_object();
    w.field("t_min", g.t_min).field("t_max", g.t_max).field("points_per_decade", g.points_per_decade);
    w.end_object();
}

GridSpec read_grid(const json& j) {
    return {read_real(j.at("t_min")), read_real(j.at("t_max")), j.at("points_per_decade").get<int>()};
}

void write_certificate(JsonOut& w, const RegularityCertificate& c) {
    w.begin_object();
    w.field("inequality", to_string(c.inequality));
    w.field("K", c.K);
    write_grid(w, c.grid);
    w.field("ell", c.ell).field("gamma", c.gamma);
    w.field("verdict", c.passed ? "pass" : "fail");
    w.field("margin", c.margin);
    w.key("witness");
    if (c.witness) {
        w.begin_object().field("t", c.witness->t).field("lhs", c.witness->lhs).field("rhs", c.witness->rhs).end_object();
    } else {
        w.null();
    }
    w.field("evaluated", c.evaluated);
    w.field("scope", RegularityCertificate::scope);
    w.key("points").begin_array();
    for (const auto& p : c.points) {
        w.begin_array().value(p.t).value(p.lhs).value(p.rhs).value(p.applicable).end_array();
    }
    w.end_array();
    w.end_object();
}

RegularityCertificate read_certificate(const json& j) {
    RegularityCertificate c;
    c.inequality = inequality_from_string(j.at("inequality").get<std::string>());
    c.K = read_real(j.at("K"));
    c.grid = read_grid(j.at("grid"));
    c.ell = j.at("ell").get<int>();
    c.gamma = read_real(j.at("gamma"));
    c.passed = j.at("verdict").get<std::string>() == "pass";
    c.margin = read_real(j.at("margin"));
    if (const auto& wj = j.at("witness"); !wj.is_null()) {
        c.witness = Witness{read_real(wj.at("t")), read_real(wj.at("lhs")), read_real(wj.at("rhs"))};
    }
    c.evaluated = j.at("evaluated").get<std::size_t>();
    for (const auto& p : j.at("points")) {
        c.points.push_back({read_real(p.at(0)), read_real(p.at(1)), read_real(p.at(2)), p.at(3).get<bool>()});
    }
    return c;
}

void write_components(JsonOut& w, const std::vector<ComponentCertificate>& comps) {
    w.key("components").begin_array();
    for (const auto& c : comps) {
        w.begin_object();
        w.field("index", c.index).field("repeat", c.repeat).field("description", c.description);
        w.key("certificate");
        write_certificate(w, c.certificate);
        w.end_object();
    }
    w.end_array();
}

std::vector<ComponentCertificate> read_components(const json& j) {
    std::vector<ComponentCertificate> out;
    for (const auto& c : j) {
        out.push_back({c.at("index").get<std::size_t>(), c.at("repeat").get<std::size_t>(),
                       c.at("description").get<std::string>(), read_certificate(c.at("certificate"))});
    }
    return out;
}

void write_row(JsonOut& w, const TailBoundRow& r) {
    w.begin_object();
    w.field("t", r.t).field("side", to_string(r.side)).field("threshold", r.threshold);
    w.field("exact_prob", r.exact_prob).field("bound", r.bound).field("vacuous", r.vacuous);
    w.field("verdict", r.passed ? "pass" : "fail");
    w.end_object();
}

TailBoundRow read_row(const json& j) {
    TailBoundRow r;
    r.t = read_real(j.at("t"));
    r.side = tail_side_from_string(j.at("side").get<std::string>());
    r.threshold = read_real(j.at("threshold"));
    r.exact_prob = read_real(j.at("exact_prob"));
    r.bound = read_real(j.at("bound"));
    r.vacuous = j.at("vacuous").get<bool>();
    r.passed = j.at("verdict").get<std::string>() == "pass";
    return r;
}

} // namespace

std::string format_real(double v) { return detail::real_text(v); }

std::string to_json(const RegularityCertificate& c) {
    JsonOut w;
    write_certificate(w, c);
    return w.str();
}

RegularityCertificate certificate_from_json(std::string_view text) {
    return guarded("certificate", [&] { return read_certificate(parse(text)); });
}

std::string to_json(const MinKResult& r) {
    JsonOut w;
    w.begin_object();
    w.field("found", r.found).field("K", r.K).field("K_lo", r.K_lo).field("K_hi", r.K_hi);
    w.field("tol", r.tol).field("checks", r.checks).field("monotonicity_assumed", r.monotonicity_assumed);
    w.end_object();
    return w.str();
}

MinKResult min_k_from_json(std::string_view text) {
    return guarded("min-K result", [&] {
        const auto j = parse(text);
        MinKResult r;
        r.found = j.at("found").get<bool>();
        r.K = read_real(j.at("K"));
        r.K_lo = read_real(j.at("K_lo"));
        r.K_hi = read_real(j.at("K_hi"));
        r.tol = read_real(j.at("tol"));
        r.checks = j.at("checks").get<int>();
        r.monotonicity_assumed = j.at("monotonicity_assumed").get<bool>();
        return r;
    });
}

std::string to_json(const GrowthReport& r) {
    JsonOut w;
    w.begin_object();
    w.field("K", r.K).field("ell", r.ell).field("gamma", r.gamma);
    w.field("verdict", r.passed ? "pass" : "fail");
    w.key("odds");
    write_certificate(w, r.odds);
    w.key("tail");
    write_certificate(w, r.tail);
    w.end_object();
    return w.str();
}

GrowthReport growth_from_json(std::string_view text) {
    return guarded("growth report", [&] {
        const auto j = parse(text);
        GrowthReport r;
        r.K = read_real(j.at("K"));
        r.ell = j.at("ell").get<int>();
        r.gamma = read_real(j.at("gamma"));
        r.passed = j.at("verdict").get<std::string>() == "pass";
        r.odds = read_certificate(j.at("odds"));
        r.tail = read_certificate(j.at("tail"));
        return r;
    });
}

std::string to_json(const TheoremReport& r) {
    JsonOut w;
    w.begin_object();
    w.field("K", r.K).field("n", r.n).field("k", r.k);
    w.field("q", r.q).field("med", r.med).field("ratio", r.ratio);
    w.field("lower", r.lower).field("upper", r.upper);
    w.field("sandwich_holds", r.sandwich_holds);
    w.field("prob_below_lower", r.prob_below_lower).field("prob_at_most_upper", r.prob_at_most_upper);
    w.field("one_sided_holds", r.one_sided_holds);
    w.field("components_pass", r.components_pass);
    w.field("verdict", to_string(r.verdict));
    w.field("quantile_convention", r.quantile_convention);
    write_components(w, r.components);
    w.end_object();
    return w.str();
}

TheoremReport theorem_from_json(std::string_view text) {
    return guarded("theorem report", [&] {
        const auto j = parse(text);
        TheoremReport r;
        r.K = read_real(j.at("K"));
        r.n = j.at("n").get<std::size_t>();
        r.k = j.at("k").get<std::size_t>();
        r.q = read_real(j.at("q"));
        r.med = read_real(j.at("med"));
        r.ratio = read_real(j.at("ratio"));
        r.lower = read_real(j.at("lower"));
        r.upper = read_real(j.at("upper"));
        r.sandwich_holds = j.at("sandwich_holds").get<bool>();
        r.prob_below_lower = read_real(j.at("prob_below_lower"));
        r.prob_at_most_upper = read_real(j.at("prob_at_most_upper"));
        r.one_sided_holds = j.at("one_sided_holds").get<bool>();
        r.components_pass = j.at("components_pass").get<bool>();
        r.verdict = theorem_verdict_from_string(j.at("verdict").get<std::string>());
        r.quantile_convention = j.at("quantile_convention").get<std::string>();
        r.components = read_components(j.at("components"));
        return r;
    });
}

std::string to_json(const TailReport& r) {
    JsonOut w;
    w.begin_object();
    w.field("K", r.K).field("n", r.n).field("k", r.k).field("q", r.q);
    w.field("components_pass", r.components_pass).field("rows_pass", r.rows_pass);
    write_components(w, r.components);
    w.key("rows").begin_array();
    for (const auto& row : r.rows) write_row(w, row);
    w.end_array();
    w.end_object();
    return w.str();
}

TailReport tail_report_from_json(std::string_view text) {
    return guarded("tail report", [&] {
        const auto j = parse(text);
        TailReport r;
        r.K = read_real(j.at("K"));
        r.n = j.at("n").get<std::size_t>();
        r.k = j.at("k").get<std::size_t>();
        r.q = read_real(j.at("q"));
        r.components_pass = j.at("components_pass").get<bool>();
        r.rows_pass = j.at("rows_pass").get<bool>();
        r.components = read_components(j.at("components"));
        for (const auto& row : j.at("rows")) r.rows.push_back(read_row(row));
        return r;
    });
}

std::string to_json(const mc::SimResult& r) {
    JsonOut w;
    w.begin_object();
    w.field("replicates", r.replicates).field("estimate", r.estimate);
    w.field("ci_low", r.ci_low).field("ci_high", r.ci_high);
    w.field("rank_low", r.rank_low).field("rank_high", r.rank_high);
    w.field("ci_level", r.ci_level).field("seed", r.seed).field("generator", r.generator);
    w.field("elapsed_seconds", r.elapsed_seconds);
    w.end_object();
    return w.str();
}

mc::SimResult sim_result_from_json(std::string_view text) {
    return guarded("simulation result", [&] {
        const auto j = parse(text);
        mc::SimResult r;
        r.replicates = j.at("replicates").get<std::size_t>();
        r.estimate = read_real(j.at("estimate"));
        r.ci_low = read_real(j.at("ci_low"));
        r.ci_high = read_real(j.at("ci_high"));
        r.rank_low = j.at("rank_low").get<std::size_t>();
        r.rank_high = j.at("rank_high").get<std::size_t>();
        r.ci_level = read_real(j.at("ci_level"));
        r.seed = j.at("seed").get<std::uint64_t>();
        r.generator = j.at("generator").get<std::string>();
        r.elapsed_seconds = read_real(j.at("elapsed_seconds"));
        return r;
    });
}

std::string to_csv(const RegularityCertificate& c) {
    std::ostringstream os;
    os << kCertificateCsvHeader << '\n';
    for (const auto& p : c.points) {
        const char* verdict = !p.applicable ? "skip" : (p.margin() >= -kMarginTolerance ? "pass" : "fail");
        os << format_real(p.t) << ',' << format_real(p.lhs) << ',' << format_real(p.rhs) << ','
           << format_real(p.margin()) << ',' << verdict << '\n';
    }
    return os.str();
}

std::string to_csv(std::span<const TailBoundRow> rows) {
    std::ostringstream os;
    os << kTailCsvHeader << '\n';
    for (const auto& r : rows) {
        os << format_real(r.t) << ',' << to_string(r.side) << ',' << format_real(r.threshold) << ','
           << format_real(r.exact_prob) << ',' << format_real(r.bound) << ','
           << (r.passed ? "pass" : "fail") << '\n';
    }
    return os.str();
}

} // namespace ostat::io
