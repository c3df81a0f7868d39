#include <doctest.h>

#include "ostat/error.hpp"
#include "ostat/model_spec.hpp"
#include "ostat/report_io.hpp"
#include "test_support.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace ostat;

namespace {

OrderStatModel two_exponentials() {
    return OrderStatModel(std::vector<Distribution>{Distribution::exponential(1.0),
                                                    Distribution::exponential(2.0)},
                          1);
}

std::string golden_path(const std::string& name) { return std::string(OSTAT_GOLDEN_DIR) + "/" + name; }

// Set OSTAT_UPDATE_GOLDEN=1 to rewrite the expected files after a deliberate
// format change.
void check_golden(const std::string& name, const std::string& actual) {
    const auto path = golden_path(name);
    if (std::getenv("OSTAT_UPDATE_GOLDEN")) {
        std::ofstream(path, std::ios::binary) << actual;
    }
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == actual);
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

} // namespace

TEST_CASE("real formatting") {
    CHECK(io::format_real(0.1) == "0.10000000000000001");
    CHECK(io::format_real(2.0) == "2");
    CHECK(io::format_real(INFINITY) == "inf");
    CHECK(io::format_real(-INFINITY) == "-inf");
    CHECK(io::format_real(NAN) == "nan");
    for (double v : {1.0 / 3.0, 0.19495017655787056, 1e-300, 6.02214076e23}) {
        CHECK(std::strtod(io::format_real(v).c_str(), nullptr) == v);
    }
}

TEST_CASE("certificate JSON round trip") {
    for (const auto& d : test::builtin_families()) {
        for (double K : {1.5, 2.0, 3.0}) {
            const auto c = check_condition(d, K, GridSpec{1e-3, 1e3, 8});
            CHECK(io::certificate_from_json(io::to_json(c)) == c);
        }
    }
    // Nothing applicable: margin is +inf.
    const auto w = check_weak_condition(Distribution::atomic({{1.0, 1.0}}), 2.0, GridSpec{2.0, 20.0, 2});
    CHECK(std::isinf(w.margin));
    CHECK(io::certificate_from_json(io::to_json(w)) == w);
    const auto failed = check_condition(Distribution::uniform01(), 1.5);
    const auto back = io::certificate_from_json(io::to_json(failed));
    CHECK(back == failed);
    CHECK(back.witness.has_value());
}

TEST_CASE("other reports round trip") {
    const auto mk = find_min_K(Distribution::pareto(2.0), GridSpec{1e-3, 1e3, 8}, 1.01, 8.0, 1e-3);
    CHECK(io::min_k_from_json(io::to_json(mk)) == mk);

    const auto g = check_lemma_growth(Distribution::exponential(1.0), 3.0, 5, std::pow(2.0, -2.5),
                                      GridSpec{1e-3, 1e3, 8});
    CHECK(io::growth_from_json(io::to_json(g)) == g);

    const auto th = verify_theorem(two_exponentials(), 3.0);
    CHECK(io::theorem_from_json(io::to_json(th)) == th);
    const auto pre = verify_theorem(two_exponentials(), 1.2);
    CHECK(io::theorem_from_json(io::to_json(pre)) == pre);

    const TailSide both[] = {TailSide::lower, TailSide::upper};
    const auto tr = verify_tails(two_exponentials(), 3.0, both, {}, GridSpec{});
    CHECK(io::tail_report_from_json(io::to_json(tr)) == tr);

    mc::SimOptions opts;
    opts.replicates = 1001;
    opts.seed = 0xdeadbeefcafef00dULL;
    const auto sim = mc::simulate_median(two_exponentials(), opts);
    const auto sim_back = io::sim_result_from_json(io::to_json(sim));
    CHECK(sim_back == sim);
    CHECK(sim_back.seed == 0xdeadbeefcafef00dULL);
}

TEST_CASE("malformed reports are parse errors") {
    CHECK_THROWS_AS(io::certificate_from_json("{"), ParseError);
    CHECK_THROWS_AS(io::certificate_from_json("{}"), ParseError);
    CHECK_THROWS_AS(io::theorem_from_json("[1, 2]"), ParseError);
}

TEST_CASE("CSV schemas") {
    const auto c = check_condition(Distribution::uniform01(), 2.0, GridSpec{0.1, 10.0, 2});
    const auto csv = io::to_csv(c);
    CHECK(first_line(csv) == io::kCertificateCsvHeader);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.back() == '\n');
    check_golden("condition_uniform01_K2.csv", csv);

    const auto rows = verify_lower_tail(two_exponentials(), 3.0, default_tail_grid(TailSide::lower, 3.0));
    const auto tcsv = io::to_csv(rows);
    CHECK(first_line(tcsv) == io::kTailCsvHeader);
    check_golden("tail_lower_exp12_K3.csv", tcsv);

    const auto weak = check_weak_condition(Distribution::uniform01(), 2.0, GridSpec{0.1, 10.0, 1});
    const auto wcsv = io::to_csv(weak);
    CHECK(wcsv.find(",skip\n") != std::string::npos);
}

TEST_CASE("model spec parsing") {
    const auto m = parse_model_spec(R"({"k": 2, "components": [
        {"family": "exponential", "params": {"rate": 1}, "scale": 2.0, "repeat": 3},
        {"family": "uniform01"},
        {"family": "pareto", "params": {"p": 1.5}},
        {"family": "half_gaussian", "params": {"sigma": 0.5}},
        {"family": "piecewise_linear", "params": {"knots": [[0, 0], [1, 0.3], [2, 0.3], [5, 1]]}},
        {"family": "atomic", "params": {"atoms": [[1, 0.25], [2, 0.5], [4, 0.25]]}}]})");
    CHECK(m.size() == 8);
    CHECK(m.rank() == 2);
    REQUIRE(m.components().size() == 6);
    CHECK(m.components()[0].repeat == 3);
    CHECK(m.components()[0].dist == Distribution::exponential(1.0, 2.0));
    CHECK(m.components()[5].dist.cdf(2.0) == 0.75);

    const auto again = parse_model_spec(model_to_json(m));
    CHECK(again.rank() == m.rank());
    REQUIRE(again.components().size() == m.components().size());
    for (std::size_t i = 0; i < m.components().size(); ++i) {
        CHECK(again.components()[i].dist == m.components()[i].dist);
        CHECK(again.components()[i].repeat == m.components()[i].repeat);
    }
    for (const auto& d : test::builtin_families()) {
        CHECK(parse_distribution_spec(distribution_to_json(d)) == d);
    }
}

TEST_CASE("model spec errors") {
    try {
        parse_model_spec(R"({"k": 1, "components": [{"family": "cauchy"}]})");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("cauchy") != std::string::npos);
        for (const auto& f : known_families()) CHECK(msg.find(f) != std::string::npos);
    }
    CHECK_THROWS_AS(parse_model_spec("not json"), ParseError);
    CHECK_THROWS_AS(parse_model_spec(R"({"components": []})"), ParseError);
    CHECK_THROWS_AS(parse_model_spec(R"({"k": 1, "components": [{"family": "pareto"}]})"), ParseError);
    CHECK_THROWS_AS(parse_model_spec(R"({"k": 1, "components": [{"family": "uniform01", "repeat": 0}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_model_spec(R"({"k": 1, "components": [{"family": "uniform01", "colour": 1}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_model_spec(R"({"k": 3, "components": [{"family": "uniform01", "repeat": 2}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_model_spec(R"({"k": 1, "components": [{"family": "pareto", "params": {"p": -1}}]})"),
                    ParseError);
}
