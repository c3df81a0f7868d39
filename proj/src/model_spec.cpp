#include "ostat/model_spec.hpp"

#include "ostat/error.hpp"
#include "json_out.hpp"

#include <set>

namespace ostat {

using nlohmann::json;

namespace {

std::string family_list() {
    std::string s;
    for (const auto& f : known_families()) {
        if (!s.empty()) s += ", ";
        s += f;
    }
    return s;
}

void allow_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : obj.items()) {
        if (!allowed.count(k)) {
            throw ParseError("unexpected key '" + k + "' in " + where);
        }
    }
}

double number(const json& params, const char* name, const std::string& family) {
    if (!params.contains(name)) {
        throw ParseError("family '" + family + "' requires parameter '" + name + "'");
    }
    const auto& v = params.at(name);
    if (!v.is_number()) {
        throw ParseError("parameter '" + std::string(name) + "' must be a number");
    }
    return v.get<double>();
}

std::vector<std::pair<double, double>> pairs(const json& params, const char* name,
                                             const std::string& family) {
    if (!params.contains(name) || !params.at(name).is_array()) {
        throw ParseError("family '" + family + "' requires an array parameter '" + name + "'");
    }
    std::vector<std::pair<double, double>> out;
    for (const auto& e : params.at(name)) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw ParseError("'" + std::string(name) + "' entries must be [number, number] pairs");
        }
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

Distribution build_distribution(const json& c) {
    if (!c.is_object()) {
        throw ParseError("component must be an object");
    }
    if (!c.contains("family") || !c.at("family").is_string()) {
        throw ParseError("component needs a string 'family'; known families: " + family_list());
    }
    const auto family = c.at("family").get<std::string>();
    const json params = c.value("params", json::object());
    if (!params.is_object()) {
        throw ParseError("'params' must be an object");
    }
    double scale = 1.0;
    if (c.contains("scale")) {
        if (!c.at("scale").is_number()) throw ParseError("'scale' must be a number");
        scale = c.at("scale").get<double>();
    }
    const std::string where = "params of '" + family + "'";
    if (family == "uniform01") {
        allow_keys(params, {}, where);
        return Distribution::uniform01(scale);
    }
    if (family == "pareto") {
        allow_keys(params, {"p"}, where);
        return Distribution::pareto(number(params, "p", family), scale);
    }
    if (family == "exponential") {
        allow_keys(params, {"rate"}, where);
        return Distribution::exponential(number(params, "rate", family), scale);
    }
    if (family == "half_gaussian") {
        allow_keys(params, {"sigma"}, where);
        return Distribution::half_gaussian(number(params, "sigma", family), scale);
    }
    if (family == "piecewise_linear") {
        allow_keys(params, {"knots"}, where);
        std::vector<Knot> knots;
        for (auto [t, F] : pairs(params, "knots", family)) knots.push_back({t, F});
        return Distribution::piecewise_linear(std::move(knots), scale);
    }
    if (family == "atomic") {
        allow_keys(params, {"atoms"}, where);
        std::vector<Atom> atoms;
        for (auto [v, w] : pairs(params, "atoms", family)) atoms.push_back({v, w});
        return Distribution::atomic(std::move(atoms), scale);
    }
    throw ParseError("unknown family '" + family + "'; known families: " + family_list());
}

// Parameter values outside a family's domain are reported as spec errors.
Distribution read_distribution(const json& c) {
    try {
        return build_distribution(c);
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid component: ") + e.what());
    }
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("model spec is not valid JSON: ") + e.what());
    }
}

// Positive integer field; JSON reals with integral value are accepted.
std::size_t count(const json& j, const char* name) {
    const auto& v = j.at(name);
    if (v.is_number_unsigned()) return v.get<std::size_t>();
    if (v.is_number_integer() && v.get<long long>() >= 0) return v.get<std::size_t>();
    throw ParseError("'" + std::string(name) + "' must be a non-negative integer");
}

void write_distribution(io::detail::JsonOut& w, const Distribution& d) {
    w.field("family", d.family_name());
    w.key("params").begin_object();
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ParetoPower>) w.field("p", f.p);
            else if constexpr (std::is_same_v<T, Exponential>) w.field("rate", f.rate);
            else if constexpr (std::is_same_v<T, HalfGaussian>) w.field("sigma", f.sigma);
            else if constexpr (std::is_same_v<T, PiecewiseLinearCdf>) {
                w.key("knots").begin_array();
                for (const auto& k : f.knots) w.begin_array().value(k.t).value(k.F).end_array();
                w.end_array();
            } else if constexpr (std::is_same_v<T, Atomic>) {
                w.key("atoms").begin_array();
                for (const auto& a : f.atoms) w.begin_array().value(a.value).value(a.weight).end_array();
                w.end_array();
            }
        },
        d.family());
    w.end_object();
    w.field("scale", d.scale());
}

} // namespace

const std::vector<std::string>& known_families() {
    static const std::vector<std::string> names = {"uniform01",     "pareto",           "exponential",
                                                   "half_gaussian", "piecewise_linear", "atomic"};
    return names;
}

Distribution parse_distribution_spec(std::string_view text) {
    const auto j = parse_json(text);
    if (j.is_object()) allow_keys(j, {"family", "params", "scale"}, "component");
    return read_distribution(j);
}

OrderStatModel parse_model_spec(std::string_view text) {
    const auto j = parse_json(text);
    if (!j.is_object()) {
        throw ParseError("model spec must be a JSON object");
    }
    allow_keys(j, {"k", "components"}, "model spec");
    if (!j.contains("k") || !j.contains("components") || !j.at("components").is_array()) {
        throw ParseError("model spec needs 'k' and a 'components' array");
    }
    const std::size_t k = count(j, "k");
    std::vector<ModelComponent> comps;
    for (const auto& c : j.at("components")) {
        if (c.is_object()) allow_keys(c, {"family", "params", "scale", "repeat"}, "component");
        ModelComponent mc{read_distribution(c), 1};
        if (c.contains("repeat")) {
            mc.repeat = count(c, "repeat");
            if (mc.repeat < 1) throw ParseError("'repeat' must be at least 1");
        }
        comps.push_back(std::move(mc));
    }
    try {
        return OrderStatModel(std::move(comps), k);
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid model: ") + e.what());
    }
}

std::string distribution_to_json(const Distribution& d) {
    io::detail::JsonOut w;
    w.begin_object();
    write_distribution(w, d);
    w.end_object();
    return w.str();
}

std::string model_to_json(const OrderStatModel& m) {
    io::detail::JsonOut w;
    w.begin_object();
    w.field("k", m.rank());
    w.key("components").begin_array();
    for (const auto& c : m.components()) {
        w.begin_object();
        write_distribution(w, c.dist);
        w.field("repeat", c.repeat);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

} // namespace ostat
