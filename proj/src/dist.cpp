#include "ostat/dist.hpp"

#include "ostat/error.hpp"
#include "numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/math/special_functions/erf.hpp>

namespace ostat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be a finite positive number");
    }
}

void require_probability(double r) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw DomainError("quantile level must lie in [0, 1]");
    }
}

// Index of the first knot with knot.F >= r; knots[0].F == 0 < r.
std::size_t first_knot_reaching(const std::vector<Knot>& knots, double r) {
    auto it = std::lower_bound(knots.begin(), knots.end(), r,
                               [](const Knot& k, double v) { return k.F < v; });
    return static_cast<std::size_t>(it - knots.begin());
}

} // namespace

Distribution::Distribution(Family family, double scale)
    : family_(std::move(family)), scale_(scale) {
    require_positive(scale_, "scale");
}

Distribution Distribution::uniform01(double scale) { return {Uniform01{}, scale}; }

Distribution Distribution::pareto(double p, double scale) {
    require_positive(p, "Pareto exponent p");
    return {ParetoPower{p}, scale};
}

Distribution Distribution::exponential(double rate, double scale) {
    require_positive(rate, "exponential rate");
    return {Exponential{rate}, scale};
}

Distribution Distribution::half_gaussian(double sigma, double scale) {
    require_positive(sigma, "half-Gaussian sigma");
    return {HalfGaussian{sigma}, scale};
}

Distribution Distribution::piecewise_linear(std::vector<Knot> knots, double scale) {
    if (knots.size() < 2) {
        throw DomainError("piecewise-linear cdf needs at least two knots");
    }
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const auto& k = knots[i];
        if (!(k.t >= 0.0) || !std::isfinite(k.t) || !(k.F >= 0.0 && k.F <= 1.0)) {
            throw DomainError("knots must satisfy t >= 0 and F in [0, 1]");
        }
        if (i > 0 && !(k.t > knots[i - 1].t)) {
            throw DomainError("knot locations must be strictly increasing");
        }
        if (i > 0 && k.F < knots[i - 1].F) {
            throw DomainError("knot cdf values must be nondecreasing");
        }
    }
    if (knots.front().F != 0.0 || knots.back().F != 1.0) {
        throw DomainError("piecewise-linear cdf must start at F = 0 and end at F = 1");
    }
    return {PiecewiseLinearCdf{std::move(knots)}, scale};
}

Distribution Distribution::atomic(std::vector<Atom> atoms, double scale) {
    if (atoms.empty()) {
        throw DomainError("atomic law needs at least one atom");
    }
    std::vector<double> cumulative;
    cumulative.reserve(atoms.size());
    double total = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const auto& a = atoms[i];
        if (!(a.value >= 0.0) || !std::isfinite(a.value)) {
            throw DomainError("atom locations must be finite and non-negative");
        }
        if (!(a.weight > 0.0)) {
            throw DomainError("atom weights must be positive");
        }
        if (i > 0 && !(a.value > atoms[i - 1].value)) {
            throw DomainError("atom locations must be strictly increasing");
        }
        total += a.weight;
        cumulative.push_back(total);
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw DomainError("atom weights must sum to 1");
    }
    cumulative.back() = 1.0;
    for (auto& c : cumulative) {
        c = std::min(c, 1.0);
    }
    return {Atomic{std::move(atoms), std::move(cumulative)}, scale};
}

Distribution Distribution::scaled(double c) const {
    require_positive(c, "scale factor");
    return {family_, scale_ * c};
}

double Distribution::cdf(double t) const {
    if (!(t > 0.0)) {
        // Only an atom at the origin carries mass at t = 0.
        if (t == 0.0) {
            if (const auto* a = std::get_if<Atomic>(&family_); a && a->atoms.front().value == 0.0) {
                return a->cumulative.front();
            }
        }
        return 0.0;
    }
    const double x = t / scale_;
    return std::visit(
        overloaded{
            [&](const Uniform01&) { return std::min(x, 1.0); },
            [&](const ParetoPower& f) { return x < 1.0 ? 0.0 : -std::expm1(-f.p * std::log(x)); },
            [&](const Exponential& f) { return -std::expm1(-f.rate * x); },
            [&](const HalfGaussian& f) { return std::erf(x / (f.sigma * numeric::kSqrt2)); },
            [&](const PiecewiseLinearCdf& f) {
                const auto& k = f.knots;
                if (x <= k.front().t) return 0.0;
                if (x >= k.back().t) return 1.0;
                auto it = std::upper_bound(k.begin(), k.end(), x,
                                           [](double v, const Knot& kn) { return v < kn.t; });
                const Knot& hi = *it;
                const Knot& lo = *(it - 1);
                const double w = (x - lo.t) / (hi.t - lo.t);
                return std::min(1.0, lo.F + w * (hi.F - lo.F));
            },
            [&](const Atomic& f) {
                double c = 0.0;
                for (std::size_t i = 0; i < f.atoms.size(); ++i) {
                    if (f.atoms[i].value * scale_ <= t) c = f.cumulative[i];
                    else break;
                }
                return c;
            },
        },
        family_);
}

double Distribution::survival(double t) const {
    if (!(t > 0.0)) {
        return 1.0 - cdf(t);
    }
    const double x = t / scale_;
    return std::visit(
        overloaded{
            [&](const Uniform01&) { return 1.0 - std::min(x, 1.0); },
            [&](const ParetoPower& f) { return x < 1.0 ? 1.0 : std::exp(-f.p * std::log(x)); },
            [&](const Exponential& f) { return std::exp(-f.rate * x); },
            [&](const HalfGaussian& f) { return std::erfc(x / (f.sigma * numeric::kSqrt2)); },
            [&](const PiecewiseLinearCdf&) { return 1.0 - cdf(t); },
            [&](const Atomic& f) {
                double s = 0.0;
                for (std::size_t i = f.atoms.size(); i-- > 0;) {
                    if (f.atoms[i].value * scale_ > t) s += f.atoms[i].weight;
                    else break;
                }
                return std::min(s, 1.0);
            },
        },
        family_);
}

double Distribution::cdf_left_limit(double t) const {
    const auto* a = std::get_if<Atomic>(&family_);
    if (a == nullptr) {
        return cdf(t);
    }
    double c = 0.0;
    for (std::size_t i = 0; i < a->atoms.size(); ++i) {
        if (a->atoms[i].value * scale_ < t) c = a->cumulative[i];
        else break;
    }
    return c;
}

double Distribution::quantile(double r) const {
    require_probability(r);
    if (r == 0.0) {
        return 0.0;
    }
    double t = std::visit(
        overloaded{
            [&](const Uniform01&) { return r; },
            [&](const ParetoPower& f) { return r == 1.0 ? kInf : std::exp(-std::log1p(-r) / f.p); },
            [&](const Exponential& f) { return r == 1.0 ? kInf : -std::log1p(-r) / f.rate; },
            [&](const HalfGaussian& f) {
                if (r == 1.0) return kInf;
                const double z = r <= 0.5 ? boost::math::erf_inv(r) : boost::math::erfc_inv(1.0 - r);
                return f.sigma * numeric::kSqrt2 * z;
            },
            [&](const PiecewiseLinearCdf& f) {
                const auto& k = f.knots;
                const std::size_t i = first_knot_reaching(k, r);
                const Knot& lo = k[i - 1];
                const Knot& hi = k[i];
                return lo.t + (r - lo.F) / (hi.F - lo.F) * (hi.t - lo.t);
            },
            [&](const Atomic& f) {
                auto it = std::lower_bound(f.cumulative.begin(), f.cumulative.end(), r);
                const auto i = static_cast<std::size_t>(it - f.cumulative.begin());
                return f.atoms[std::min(i, f.atoms.size() - 1)].value;
            },
        },
        family_);
    if (!std::isfinite(t)) {
        return t;
    }
    t *= scale_;
    if (std::holds_alternative<Atomic>(family_)) {
        return t;
    }
    // Closed forms can land one ulp short of the level.
    for (int i = 0; i < 8 && cdf(t) < r; ++i) {
        t = std::nextafter(t, kInf);
    }
    return t;
}

std::vector<double> Distribution::breakpoints() const {
    std::vector<double> out = std::visit(
        overloaded{
            [](const Uniform01&) { return std::vector<double>{1.0}; },
            [](const ParetoPower&) { return std::vector<double>{1.0}; },
            [](const Exponential&) { return std::vector<double>{}; },
            [](const HalfGaussian&) { return std::vector<double>{}; },
            [](const PiecewiseLinearCdf& f) {
                std::vector<double> v;
                for (const auto& k : f.knots) v.push_back(k.t);
                return v;
            },
            [](const Atomic& f) {
                std::vector<double> v;
                for (const auto& a : f.atoms) v.push_back(a.value);
                return v;
            },
        },
        family_);
    std::vector<double> scaled;
    for (double b : out) {
        if (b > 0.0) scaled.push_back(b * scale_);
    }
    return scaled;
}

std::vector<double> Distribution::atoms() const {
    std::vector<double> out;
    if (const auto* a = std::get_if<Atomic>(&family_)) {
        for (const auto& atom : a->atoms) out.push_back(atom.value * scale_);
    }
    return out;
}

bool Distribution::is_continuous() const { return !std::holds_alternative<Atomic>(family_); }

std::string Distribution::family_name() const {
    return std::visit(overloaded{
                          [](const Uniform01&) { return std::string("uniform01"); },
                          [](const ParetoPower&) { return std::string("pareto"); },
                          [](const Exponential&) { return std::string("exponential"); },
                          [](const HalfGaussian&) { return std::string("half_gaussian"); },
                          [](const PiecewiseLinearCdf&) { return std::string("piecewise_linear"); },
                          [](const Atomic&) { return std::string("atomic"); },
                      },
                      family_);
}

std::string Distribution::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << family_name();
    std::visit(overloaded{
                   [](const Uniform01&) {},
                   [&](const ParetoPower& f) { os << "(p=" << f.p << ")"; },
                   [&](const Exponential& f) { os << "(rate=" << f.rate << ")"; },
                   [&](const HalfGaussian& f) { os << "(sigma=" << f.sigma << ")"; },
                   [&](const PiecewiseLinearCdf& f) { os << "(" << f.knots.size() << " knots)"; },
                   [&](const Atomic& f) { os << "(" << f.atoms.size() << " atoms)"; },
               },
               family_);
    if (scale_ != 1.0) {
        os << "*" << scale_;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

MixtureCdf::MixtureCdf(std::vector<ModelComponent> components)
    : components_(std::move(components)) {
    for (const auto& c : components_) {
        if (c.repeat == 0) {
            throw DomainError("component repeat must be at least 1");
        }
        n_ += c.repeat;
    }
    if (n_ == 0) {
        throw DomainError("mixture needs at least one component");
    }
}

double MixtureCdf::cdf(double t) const {
    double s = 0.0;
    for (const auto& c : components_) {
        s += static_cast<double>(c.repeat) * c.dist.cdf(t);
    }
    return std::min(1.0, s / static_cast<double>(n_));
}

double MixtureCdf::cdf_left_limit(double t) const {
    double s = 0.0;
    for (const auto& c : components_) {
        s += static_cast<double>(c.repeat) * c.dist.cdf_left_limit(t);
    }
    return std::min(1.0, s / static_cast<double>(n_));
}

double MixtureCdf::quantile(double r) const {
    require_probability(r);
    if (r == 0.0) {
        return 0.0;
    }
    // At max_i q_i(r) every F_i reaches r; below min_i q_i(r) none does.
    double lo = kInf;
    double hi = 0.0;
    for (const auto& c : components_) {
        const double q = c.dist.quantile(r);
        lo = std::min(lo, q);
        hi = std::max(hi, q);
    }
    if (r == 1.0 || !std::isfinite(hi)) {
        return hi;
    }
    if (cdf(lo) >= r) {
        return lo;
    }
    std::vector<double> atoms;
    for (const auto& c : components_) {
        auto a = c.dist.atoms();
        atoms.insert(atoms.end(), a.begin(), a.end());
    }
    return numeric::bisect_left(*this, r, lo, hi, atoms);
}

} // namespace ostat
