#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ostat {

// Families of non-negative laws. Parameters describe the unscaled variable xi;
// Distribution applies the scale x to obtain the law of x*xi.

struct Uniform01 {
    bool operator==(const Uniform01&) const = default;
};

// P(xi > t) = t^{-p} for t >= 1.
struct ParetoPower {
    double p;
    bool operator==(const ParetoPower&) const = default;
};

struct Exponential {
    double rate;
    bool operator==(const Exponential&) const = default;
};

// Law of |eta| with eta ~ N(0, sigma^2).
struct HalfGaussian {
    double sigma;
    bool operator==(const HalfGaussian&) const = default;
};

struct Knot {
    double t;
    double F;
    bool operator==(const Knot&) const = default;
};

// Continuous cdf, linear between knots. First knot has F = 0, last has F = 1.
struct PiecewiseLinearCdf {
    std::vector<Knot> knots;
    bool operator==(const PiecewiseLinearCdf&) const = default;
};

struct Atom {
    double value;
    double weight;
    bool operator==(const Atom&) const = default;
};

// Pure point masses. `cumulative[i]` is the total weight of atoms 0..i, with
// the last entry pinned to exactly 1.
struct Atomic {
    std::vector<Atom> atoms;
    std::vector<double> cumulative;
    bool operator==(const Atomic&) const = default;
};

using Family = std::variant<Uniform01, ParetoPower, Exponential, HalfGaussian,
                            PiecewiseLinearCdf, Atomic>;

class Distribution {
public:
    static Distribution uniform01(double scale = 1.0);
    static Distribution pareto(double p, double scale = 1.0);
    static Distribution exponential(double rate, double scale = 1.0);
    static Distribution half_gaussian(double sigma, double scale = 1.0);
    static Distribution piecewise_linear(std::vector<Knot> knots, double scale = 1.0);
    static Distribution atomic(std::vector<Atom> atoms, double scale = 1.0);

    // Law of c * X.
    Distribution scaled(double c) const;

    double cdf(double t) const;
    // 1 - cdf(t), evaluated without cancellation where the family allows it.
    double survival(double t) const;
    double cdf_left_limit(double t) const;

    // Left generalized inverse inf{t : cdf(t) >= r}. quantile(0) = 0 and
    // quantile(1) is the supremum of the support (possibly +inf).
    double quantile(double r) const;

    // Locations (already scaled) where the cdf has a jump or a kink.
    std::vector<double> breakpoints() const;
    // Locations (already scaled) of point masses.
    std::vector<double> atoms() const;

    bool is_continuous() const;
    const Family& family() const { return family_; }
    double scale() const { return scale_; }
    std::string family_name() const;
    std::string describe() const;

    bool operator==(const Distribution&) const = default;

private:
    Distribution(Family family, double scale);

    Family family_;
    double scale_;
};

// One block of identically distributed components.
struct ModelComponent {
    Distribution dist;
    std::size_t repeat = 1;
    bool operator==(const ModelComponent&) const = default;
};

// Averaged cdf F = (1/n) sum_i F_i over n = sum of repeats components.
class MixtureCdf {
public:
    explicit MixtureCdf(std::vector<ModelComponent> components);

    double cdf(double t) const;
    double cdf_left_limit(double t) const;
    // Left quantile by monotone bisection, absolute tolerance 1e-12*max(1,t),
    // at most 200 iterations; snapped onto component atoms.
    double quantile(double r) const;

    std::size_t size() const { return n_; }
    const std::vector<ModelComponent>& components() const { return components_; }

private:
    std::vector<ModelComponent> components_;
    std::size_t n_ = 0;
};

inline constexpr double kBisectionRelTol = 1e-12;
inline constexpr int kMaxBisectionSteps = 200;

} // namespace ostat
