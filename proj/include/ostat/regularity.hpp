#pragma once

#include "ostat/dist.hpp"
#include "ostat/error.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace ostat {

// Log-spaced evaluation grid on [t_min, t_max].
struct GridSpec {
    double t_min = 1e-6;
    double t_max = 1e6;
    int points_per_decade = 64;
    bool operator==(const GridSpec&) const = default;
};

std::vector<double> log_grid(const GridSpec& grid);

// Which inequality a certificate is about. All are checked cross-multiplied,
// lhs >= rhs, so that odds of 1/0 need no special case.
//   condition     F(Kt)(1-F(t))      >= 2 F(t)(1-F(Kt))
//   measure_form  F(Kt) - F(t)       >= F(t)(1-F(Kt))
//   weak          F(t)               >= 2 F(t/K^2)                 where F(t) <= 1/2
//   growth_odds   F(t)               >= 2^l (1-F(t)) F(t/K^l)
//   growth_tail   1 - F(t/K^l)       >= 2^l/(2^l g + 1) (1-F(t))   where F(t) >= 1-g
enum class Inequality { condition, measure_form, weak, growth_odds, growth_tail };

std::string_view to_string(Inequality form);
Inequality inequality_from_string(std::string_view name);

struct GridPoint {
    double t;
    double lhs;
    double rhs;
    bool applicable = true;

    double margin() const { return lhs - rhs; }
    bool operator==(const GridPoint&) const = default;
};

struct Witness {
    double t;
    double lhs;
    double rhs;
    bool operator==(const Witness&) const = default;
};

inline constexpr double kMarginTolerance = 1e-12;

// Grid evidence for one inequality. A pass is necessary evidence on the
// evaluated points only, never a proof for every t > 0.
struct RegularityCertificate {
    Inequality inequality = Inequality::condition;
    double K = 0.0;
    GridSpec grid;
    int ell = 0;         // growth forms only
    double gamma = 0.0;  // growth_tail only
    bool passed = false;
    // Minimum of lhs - rhs over applicable points (+inf when none apply).
    double margin = 0.0;
    std::optional<Witness> witness;  // worst violation, present iff !passed
    std::size_t evaluated = 0;
    std::vector<GridPoint> points;

    static constexpr std::string_view scope =
        "necessary evidence on a finite grid, not a proof for all t>0";

    bool operator==(const RegularityCertificate&) const = default;
};

// Raised when an operation's regularity precondition does not hold.
class PreconditionError : public Error {
public:
    PreconditionError(const std::string& what, RegularityCertificate failed)
        : Error(what), certificate_(std::move(failed)) {}
    const RegularityCertificate& certificate() const { return certificate_; }

private:
    RegularityCertificate certificate_;
};

struct CheckOptions {
    unsigned threads = 1;
    bool keep_points = true;
};

RegularityCertificate check_condition(const Distribution& d, double K, const GridSpec& grid = {},
                                      const CheckOptions& opts = {});
RegularityCertificate check_measure_form(const Distribution& d, double K,
                                         const GridSpec& grid = {}, const CheckOptions& opts = {});
RegularityCertificate check_weak_condition(const Distribution& d, double K,
                                           const GridSpec& grid = {},
                                           const CheckOptions& opts = {});

struct MinKResult {
    bool found = false;
    double K = 0.0;  // smallest passing K found, to within tol
    double K_lo = 0.0;
    double K_hi = 0.0;
    double tol = 0.0;
    int checks = 0;
    // The bisection relies on pass(K) => pass(K') for K' > K.
    bool monotonicity_assumed = true;
    bool operator==(const MinKResult&) const = default;
};

MinKResult find_min_K(const Distribution& d, const GridSpec& grid, double K_lo, double K_hi,
                      double tol, const CheckOptions& opts = {});

struct GrowthReport {
    double K = 0.0;
    int ell = 0;
    double gamma = 0.0;
    bool passed = false;
    RegularityCertificate odds;  // growth_odds
    RegularityCertificate tail;  // growth_tail
    bool operator==(const GrowthReport&) const = default;
};

// Iterated-odds consequences of the condition at step K^ell. Throws
// PreconditionError (carrying the failed certificate) unless d passes
// check_condition at K on the same grid.
GrowthReport check_lemma_growth(const Distribution& d, double K, int ell, double gamma,
                                const GridSpec& grid = {}, const CheckOptions& opts = {});

// Condition at K = 3 for the absolute value of a log-concave law; accepts the
// exponential, half-Gaussian and uniform families only.
RegularityCertificate check_logconcave_k3(const Distribution& d, const GridSpec& grid = {},
                                          const CheckOptions& opts = {});

} // namespace ostat
