#pragma once

#include "ostat/order_stat.hpp"
#include "ostat/regularity.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ostat {

inline constexpr double kSandwichRelTol = 1e-9;
inline constexpr double kTailTolerance = 1e-12;

enum class TheoremVerdict { pass, fail, precondition_failed };
std::string_view to_string(TheoremVerdict v);
TheoremVerdict theorem_verdict_from_string(std::string_view name);

// Regularity evidence for one block of identical components.
struct ComponentCertificate {
    std::size_t index = 0;  // position in OrderStatModel::components()
    std::size_t repeat = 1;
    std::string description;
    RegularityCertificate certificate;  // summary only, points dropped
    bool operator==(const ComponentCertificate&) const = default;
};

// Median of the k-th smallest against the averaged-distribution quantile
// q = q_F((k - 1/2)/n): K^-10 q <= med <= K^13 q.
struct TheoremReport {
    double K = 0.0;
    std::size_t n = 0;
    std::size_t k = 0;
    double q = 0.0;
    double med = 0.0;
    double ratio = 0.0;  // med / q
    double lower = 0.0;  // K^-10
    double upper = 0.0;  // K^13
    bool sandwich_holds = false;
    // Median-convention-free form: P(k-min < K^-10 q) < 1/2 < P(k-min <= K^13 q).
    double prob_below_lower = 0.0;
    double prob_at_most_upper = 0.0;
    bool one_sided_holds = false;
    bool components_pass = false;
    TheoremVerdict verdict = TheoremVerdict::fail;
    std::string quantile_convention = "left";
    std::vector<ComponentCertificate> components;
    bool operator==(const TheoremReport&) const = default;
};

struct TheoremOptions {
    GridSpec grid;
    unsigned threads = 1;
};

TheoremReport verify_theorem(const OrderStatModel& m, double K, const TheoremOptions& opts = {});

// Regularity certificates for every component block at K (points dropped).
std::vector<ComponentCertificate> certify_components(const OrderStatModel& m, double K,
                                                     const GridSpec& grid, unsigned threads = 1);

enum class TailSide { lower, upper };
std::string_view to_string(TailSide side);
TailSide tail_side_from_string(std::string_view name);

struct TailBoundRow {
    double t = 0.0;
    TailSide side = TailSide::lower;
    double threshold = 0.0;   // t * q
    double exact_prob = 0.0;  // P(k-min < t q) or P(k-min > t q)
    double bound = 0.0;       // 4 t^{1/(4 ln K)} or 4 t^{-1/(6 ln K)}
    bool vacuous = false;     // bound >= 1
    bool passed = false;      // exact_prob <= bound + 1e-12
    bool operator==(const TailBoundRow&) const = default;
};

// 4 t^{1/(4 ln K)} and 4 t^{-1/(6 ln K)}, natural logarithm.
double lower_tail_bound(double t, double K);
double upper_tail_bound(double t, double K);

// {K^-(5+j)} and {K^(5+j)} for j = 1..count.
std::vector<double> default_tail_grid(TailSide side, double K, int count = 10);

struct TailOptions {
    // Multiplies every bound before comparison. Test hook for the exit-code
    // contract; 1 in normal use.
    double bound_scale = 1.0;
    unsigned threads = 1;
};

// Rows sorted by t. Throws DomainError for t outside (0, K^-5) resp. (K^5, inf).
std::vector<TailBoundRow> verify_lower_tail(const OrderStatModel& m, double K,
                                            std::span<const double> t_grid,
                                            const TailOptions& opts = {});
std::vector<TailBoundRow> verify_upper_tail(const OrderStatModel& m, double K,
                                            std::span<const double> t_grid,
                                            const TailOptions& opts = {});

// Tail rows together with the regularity precondition they rely on.
struct TailReport {
    double K = 0.0;
    std::size_t n = 0;
    std::size_t k = 0;
    double q = 0.0;
    bool components_pass = false;
    bool rows_pass = false;
    std::vector<ComponentCertificate> components;
    std::vector<TailBoundRow> rows;
    bool operator==(const TailReport&) const = default;
};

TailReport verify_tails(const OrderStatModel& m, double K, std::span<const TailSide> sides,
                        std::span<const double> t_grid, const GridSpec& grid,
                        const TailOptions& opts = {});

} // namespace ostat
