#include "ostat/oracle.hpp"

#include "ostat/error.hpp"
#include "ostat/order_stat.hpp"
#include "ostat/pbin.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ostat::oracle {

double iid_uniform_kmin_cdf(std::size_t n, std::size_t k, double t) {
    if (n > 60 || k < 1 || k > n) {
        throw DomainError("binomial-sum oracle needs 1 <= k <= n <= 60");
    }
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double sum = 0.0;
    double binom = 1.0;  // C(n, j)
    for (std::size_t j = 0; j <= n; ++j) {
        if (j > 0) binom = binom * static_cast<double>(n - j + 1) / static_cast<double>(j);
        if (j >= k) {
            sum += binom * std::pow(t, static_cast<double>(j)) *
                   std::pow(1.0 - t, static_cast<double>(n - j));
        }
    }
    return sum;
}

OracleReport run_oracles(std::uint64_t seed, std::size_t vectors, std::size_t max_n,
                         std::size_t beta_max_n) {
    if (max_n < 1 || max_n > pbin::kBruteForceMaxTrials) {
        throw DomainError("oracle vector length must lie in 1..20");
    }
    OracleReport rep;
    rep.seed = seed;
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::size_t> len(1, max_n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> kind(0, 9);
    for (std::size_t v = 0; v < vectors; ++v) {
        const std::size_t n = len(gen);
        std::vector<double> p(n);
        for (auto& x : p) {
            // Mostly interior probabilities with the occasional certain trial.
            const int c = kind(gen);
            x = c == 0 ? 0.0 : c == 1 ? 1.0 : unit(gen);
        }
        const pbin::SuccessVector sv(p);
        const auto dist = pbin::pmf(sv);
        double above = 0.0;
        for (std::size_t k = n + 1; k-- > 0;) {
            const double brute = pbin::brute_force_tail(sv, k);
            rep.max_tail_discrepancy =
                std::max(rep.max_tail_discrepancy, std::abs(pbin::tail_at_least(sv, k) - brute));
            if (k <= n) {
                // P(S = k) = P(S >= k) - P(S >= k+1) on the enumerated values.
                rep.max_pmf_discrepancy = std::max(rep.max_pmf_discrepancy, std::abs(dist[k] - (brute - above)));
            }
            above = brute;
        }
        ++rep.vectors;
    }
    for (std::size_t n = 1; n <= beta_max_n; ++n) {
        const OrderStatModel m({{Distribution::uniform01(), n}}, 1);
        for (std::size_t k = 1; k <= n; ++k) {
            const auto mk = m.with_rank(k);
            for (int i = 1; i <= 9; ++i) {
                const double t = i / 10.0;
                rep.max_beta_discrepancy = std::max(
                    rep.max_beta_discrepancy, std::abs(kmin_cdf(mk, t) - iid_uniform_kmin_cdf(n, k, t)));
                ++rep.beta_cases;
            }
        }
    }
    rep.passed = rep.max_tail_discrepancy <= kTailOracleTolerance &&
                 rep.max_pmf_discrepancy <= kTailOracleTolerance &&
                 rep.max_beta_discrepancy <= kBetaOracleTolerance;
    return rep;
}

} // namespace ostat::oracle
