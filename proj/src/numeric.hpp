#pragma once

#include "ostat/dist.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace ostat::numeric {

inline constexpr double kSqrt2 = 1.41421356237309504880;

// Bisection stops once the bracket is this narrow relative to its upper end.
// Tighter than kBisectionRelTol so results stay scale-equivariant at small scales.
inline constexpr double kBracketRelWidth = 1e-15;

// Left generalized inverse of a nondecreasing right-continuous function on
// [lo, hi], given f(lo) < r <= f(hi). Returns the first atom in (lo, hi]
// reaching r when the bracket straddles a jump.
template <class CdfFn>
double bisect_left_fn(CdfFn&& f, double r, double lo, double hi, std::vector<double> atoms) {
    for (int i = 0; i < kMaxBisectionSteps; ++i) {
        const double width = hi - lo;
        if (width <= kBracketRelWidth * hi) {
            break;
        }
        const double mid = lo + width / 2;
        if (!(mid > lo && mid < hi)) {
            break;
        }
        if (f(mid) >= r) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    std::sort(atoms.begin(), atoms.end());
    for (double a : atoms) {
        if (a > lo && a <= hi && f(a) >= r) {
            return a;
        }
    }
    return hi;
}

template <class Cdf>
double bisect_left(const Cdf& cdf, double r, double lo, double hi, std::vector<double> atoms) {
    return bisect_left_fn([&](double t) { return cdf.cdf(t); }, r, lo, hi, std::move(atoms));
}

// splitmix64 finalizer; used to derive independent per-replicate seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace ostat::numeric
