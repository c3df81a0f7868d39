#pragma once

#include "ostat/bounds.hpp"
#include "ostat/mc.hpp"
#include "ostat/regularity.hpp"

#include <span>
#include <string>
#include <string_view>

namespace ostat::io {

// Every real is written with 17 significant digits; non-finite values are
// written as the strings "inf", "-inf" and "nan".

std::string to_json(const RegularityCertificate& c);
std::string to_json(const MinKResult& r);
std::string to_json(const GrowthReport& r);
std::string to_json(const TheoremReport& r);
std::string to_json(const TailReport& r);
std::string to_json(const mc::SimResult& r);

RegularityCertificate certificate_from_json(std::string_view text);
MinKResult min_k_from_json(std::string_view text);
GrowthReport growth_from_json(std::string_view text);
TheoremReport theorem_from_json(std::string_view text);
TailReport tail_report_from_json(std::string_view text);
mc::SimResult sim_result_from_json(std::string_view text);

// Header t,lhs,rhs,margin,verdict; verdict is pass, fail or skip (point
// outside the inequality's scope).
std::string to_csv(const RegularityCertificate& c);
// Header t,side,threshold,exact_prob,bound,verdict.
std::string to_csv(std::span<const TailBoundRow> rows);

inline constexpr std::string_view kCertificateCsvHeader = "t,lhs,rhs,margin,verdict";
inline constexpr std::string_view kTailCsvHeader = "t,side,threshold,exact_prob,bound,verdict";

std::string format_real(double v);

} // namespace ostat::io
