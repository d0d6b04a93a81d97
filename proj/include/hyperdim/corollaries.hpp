#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "dimension_search.hpp"
#include "errors.hpp"
#include "exact_linalg.hpp"

namespace hyperdim {

inline constexpr std::size_t kBipartitionScanLimit = 22;

struct Verdict {
    // Absent when the arrangement is too large for the bipartition scan.
    std::optional<bool> finiteness;
    std::optional<int> gp_bound;
    std::optional<bool> gp_bound_achieved;
};

/// All integral-point sets finite (equivalently, the complement is Brody
/// hyperbolic): the hyperplanes have no common point, and for every proper
/// nonempty subset L1 some form lies in (L1) ∩ (L \ L1).
inline bool finiteness_verdict(const Arrangement& a) {
    const std::size_t r = a.size();
    if (r > kBipartitionScanLimit)
        throw PreconditionError("finiteness scan is limited to " +
                                std::to_string(kBipartitionScanLimit) + " forms");
    if (compute_m(a) != -1) return false;

    const BlockMask all = (BlockMask{1} << r) - 1;
    // The test is symmetric in L1 and its complement, so fix form 0 in L1.
    for (BlockMask first = 1; first < all; first += 2) {
        std::vector<std::size_t> in, out;
        for (std::size_t i = 0; i < r; ++i) (first >> i & 1U ? in : out).push_back(i);
        const FormSpace meet = intersect(a.span_of(in), a.span_of(out));
        bool hit = false;
        for (std::size_t i = 0; i < r && !hit; ++i) hit = meet.contains(a.form(i).coeffs());
        if (!hit) return false;
    }
    return true;
}

/// floor(s / (r - s)) when r > s.
inline std::optional<int> general_position_bound(const Arrangement& a) {
    const auto r = static_cast<long>(a.size());
    const auto s = static_cast<long>(compute_s(a));
    if (r <= s) return std::nullopt;
    return static_cast<int>(s / (r - s));
}

inline Verdict verdict(const Arrangement& a) {
    Verdict v;
    if (a.size() <= kBipartitionScanLimit) v.finiteness = finiteness_verdict(a);
    v.gp_bound = general_position_bound(a);
    if (v.gp_bound) v.gp_bound_achieved = compute_s(a) == static_cast<std::size_t>(a.n());
    return v;
}

/// Disagreements between a dimension report and the closed-form verdicts.
/// Empty when everything is consistent.
inline std::vector<std::string> cross_check(const Arrangement& a, const DimensionReport& report) {
    std::vector<std::string> issues;
    if (a.size() <= kBipartitionScanLimit) {
        const bool finite = finiteness_verdict(a);
        if (finite != (report.d_max <= 0))
            issues.push_back("finiteness verdict is " + std::string(finite ? "true" : "false") +
                             " but d_max = " + std::to_string(report.d_max));
    }
    const std::size_t s = compute_s(a);
    const std::size_t r = a.size();
    if (r > s) {
        const int bound = static_cast<int>(s / (r - s));
        if (report.d_max > bound)
            issues.push_back("d_max = " + std::to_string(report.d_max) +
                             " exceeds floor(s/(r-s)) = " + std::to_string(bound));
        if (s == static_cast<std::size_t>(a.n()) && report.d_max != bound)
            issues.push_back("general position: d_max = " + std::to_string(report.d_max) +
                             " but the bound " + std::to_string(bound) + " is attained");
    }
    return issues;
}

}  // namespace hyperdim
