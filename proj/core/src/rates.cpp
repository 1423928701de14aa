#include "sldic/rates.hpp"

#include "sldic/analysis.hpp"
#include "sldic/errors.hpp"

namespace sldic {

std::string to_string(CrossCheck c) {
    switch (c) {
        case CrossCheck::yes: return "yes";
        case CrossCheck::no: return "no";
        case CrossCheck::na: return "na";
    }
    return "unknown";
}

RateResult formula_rate(const ChannelParams& p) {
    const Regime regime = classify_regime(p);
    if (p.m == 0) return {0, 1};  // cross link only, nothing decodable
    const int c = p.effective_coop();
    switch (regime) {
        case Regime::weak:
            return {p.m - p.n + c, 1};
        case Regime::moderate: {
            const auto bd = moderate_breakdown(p);
            return {bd.r2 + bd.full_blocks * bd.r2 + bd.extra_data + c, 1};
        }
        case Regime::unity:
            return {0, 1};
        case Regime::high:
            throw UnsupportedCaseError("high", "1 < alpha < 2 rates are deferred");
        case Regime::very_high: {
            if (p.m % 2 != 0 || p.n != 2 * p.m)
                throw UnsupportedCaseError(
                    "very_high", "alpha >= 2 rates are known only for alpha = 2 with even m");
            if (c == 0) return {0, 1};
            if (2 * c <= p.m) return {c, 1};
            if (2 * c < 3 * p.m) return {2 * p.m + (c - p.m / 2), 2};  // m + (c - m/2)/2
            return {c, 1};
        }
    }
    throw RegimeError("formula_rate: unreachable");
}

std::vector<RatePoint> sweep(int m, int n, int cmax, std::uint64_t max_states) {
    if (cmax < 0) throw ParameterError("sweep: cmax must be nonnegative");
    std::vector<RatePoint> points;
    points.reserve(static_cast<std::size_t>(cmax) + 1);
    for (int c = 0; c <= cmax; ++c) {
        const ChannelParams p{m, n, c};
        RatePoint pt;
        pt.C = c;
        pt.regime = classify_regime(p);
        try {
            pt.rate = formula_rate(p);
            pt.supported = true;
        } catch (const UnsupportedCaseError&) {
            pt.supported = false;
            pt.verified = CrossCheck::na;
            points.push_back(pt);
            continue;
        }
        // Cross-certification: the constructed scheme must count the same
        // delivered bits and pass the verifier.
        const SchemeDescription s = build(p);
        const bool rate_match = s.rate.value() == pt.rate.value();
        const bool ok = rate_match && validate_budget(s) && verify(s, max_states).all_pass();
        pt.verified = ok ? CrossCheck::yes : CrossCheck::no;
        points.push_back(pt);
    }
    return points;
}

}  // namespace sldic
