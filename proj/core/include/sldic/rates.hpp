#pragma once

// Closed-form achievable secrecy rates per regime, and a sweep over the
// cooperation capacity with per-point cross-certification by the verifier.

#include <string>
#include <vector>

#include "sldic/channel.hpp"
#include "sldic/scheme.hpp"

namespace sldic {

enum class CrossCheck { yes, no, na };

std::string to_string(CrossCheck c);

struct RatePoint {
    int C = 0;
    RateResult rate;
    Regime regime = Regime::weak;
    bool supported = false;
    CrossCheck verified = CrossCheck::na;
};

/// Symmetric secrecy rate of the constructed scheme for p, in closed form.
/// With c = min{n, C} (excess cooperation is discarded):
///   weak      m - n + c
///   moderate  m - n + B(m-n) + q_extra + c
///   unity     0
///   very high (n = 2m, even m): 0 at c = 0; c for 0 < c <= m/2;
///             m + (c - m/2)/2 for m/2 < c < 3m/2; c for 3m/2 <= c <= n
/// Throws UnsupportedCaseError for the deferred regimes.
RateResult formula_rate(const ChannelParams& p);

/// One RatePoint per C in [0, cmax]. Unsupported regimes yield
/// supported = false entries rather than failures. Supported points are
/// cross-certified by building the scheme, checking its counted rate against
/// the formula and running the verifier (enumeration included whenever the
/// state space fits max_states).
std::vector<RatePoint> sweep(int m, int n, int cmax,
                             std::uint64_t max_states = std::uint64_t{1} << 20);

}  // namespace sldic
