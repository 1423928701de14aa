#pragma once

// Shared helpers for the test suites: the supported parameter grid and a
// generator of random (usually meaningless) schemes for oracle-equivalence
// checks.

#include <random>
#include <set>
#include <vector>

#include "sldic/scheme.hpp"

namespace sldic::test {

/// Every supported (m, n, C) with 1 <= m <= max_m, n chosen per supported
/// regime (weak, moderate, unity, very high with n = 2m and even m), and
/// 0 <= C <= n.
inline std::vector<ChannelParams> supported_grid(int max_m) {
    std::vector<ChannelParams> grid;
    for (int m = 1; m <= max_m; ++m) {
        std::vector<int> ns;
        for (int n = 0; n <= m; ++n) ns.push_back(n);  // weak, moderate or unity
        if (m % 2 == 0) ns.push_back(2 * m);           // very high, alpha = 2
        for (int n : ns)
            for (int c = 0; c <= n; ++c) grid.push_back({m, n, c});
    }
    return grid;
}

/// A random linear scheme: arbitrary generators over a small layout, with a
/// ledger derived from actual usage (declared at first use). Only meant for
/// rank-vs-enumeration agreement checks; rates and budgets are meaningless.
inline SchemeDescription random_scheme(std::mt19937& rng) {
    std::uniform_int_distribution<int> mn(0, 5);
    int m = 0, n = 0;
    while (m == 0 && n == 0) {
        m = mn(rng);
        n = mn(rng);
    }
    SchemeDescription s;
    s.params = {m, n, static_cast<int>(rng() % 6)};
    s.regime = classify_regime(s.params);

    std::uniform_int_distribution<std::size_t> seg(0, 4);
    do {
        s.layout = {seg(rng), seg(rng), seg(rng), seg(rng)};
    } while (s.layout.total() > 16);

    const std::size_t q = static_cast<std::size_t>(s.params.q());
    const std::size_t slots = 1 + rng() % 2;
    std::bernoulli_distribution bit(rng() % 2 == 0 ? 0.25 : 0.5);
    std::set<std::size_t> seen_tx1, seen_tx2;
    for (std::size_t k = 0; k < slots; ++k) {
        TimeSlot slot{BitMatrix(q, s.layout.total()), BitMatrix(q, s.layout.total())};
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t c = 0; c < s.layout.total(); ++c) {
                if (bit(rng)) slot.g1.set(r, c, true);
                if (bit(rng)) slot.g2.set(r, c, true);
            }
        CoopUsage u;
        const auto& lay = s.layout;
        for (std::size_t i = 0; i < lay.w2_len; ++i)
            if (!slot.g1.column_is_zero(lay.w2_col(i)) && seen_tx1.insert(lay.w2_col(i)).second)
                u.w2_to_tx1.push_back(i);
        for (std::size_t i = 0; i < lay.e_len; ++i)
            if (!slot.g1.column_is_zero(lay.e_col(i)) && seen_tx1.insert(lay.e_col(i)).second)
                u.e_to_tx1.push_back(i);
        for (std::size_t i = 0; i < lay.w1_len; ++i)
            if (!slot.g2.column_is_zero(lay.w1_col(i)) && seen_tx2.insert(lay.w1_col(i)).second)
                u.w1_to_tx2.push_back(i);
        for (std::size_t i = 0; i < lay.d_len; ++i)
            if (!slot.g2.column_is_zero(lay.d_col(i)) && seen_tx2.insert(lay.d_col(i)).second)
                u.d_to_tx2.push_back(i);
        s.slots.push_back(std::move(slot));
        s.coop_ledger.push_back(std::move(u));
    }
    s.rate = {static_cast<std::int64_t>(s.layout.w1_len),
              static_cast<std::int64_t>(s.slots.size())};
    return s;
}

}  // namespace sldic::test
