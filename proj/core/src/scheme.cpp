#include "sldic/scheme.hpp"

#include <algorithm>
#include <set>

#include "sldic/errors.hpp"

namespace sldic {

namespace {

// Levels are numbered from the bottom-most entry; entry 0 is the top.
std::size_t level_row(int q, int level) { return static_cast<std::size_t>(q - level); }

SchemeDescription zero_scheme(const ChannelParams& p, Regime regime) {
    SchemeDescription s;
    s.params = p;
    s.regime = regime;
    const auto q = static_cast<std::size_t>(p.q());
    s.slots.push_back({BitMatrix(q, 0), BitMatrix(q, 0)});
    s.coop_ledger.emplace_back();
    s.rate = {0, 1};
    return s;
}

std::vector<std::size_t> index_range(std::size_t first, std::size_t count) {
    std::vector<std::size_t> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = first + i;
    return v;
}

}  // namespace

std::string to_string(Regime r) {
    switch (r) {
        case Regime::weak: return "weak";
        case Regime::moderate: return "moderate";
        case Regime::unity: return "unity";
        case Regime::high: return "high";
        case Regime::very_high: return "very_high";
    }
    return "unknown";
}

Regime classify_regime(const ChannelParams& p) {
    validate(p);
    if (p.m == 0 && p.n == 0)
        throw DegenerateChannelError("classify_regime: m = n = 0 has no signal path");
    if (p.m == 0) return Regime::very_high;
    if (3 * p.n <= 2 * p.m) return Regime::weak;  // alpha <= 2/3, includes n = 0
    if (p.n < p.m) return Regime::moderate;
    if (p.n == p.m) return Regime::unity;
    if (p.n < 2 * p.m) return Regime::high;
    return Regime::very_high;
}

ModerateBreakdown moderate_breakdown(const ChannelParams& p) {
    if (classify_regime(p) != Regime::moderate)
        throw RegimeError("moderate_breakdown: parameters not in 2/3 < alpha < 1");
    ModerateBreakdown bd;
    bd.r1 = bd.r2 = p.m - p.n;
    bd.type3 = 2 * p.n - p.m;
    bd.coop = p.effective_coop();
    bd.usable = std::max(0, p.n - (bd.r2 + bd.coop));
    bd.full_blocks = bd.usable / (3 * bd.r2);
    bd.remainder = bd.usable % (3 * bd.r2);
    bd.extra_data = std::min(std::max(0, bd.remainder - bd.r2), bd.r2);
    return bd;
}

SchemeDescription build_weak(const ChannelParams& p) {
    if (classify_regime(p) != Regime::weak)
        throw RegimeError("build_weak: parameters not in 0 <= alpha <= 2/3");
    const int q = p.q();  // = m
    const int r = p.m - p.n;
    const int c = p.effective_coop();

    SchemeDescription s;
    s.params = p;
    s.regime = Regime::weak;
    s.layout.w1_len = s.layout.w2_len = static_cast<std::size_t>(r + c);
    const auto& lay = s.layout;

    BitMatrix g1(static_cast<std::size_t>(q), lay.total());
    BitMatrix g2(static_cast<std::size_t>(q), lay.total());
    // Own data bits on levels [1 : r+c]; the bit at level k maps to message
    // column k-1, so the two users' column layouts mirror each other.
    for (int k = 1; k <= r + c; ++k) {
        g1.set(level_row(q, k), lay.w1_col(k - 1), true);
        g2.set(level_row(q, k), lay.w2_col(k - 1), true);
    }
    // Cooperative bits: the peer's data headed for levels [r+1 : r+c] arrives
    // shifted down by r, so XOR-ing it onto levels [1 : c] cancels it there.
    for (int k = 1; k <= c; ++k) {
        g1.set(level_row(q, k), lay.w2_col(r + k - 1), true);
        g2.set(level_row(q, k), lay.w1_col(r + k - 1), true);
    }

    s.slots.push_back({std::move(g1), std::move(g2)});
    CoopUsage usage;
    usage.w2_to_tx1 = index_range(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    usage.w1_to_tx2 = usage.w2_to_tx1;
    s.coop_ledger.push_back(std::move(usage));
    s.rate = {r + c, 1};
    return s;
}

SchemeDescription build_moderate(const ChannelParams& p) {
    if (classify_regime(p) != Regime::moderate)
        throw RegimeError("build_moderate: parameters not in 2/3 < alpha < 1");
    const auto bd = moderate_breakdown(p);
    const int q = p.q();  // = m
    const int m = p.m;
    const int r2 = bd.r2;
    const int c = bd.coop;

    // Levels carrying data and own-random bits, bottom up. The bottom
    // r2 + c levels are the precoded data of the weak scheme. Above a gap of
    // r2 zero levels, full blocks of (data r2 | random r2 | zero r2) descend
    // from level m; a bit sent on any level lands r2 levels lower at the
    // unintended receiver, so each data band lands on the random band of the
    // same block there, while at the intended receiver it lands on the zero
    // band of the block above.
    std::vector<int> data_levels, random_levels;
    for (int k = 1; k <= r2 + c; ++k) data_levels.push_back(k);
    for (int b = 0; b < bd.full_blocks; ++b) {
        const int top = m - 3 * b * r2;
        for (int k = top - r2 + 1; k <= top; ++k) data_levels.push_back(k);
        for (int k = top - 2 * r2 + 1; k <= top - r2; ++k) random_levels.push_back(k);
    }
    if (bd.extra_data > 0) {
        // Partial block: extra_data data bits at its top, the matching random
        // band exactly r2 below, zeros elsewhere.
        const int ptop = m - 3 * bd.full_blocks * r2;
        for (int k = ptop - bd.extra_data + 1; k <= ptop; ++k) data_levels.push_back(k);
        const int rtop = ptop - r2;
        for (int k = rtop - bd.extra_data + 1; k <= rtop; ++k) random_levels.push_back(k);
    }
    std::sort(data_levels.begin(), data_levels.end());
    std::sort(random_levels.begin(), random_levels.end());

    SchemeDescription s;
    s.params = p;
    s.regime = Regime::moderate;
    s.layout.w1_len = s.layout.w2_len = data_levels.size();
    s.layout.d_len = s.layout.e_len = random_levels.size();
    const auto& lay = s.layout;

    BitMatrix g1(static_cast<std::size_t>(q), lay.total());
    BitMatrix g2(static_cast<std::size_t>(q), lay.total());
    for (std::size_t i = 0; i < data_levels.size(); ++i) {
        g1.set(level_row(q, data_levels[i]), lay.w1_col(i), true);
        g2.set(level_row(q, data_levels[i]), lay.w2_col(i), true);
    }
    for (int k = 1; k <= c; ++k) {
        // Peer data headed for levels [r2+1 : r2+c] is canceled at [1 : c],
        // exactly as in the weak scheme.
        g1.set(level_row(q, k), lay.w2_col(r2 + k - 1), true);
        g2.set(level_row(q, k), lay.w1_col(r2 + k - 1), true);
    }
    for (std::size_t i = 0; i < random_levels.size(); ++i) {
        g1.set(level_row(q, random_levels[i]), lay.d_col(i), true);
        g2.set(level_row(q, random_levels[i]), lay.e_col(i), true);
    }

    s.slots.push_back({std::move(g1), std::move(g2)});
    CoopUsage usage;
    usage.w2_to_tx1 = index_range(static_cast<std::size_t>(r2), static_cast<std::size_t>(c));
    usage.w1_to_tx2 = usage.w2_to_tx1;
    s.coop_ledger.push_back(std::move(usage));
    s.rate = {static_cast<std::int64_t>(data_levels.size()), 1};
    return s;
}

SchemeDescription build_unity(const ChannelParams& p) {
    validate(p);
    // Both receivers see x1 xor x2; no message bit can be both decodable and
    // secret, so the scheme is empty.
    return zero_scheme(p, Regime::unity);
}

SchemeDescription build_very_high_alpha2(const ChannelParams& p) {
    if (classify_regime(p) != Regime::very_high)
        throw RegimeError("build_very_high_alpha2: parameters not in alpha >= 2");
    if (p.m == 0 || p.m % 2 != 0 || p.n != 2 * p.m)
        throw UnsupportedCaseError(
            "very_high", "only alpha = 2 with even m is constructed; other cases are deferred");
    const int m = p.m;
    const int q = p.n;  // = 2m
    const int c = p.effective_coop();

    if (c == 0) {
        // Levels [1 : m] never reach the own receiver and levels [m+1 : n]
        // arrive clean at the unintended one; without cooperation nothing
        // can be sent securely.
        return zero_scheme(p, Regime::very_high);
    }

    SchemeDescription s;
    s.params = p;
    s.regime = Regime::very_high;

    if (c <= m / 2) {
        // Only random bits are shared. Each transmitter sends c data bits on
        // levels [m+1 : m+c], masked with the peer's shared random bits; the
        // peer sends the masking bits of the other direction on levels
        // [1 : c], where they cross cleanly and cancel at the intended
        // receiver while never reaching the unintended one.
        s.layout = {static_cast<std::size_t>(c), static_cast<std::size_t>(c),
                    static_cast<std::size_t>(c), static_cast<std::size_t>(c)};
        const auto& lay = s.layout;
        BitMatrix g1(static_cast<std::size_t>(q), lay.total());
        BitMatrix g2(static_cast<std::size_t>(q), lay.total());
        for (int j = 1; j <= c; ++j) {
            g1.set(level_row(q, m + j), lay.w1_col(j - 1), true);
            g1.set(level_row(q, m + j), lay.e_col(j - 1), true);
            g1.set(level_row(q, j), lay.d_col(j - 1), true);
            g2.set(level_row(q, m + j), lay.w2_col(j - 1), true);
            g2.set(level_row(q, m + j), lay.d_col(j - 1), true);
            g2.set(level_row(q, j), lay.e_col(j - 1), true);
        }
        s.slots.push_back({std::move(g1), std::move(g2)});
        CoopUsage usage;
        usage.e_to_tx1 = index_range(0, static_cast<std::size_t>(c));
        usage.d_to_tx2 = index_range(0, static_cast<std::size_t>(c));
        s.coop_ledger.push_back(std::move(usage));
        s.rate = {c, 1};
        return s;
    }

    if (c < 3 * m / 2) {
        // Mixed sharing with time sharing: per slot each direction shares m/2
        // random bits plus c1 data bits. The jamming transmitter sends the m
        // shared random bits interleaved on [1 : m] (own pool on odd levels),
        // its own m-c1 data bits masked by the first m-c1 of them on
        // [m+1 : n-c1], and the peer's c1 relayed bits on top. The bulk
        // transmitter masks its m data bits with the same interleave on
        // [m+1 : 2m], merges relay and cancelation on [m-c1+1 : m], and
        // cancels the jammer's masks on [1 : m-c1]. Roles swap in slot 2.
        const int c1 = c - m / 2;
        const int half = m / 2;
        const std::size_t w_len = static_cast<std::size_t>(2 * m + c1);
        s.layout = {w_len, w_len, static_cast<std::size_t>(m), static_cast<std::size_t>(m)};
        const auto& lay = s.layout;

        // Message column plan per user: [s1 bits | s2 bits], each slot's bits
        // ordered direct-then-relayed, levels ascending within a band.
        // Jamming-role slot delivers m - c1 direct + c1 relayed; bulk-role
        // slot delivers m direct + c1 relayed.
        const std::size_t jam_direct = static_cast<std::size_t>(m - c1);
        const std::size_t bulk_direct = static_cast<std::size_t>(m);
        const std::size_t relayed = static_cast<std::size_t>(c1);

        for (int slot = 0; slot < 2; ++slot) {
            const bool tx1_jams = (slot == 0);
            BitMatrix g_jam(static_cast<std::size_t>(q), lay.total());
            BitMatrix g_bulk(static_cast<std::size_t>(q), lay.total());

            // Message column offsets: the slot-2 jammer was the bulk sender
            // of slot 1 and already consumed m + c1 columns, and vice versa.
            const std::size_t jam_msg_off = (slot == 0) ? 0 : (bulk_direct + relayed);
            const std::size_t bulk_msg_off = (slot == 0) ? 0 : (jam_direct + relayed);

            // Random pool of this slot: [slot*half, slot*half + half).
            const std::size_t pool = static_cast<std::size_t>(slot) * static_cast<std::size_t>(half);
            // interleave[j-1] = column of the shared random bit on level j;
            // the jammer's own pool sits on odd levels.
            std::vector<std::size_t> interleave(static_cast<std::size_t>(m));
            for (int j = 1; j <= m; ++j) {
                const std::size_t k = pool + static_cast<std::size_t>((j - 1) / 2);
                const bool own_pool = (j % 2 == 1);
                if (tx1_jams)
                    interleave[j - 1] = own_pool ? lay.d_col(k) : lay.e_col(k);
                else
                    interleave[j - 1] = own_pool ? lay.e_col(k) : lay.d_col(k);
            }
            const auto jam_msg_col = [&](std::size_t i) {
                return tx1_jams ? lay.w1_col(jam_msg_off + i) : lay.w2_col(jam_msg_off + i);
            };
            const auto bulk_msg_col = [&](std::size_t i) {
                return tx1_jams ? lay.w2_col(bulk_msg_off + i) : lay.w1_col(bulk_msg_off + i);
            };

            // Jammer: interleaved randoms on [1 : m].
            for (int j = 1; j <= m; ++j) g_jam.set(level_row(q, j), interleave[j - 1], true);
            // Jammer's own data, masked, on [m+1 : n-c1].
            for (int j = 1; j <= m - c1; ++j) {
                g_jam.set(level_row(q, m + j), jam_msg_col(j - 1), true);
                g_jam.set(level_row(q, m + j), interleave[j - 1], true);
            }
            // Bulk user's relayed bits on the jammer's top levels.
            for (int j = 1; j <= c1; ++j)
                g_jam.set(level_row(q, q - c1 + j), bulk_msg_col(bulk_direct + j - 1), true);

            // Bulk: cancel the jammer's masks on [1 : m-c1].
            for (int j = 1; j <= m - c1; ++j)
                g_bulk.set(level_row(q, j), interleave[j - 1], true);
            // Relay of the jammer's bits merged with self-cancelation on
            // [m-c1+1 : m]: the same bits the jammer sends on top, XOR the
            // jammer-user's relayed message bits.
            for (int j = 1; j <= c1; ++j) {
                g_bulk.set(level_row(q, m - c1 + j), bulk_msg_col(bulk_direct + j - 1), true);
                g_bulk.set(level_row(q, m - c1 + j), jam_msg_col(jam_direct + j - 1), true);
            }
            // Bulk data masked by the full interleave on [m+1 : 2m].
            for (int j = 1; j <= m; ++j) {
                g_bulk.set(level_row(q, m + j), bulk_msg_col(j - 1), true);
                g_bulk.set(level_row(q, m + j), interleave[j - 1], true);
            }

            CoopUsage usage;
            const auto pool_cols = index_range(pool, static_cast<std::size_t>(half));
            const auto jam_relay_cols = index_range(jam_msg_off + jam_direct, relayed);
            const auto bulk_relay_cols = index_range(bulk_msg_off + bulk_direct, relayed);
            if (tx1_jams) {
                s.slots.push_back({std::move(g_jam), std::move(g_bulk)});
                usage.e_to_tx1 = pool_cols;           // peer randoms for the interleave
                usage.w2_to_tx1 = bulk_relay_cols;    // bits tx1 relays on top
                usage.d_to_tx2 = pool_cols;           // jammer randoms to cancel/mask
                usage.w1_to_tx2 = jam_relay_cols;     // bits tx2 relays
            } else {
                s.slots.push_back({std::move(g_bulk), std::move(g_jam)});
                usage.d_to_tx2 = pool_cols;
                usage.w1_to_tx2 = bulk_relay_cols;
                usage.e_to_tx1 = pool_cols;
                usage.w2_to_tx1 = jam_relay_cols;
            }
            s.coop_ledger.push_back(std::move(usage));
        }
        s.rate = {2 * m + c1, 2};
        return s;
    }

    // 3m/2 <= c <= n: only data bits are shared, c per direction, and each
    // transmitter pre-cancels the cross interference of the other entirely:
    // with targets t_i = own data on levels [1 : c],
    //   x1 = t2 xor D^m t1,  x2 = t1 xor D^m t2
    // gives y1 = t1 and y2 = t2 exactly, since D^{2m} = 0.
    s.layout = {static_cast<std::size_t>(c), static_cast<std::size_t>(c), 0, 0};
    const auto& lay = s.layout;
    BitMatrix g1(static_cast<std::size_t>(q), lay.total());
    BitMatrix g2(static_cast<std::size_t>(q), lay.total());
    for (int j = 1; j <= c; ++j) {
        g1.set(level_row(q, j), lay.w2_col(j - 1), true);
        g2.set(level_row(q, j), lay.w1_col(j - 1), true);
        if (j - m >= 1) {
            g1.set(level_row(q, j - m), lay.w1_col(j - 1), true);
            g2.set(level_row(q, j - m), lay.w2_col(j - 1), true);
        }
    }
    s.slots.push_back({std::move(g1), std::move(g2)});
    CoopUsage usage;
    usage.w2_to_tx1 = index_range(0, static_cast<std::size_t>(c));
    usage.w1_to_tx2 = index_range(0, static_cast<std::size_t>(c));
    s.coop_ledger.push_back(std::move(usage));
    s.rate = {c, 1};
    return s;
}

SchemeDescription build(const ChannelParams& p) {
    const Regime regime = classify_regime(p);
    if (p.m == 0) {
        // Cross link only: the own receiver hears nothing from its
        // transmitter, so the rate is 0. Tagged very_high, not unity.
        return zero_scheme(p, Regime::very_high);
    }
    switch (regime) {
        case Regime::weak: return build_weak(p);
        case Regime::moderate: return build_moderate(p);
        case Regime::unity: return build_unity(p);
        case Regime::high:
            throw UnsupportedCaseError("high", "1 < alpha < 2 constructions are deferred");
        case Regime::very_high:
            if (p.m % 2 == 0 && p.n == 2 * p.m) return build_very_high_alpha2(p);
            throw UnsupportedCaseError(
                "very_high", "alpha >= 2 is constructed only for alpha = 2 with even m");
    }
    throw RegimeError("build: unreachable");
}

bool validate_budget(const SchemeDescription& s) {
    const auto& lay = s.layout;
    if (s.coop_ledger.size() != s.slots.size()) return false;
    const std::size_t budget = static_cast<std::size_t>(s.params.C);

    std::set<std::size_t> known_tx1, known_tx2;  // global columns already shared
    for (std::size_t k = 0; k < s.slots.size(); ++k) {
        const CoopUsage& u = s.coop_ledger[k];
        std::size_t new1 = 0, new2 = 0;
        for (std::size_t i : u.w2_to_tx1) {
            if (i >= lay.w2_len) return false;
            if (known_tx1.insert(lay.w2_col(i)).second) ++new1;
        }
        for (std::size_t i : u.e_to_tx1) {
            if (i >= lay.e_len) return false;
            if (known_tx1.insert(lay.e_col(i)).second) ++new1;
        }
        for (std::size_t i : u.w1_to_tx2) {
            if (i >= lay.w1_len) return false;
            if (known_tx2.insert(lay.w1_col(i)).second) ++new2;
        }
        for (std::size_t i : u.d_to_tx2) {
            if (i >= lay.d_len) return false;
            if (known_tx2.insert(lay.d_col(i)).second) ++new2;
        }
        if (new1 > budget || new2 > budget) return false;

        // Causality: a cross bit referenced by a generator must have been
        // declared shared no later than this slot.
        const BitMatrix& g1 = s.slots[k].g1;
        const BitMatrix& g2 = s.slots[k].g2;
        for (std::size_t i = 0; i < lay.w2_len; ++i)
            if (!g1.column_is_zero(lay.w2_col(i)) && !known_tx1.count(lay.w2_col(i))) return false;
        for (std::size_t i = 0; i < lay.e_len; ++i)
            if (!g1.column_is_zero(lay.e_col(i)) && !known_tx1.count(lay.e_col(i))) return false;
        for (std::size_t i = 0; i < lay.w1_len; ++i)
            if (!g2.column_is_zero(lay.w1_col(i)) && !known_tx2.count(lay.w1_col(i))) return false;
        for (std::size_t i = 0; i < lay.d_len; ++i)
            if (!g2.column_is_zero(lay.d_col(i)) && !known_tx2.count(lay.d_col(i))) return false;
    }
    return true;
}

}  // namespace sldic
