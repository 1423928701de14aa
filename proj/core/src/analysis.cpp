#include "sldic/analysis.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "sldic/channel.hpp"
#include "sldic/errors.hpp"

namespace sldic {

namespace {

void check_shapes(const SchemeDescription& s) {
    const auto q = static_cast<std::size_t>(s.params.q());
    const std::size_t total = s.layout.total();
    if (s.slots.empty()) throw MalformedSchemeError("scheme has no time slots");
    for (const TimeSlot& slot : s.slots) {
        if (slot.g1.rows() != q || slot.g2.rows() != q)
            throw MalformedSchemeError("generator row count differs from q");
        if (slot.g1.cols() != total || slot.g2.cols() != total)
            throw MalformedSchemeError("generator column count differs from layout total");
    }
}

// ---- enumeration route ----------------------------------------------------
//
// Histograms are reduced to T(X) = sum_v c_v * log2(c_v); for a linear scheme
// every count is a power of two, so T is an integer and
//   H(X) = total - T(X)/N  bits, N = 2^total.
// Each histogram gets its own enumeration pass so memory stays bounded by one
// dense table or one sort buffer at a time.

struct EnumContext {
    std::size_t q = 0;
    std::size_t sd = 0, sc = 0;  // direct / cross shifts
    std::uint64_t qmask = 0;
    std::size_t total = 0, ybits = 0;
    std::size_t w1_len = 0, w2_len = 0;
    std::uint64_t w1_mask = 0, w2_mask = 0;
    std::vector<std::vector<std::uint64_t>> g1_rows, g2_rows;  // per slot

    struct Keys {
        std::uint64_t w1, w2, y1, y2;
    };

    Keys eval(std::uint64_t src) const {
        Keys k{};
        k.w1 = src & w1_mask;
        k.w2 = (src >> w1_len) & w2_mask;
        for (std::size_t slot = 0; slot < g1_rows.size(); ++slot) {
            std::uint64_t x1 = 0, x2 = 0;
            for (std::size_t r = 0; r < q; ++r) {
                x1 |= static_cast<std::uint64_t>(std::popcount(g1_rows[slot][r] & src) & 1) << r;
                x2 |= static_cast<std::uint64_t>(std::popcount(g2_rows[slot][r] & src) & 1) << r;
            }
            // One channel use: entry e moves to e + shift, the bottom falls off.
            const std::uint64_t y1 = ((x1 << sd) ^ (x2 << sc)) & qmask;
            const std::uint64_t y2 = ((x2 << sd) ^ (x1 << sc)) & qmask;
            k.y1 = (k.y1 << q) | y1;
            k.y2 = (k.y2 << q) | y2;
        }
        return k;
    }
};

EnumContext make_context(const SchemeDescription& s, std::uint64_t max_states) {
    check_shapes(s);
    EnumContext ctx;
    ctx.q = static_cast<std::size_t>(s.params.q());
    ctx.sd = ctx.q - static_cast<std::size_t>(s.params.m);
    ctx.sc = ctx.q - static_cast<std::size_t>(s.params.n);
    ctx.qmask = ctx.q >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ctx.q) - 1;
    ctx.total = s.layout.total();
    ctx.ybits = ctx.q * s.slots.size();
    ctx.w1_len = s.layout.w1_len;
    ctx.w2_len = s.layout.w2_len;
    ctx.w1_mask = ctx.w1_len == 0 ? 0 : (std::uint64_t{1} << ctx.w1_len) - 1;
    ctx.w2_mask = ctx.w2_len == 0 ? 0 : (std::uint64_t{1} << ctx.w2_len) - 1;

    if (ctx.total >= 62 || (std::uint64_t{1} << ctx.total) > max_states)
        throw CapacityExceededError("enumeration state space exceeds max_states");
    if (ctx.ybits + std::max(ctx.w1_len, ctx.w2_len) > 62)
        throw CapacityExceededError("stacked observation too wide for exact enumeration keys");

    for (const TimeSlot& slot : s.slots) {
        std::vector<std::uint64_t> r1(ctx.q), r2(ctx.q);
        for (std::size_t r = 0; r < ctx.q; ++r) {
            r1[r] = slot.g1.row_word(r);
            r2[r] = slot.g2.row_word(r);
        }
        ctx.g1_rows.push_back(std::move(r1));
        ctx.g2_rows.push_back(std::move(r2));
    }
    return ctx;
}

enum class KeyKind { W1, W2, Y1, Y2, W1Y2, W2Y1, W1Y1, W2Y2 };

std::uint64_t key_of(const EnumContext::Keys& k, KeyKind kind, std::size_t ybits) {
    switch (kind) {
        case KeyKind::W1: return k.w1;
        case KeyKind::W2: return k.w2;
        case KeyKind::Y1: return k.y1;
        case KeyKind::Y2: return k.y2;
        case KeyKind::W1Y2: return (k.w1 << ybits) | k.y2;
        case KeyKind::W2Y1: return (k.w2 << ybits) | k.y1;
        case KeyKind::W1Y1: return (k.w1 << ybits) | k.y1;
        case KeyKind::W2Y2: return (k.w2 << ybits) | k.y2;
    }
    return 0;
}

std::size_t key_bits(const EnumContext& ctx, KeyKind kind) {
    switch (kind) {
        case KeyKind::W1: return ctx.w1_len;
        case KeyKind::W2: return ctx.w2_len;
        case KeyKind::Y1:
        case KeyKind::Y2: return ctx.ybits;
        case KeyKind::W1Y2:
        case KeyKind::W1Y1: return ctx.w1_len + ctx.ybits;
        case KeyKind::W2Y1:
        case KeyKind::W2Y2: return ctx.w2_len + ctx.ybits;
    }
    return 0;
}

std::int64_t count_log2_term(std::uint64_t c) {
    if ((c & (c - 1)) != 0)
        throw ConsistencyError("enumeration histogram count is not a power of two");
    return static_cast<std::int64_t>(c) * std::countr_zero(c);
}

/// T(X) = sum over distinct values of c * log2(c) for one key kind.
std::int64_t sum_count_log2(const EnumContext& ctx, KeyKind kind) {
    const std::uint64_t states = std::uint64_t{1} << ctx.total;
    const std::size_t bits = key_bits(ctx, kind);
    std::int64_t t = 0;
    if (bits <= 24) {
        std::vector<std::uint32_t> counts(std::size_t{1} << bits, 0);
        for (std::uint64_t src = 0; src < states; ++src)
            ++counts[key_of(ctx.eval(src), kind, ctx.ybits)];
        for (std::uint32_t c : counts)
            if (c) t += count_log2_term(c);
    } else {
        std::vector<std::uint64_t> keys;
        keys.reserve(states);
        for (std::uint64_t src = 0; src < states; ++src)
            keys.push_back(key_of(ctx.eval(src), kind, ctx.ybits));
        std::sort(keys.begin(), keys.end());
        std::size_t i = 0;
        while (i < keys.size()) {
            std::size_t j = i;
            while (j < keys.size() && keys[j] == keys[i]) ++j;
            t += count_log2_term(j - i);
            i = j;
        }
    }
    return t;
}

BitMatrix message_columns(const BitMatrix& m, const SourceLayout& lay, bool user1) {
    return user1 ? m.select_columns(lay.w1_offset(), lay.w1_len)
                 : m.select_columns(lay.w2_offset(), lay.w2_len);
}

BitMatrix non_message_columns(const BitMatrix& m, const SourceLayout& lay, bool user1) {
    return user1 ? m.drop_columns(lay.w1_offset(), lay.w1_len)
                 : m.drop_columns(lay.w2_offset(), lay.w2_len);
}

}  // namespace

std::string to_string(VerifyMethod m) {
    switch (m) {
        case VerifyMethod::enumeration: return "enumeration";
        case VerifyMethod::rank: return "rank";
        case VerifyMethod::both: return "both";
    }
    return "unknown";
}

std::pair<ReceiverView, ReceiverView> receiver_views(const SchemeDescription& s) {
    check_shapes(s);
    const auto [direct, cross] = transfer_matrices(s.params);
    BitMatrix m1, m2;
    bool first = true;
    for (const TimeSlot& slot : s.slots) {
        BitMatrix y1 = (direct * slot.g1) ^ (cross * slot.g2);
        BitMatrix y2 = (direct * slot.g2) ^ (cross * slot.g1);
        if (first) {
            m1 = std::move(y1);
            m2 = std::move(y2);
            first = false;
        } else {
            m1 = vstack(m1, y1);
            m2 = vstack(m2, y2);
        }
    }
    ReceiverView v1{m1, message_columns(m1, s.layout, false), non_message_columns(m1, s.layout, false)};
    ReceiverView v2{m2, message_columns(m2, s.layout, true), non_message_columns(m2, s.layout, true)};
    return {std::move(v1), std::move(v2)};
}

std::pair<bool, bool> check_decodability(const SchemeDescription& s) {
    const VerificationReport r = rank_report(s);
    return {r.decodable_1, r.decodable_2};
}

std::pair<bool, bool> check_secrecy_rank(const SchemeDescription& s) {
    const VerificationReport r = rank_report(s);
    return {r.secret_1, r.secret_2};
}

VerificationReport rank_report(const SchemeDescription& s) {
    const auto [v1, v2] = receiver_views(s);
    VerificationReport rep;
    rep.method = VerifyMethod::rank;

    // Secrecy: I(W_i ; y_j) = rank([A | B]) - rank(B) at the unintended
    // receiver, zero iff colspace(B) absorbs every column of A.
    const auto mi_at = [](const ReceiverView& v) {
        return static_cast<std::int64_t>(rank(hstack(v.unintended, v.rest))) -
               static_cast<std::int64_t>(rank(v.rest));
    };
    rep.mi_bits_1 = Rational(mi_at(v2));
    rep.mi_bits_2 = Rational(mi_at(v1));
    rep.secret_1 = rep.mi_bits_1.is_zero();
    rep.secret_2 = rep.mi_bits_2.is_zero();

    // Decodability at the intended receiver: with the observation written as
    // A' w xor B' r, zero-error decoding needs rank(A') = |w| and
    // rank([A'|B']) = rank(A') + rank(B'). The conditional entropy
    // H(W | y) = |w| + rank(B') - rank([A'|B']) is exact.
    const auto cond_h = [&s](const ReceiverView& v, bool user1) {
        const BitMatrix own = message_columns(v.observation, s.layout, user1);
        const BitMatrix rest = non_message_columns(v.observation, s.layout, user1);
        const std::int64_t w_len =
            static_cast<std::int64_t>(user1 ? s.layout.w1_len : s.layout.w2_len);
        return w_len + static_cast<std::int64_t>(rank(rest)) -
               static_cast<std::int64_t>(rank(hstack(own, rest)));
    };
    rep.cond_h_1 = Rational(cond_h(v1, true));
    rep.cond_h_2 = Rational(cond_h(v2, false));
    rep.decodable_1 = rep.cond_h_1.is_zero();
    rep.decodable_2 = rep.cond_h_2.is_zero();

    rep.h_w1 = Rational(static_cast<std::int64_t>(s.layout.w1_len));
    rep.h_w2 = Rational(static_cast<std::int64_t>(s.layout.w2_len));
    return rep;
}

VerificationReport check_secrecy_enum(const SchemeDescription& s, std::uint64_t max_states) {
    const EnumContext ctx = make_context(s, max_states);
    const std::uint64_t states = std::uint64_t{1} << ctx.total;
    const auto n = static_cast<std::int64_t>(states);
    const auto k = static_cast<std::int64_t>(ctx.total);

    const std::int64_t t_w1 = sum_count_log2(ctx, KeyKind::W1);
    const std::int64_t t_w2 = sum_count_log2(ctx, KeyKind::W2);
    const std::int64_t t_y1 = sum_count_log2(ctx, KeyKind::Y1);
    const std::int64_t t_y2 = sum_count_log2(ctx, KeyKind::Y2);
    const std::int64_t t_w1y2 = sum_count_log2(ctx, KeyKind::W1Y2);
    const std::int64_t t_w2y1 = sum_count_log2(ctx, KeyKind::W2Y1);
    const std::int64_t t_w1y1 = sum_count_log2(ctx, KeyKind::W1Y1);
    const std::int64_t t_w2y2 = sum_count_log2(ctx, KeyKind::W2Y2);

    VerificationReport rep;
    rep.method = VerifyMethod::enumeration;
    rep.state_count = states;
    // I(W;Y) = H(W) + H(Y) - H(W,Y) with H(X) = k - T(X)/N.
    rep.mi_bits_1 = Rational(k * n - t_w1 - t_y2 + t_w1y2, n);
    rep.mi_bits_2 = Rational(k * n - t_w2 - t_y1 + t_w2y1, n);
    // H(W|Y) = H(W,Y) - H(Y) = (T(Y) - T(W,Y)) / N.
    rep.cond_h_1 = Rational(t_y1 - t_w1y1, n);
    rep.cond_h_2 = Rational(t_y2 - t_w2y2, n);
    rep.h_w1 = Rational(k * n - t_w1, n);
    rep.h_w2 = Rational(k * n - t_w2, n);
    rep.secret_1 = rep.mi_bits_1.is_zero();
    rep.secret_2 = rep.mi_bits_2.is_zero();
    rep.decodable_1 = rep.cond_h_1.is_zero();
    rep.decodable_2 = rep.cond_h_2.is_zero();
    return rep;
}

VerificationReport verify(const SchemeDescription& s, std::uint64_t max_states) {
    const VerificationReport by_rank = rank_report(s);
    VerificationReport by_enum;
    try {
        by_enum = check_secrecy_enum(s, max_states);
    } catch (const CapacityExceededError&) {
        return by_rank;
    }
    const bool agree = by_rank.decodable_1 == by_enum.decodable_1 &&
                       by_rank.decodable_2 == by_enum.decodable_2 &&
                       by_rank.secret_1 == by_enum.secret_1 &&
                       by_rank.secret_2 == by_enum.secret_2 &&
                       by_rank.mi_bits_1 == by_enum.mi_bits_1 &&
                       by_rank.mi_bits_2 == by_enum.mi_bits_2 &&
                       by_rank.cond_h_1 == by_enum.cond_h_1 &&
                       by_rank.cond_h_2 == by_enum.cond_h_2;
    if (!agree)
        throw ConsistencyError("rank and enumeration verification disagree (implementation bug)");
    VerificationReport rep = by_enum;
    rep.method = VerifyMethod::both;
    return rep;
}

}  // namespace sldic
