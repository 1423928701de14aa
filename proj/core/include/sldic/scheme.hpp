#pragma once

// Construction of secure transmission schemes, one per interference regime.
// Every encoder, including random-bit jamming and relaying, is a linear map
// over GF(2) from the global source vector [W1 | W2 | D | E] (both users'
// message bits followed by both users' random-bit pools) to the transmitted
// vectors. This makes secrecy and decodability algebraically decidable and
// keeps all regimes uniform.

#include <cstddef>
#include <string>
#include <vector>

#include "sldic/channel.hpp"
#include "sldic/gf2.hpp"
#include "sldic/rational.hpp"

namespace sldic {

enum class Regime { weak, moderate, unity, high, very_high };

std::string to_string(Regime r);

/// weak: alpha <= 2/3 (including n = 0); moderate: 2/3 < alpha < 1;
/// unity: alpha = 1; high: 1 < alpha < 2; very_high: alpha >= 2
/// (m = 0 with n > 0 counts as very_high: the cross link dominates outright).
/// Comparisons are exact on integers. Throws DegenerateChannelError for m = n = 0.
Regime classify_regime(const ChannelParams& p);

/// Segment order of the global source vector is fixed: [W1 | W2 | D | E].
struct SourceLayout {
    std::size_t w1_len = 0;
    std::size_t w2_len = 0;
    std::size_t d_len = 0;  // transmitter 1's random pool
    std::size_t e_len = 0;  // transmitter 2's random pool

    std::size_t total() const { return w1_len + w2_len + d_len + e_len; }

    std::size_t w1_offset() const { return 0; }
    std::size_t w2_offset() const { return w1_len; }
    std::size_t d_offset() const { return w1_len + w2_len; }
    std::size_t e_offset() const { return w1_len + w2_len + d_len; }

    std::size_t w1_col(std::size_t i) const { return w1_offset() + i; }
    std::size_t w2_col(std::size_t i) const { return w2_offset() + i; }
    std::size_t d_col(std::size_t i) const { return d_offset() + i; }
    std::size_t e_col(std::size_t i) const { return e_offset() + i; }

    friend bool operator==(const SourceLayout&, const SourceLayout&) = default;
};

/// Cooperative usage of one time slot, as segment-local column indices,
/// sorted. Bits listed here are carried over the cooperative link in this
/// slot; each direction may carry at most C new bits per slot.
struct CoopUsage {
    std::vector<std::size_t> w2_to_tx1;  // tx2's data bits used by G1
    std::vector<std::size_t> e_to_tx1;   // tx2's random bits used by G1
    std::vector<std::size_t> w1_to_tx2;  // tx1's data bits used by G2
    std::vector<std::size_t> d_to_tx2;   // tx1's random bits used by G2

    friend bool operator==(const CoopUsage&, const CoopUsage&) = default;
};

struct TimeSlot {
    BitMatrix g1;  // q x total generator of transmitter 1
    BitMatrix g2;  // q x total generator of transmitter 2

    friend bool operator==(const TimeSlot&, const TimeSlot&) = default;
};

/// Symmetric secrecy rate; numerator = message bits one user delivers per
/// scheme period, denominator = time slots per period. Not reduced, so the
/// two counts stay readable; compare via value().
struct RateResult {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;

    Rational value() const { return Rational(numerator, denominator); }

    friend bool operator==(const RateResult&, const RateResult&) = default;
};

struct SchemeDescription {
    ChannelParams params;
    Regime regime = Regime::weak;
    SourceLayout layout;
    std::vector<TimeSlot> slots;
    std::vector<CoopUsage> coop_ledger;  // one entry per slot
    RateResult rate;

    friend bool operator==(const SchemeDescription&, const SchemeDescription&) = default;
};

/// Moderate-regime bookkeeping: link-type counts and the block decomposition
/// of the levels available above the precoded bottom.
struct ModerateBreakdown {
    int r1 = 0;          // links received cleanly that cause interference
    int r2 = 0;          // links received cleanly that cause none (= m - n)
    int type3 = 0;       // links with interference both ways (= 2n - m)
    int coop = 0;        // min{n, C}
    int usable = 0;      // g = (n - (r2 + coop))+
    int full_blocks = 0; // B = floor(g / 3 r2)
    int remainder = 0;   // t = g mod 3 r2
    int extra_data = 0;  // q_extra = min{(t - r2)+, r2}
};

ModerateBreakdown moderate_breakdown(const ChannelParams& p);

/// Single slot, rate m - n + min{n, C}: own data on levels [1 : m-n+c],
/// the peer's cooperatively shared bits XOR-ed onto levels [1 : c] so the
/// peer's interference cancels at the intended receiver.
SchemeDescription build_weak(const ChannelParams& p);

/// Single slot, rate m - n + B(m-n) + q_extra + min{n, C}: precoded bottom
/// data plus (data, random, zero) blocks descending from the top level.
SchemeDescription build_moderate(const ChannelParams& p);

/// alpha = 1: both receivers see x1 xor x2, so no secret bits are sent.
SchemeDescription build_unity(const ChannelParams& p);

/// alpha = 2 with even m. Depending on c = min{n, C}:
///   c = 0              -> empty scheme, rate 0;
///   0 < c <= m/2       -> shared random bits mask c data bits per user, rate c;
///   m/2 < c < 3m/2     -> two slots of jamming + relaying + cancelation,
///                         rate m + (c - m/2)/2 per user;
///   3m/2 <= c <= n     -> full data sharing pre-cancels all interference, rate c.
/// Odd m or n != 2m is rejected as a deferred case.
SchemeDescription build_very_high_alpha2(const ChannelParams& p);

/// Regime dispatcher. Throws UnsupportedCaseError for 1 < alpha < 2 and for
/// the deferred very-high cases; m = 0 with n > 0 yields a rate-0 scheme
/// tagged very_high (distinct from unity).
SchemeDescription build(const ChannelParams& p);

/// True iff per slot and per direction at most C previously unshared source
/// bits are declared, every cooperative bit a generator actually references
/// is declared no later than that slot, and the declared sets are consistent
/// with the segments they name.
bool validate_budget(const SchemeDescription& s);

/// Structured text (JSON) round trip. Matrix rows are emitted as bit strings,
/// top level first; rate as "num/den".
std::string to_json_string(const SchemeDescription& s, int indent = 2);
SchemeDescription scheme_from_json_string(const std::string& text);

}  // namespace sldic
