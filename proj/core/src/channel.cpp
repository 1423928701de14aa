#include "sldic/channel.hpp"

#include <cmath>

#include "sldic/errors.hpp"

namespace sldic {

Rational ChannelParams::alpha() const {
    if (m == 0) throw DegenerateChannelError("alpha undefined for m = 0");
    return Rational(n, m);
}

void validate(const ChannelParams& p) {
    if (p.m < 0 || p.n < 0 || p.C < 0)
        throw ParameterError("channel parameters must be nonnegative");
}

ChannelParams from_gaussian(const GaussianParams& g) {
    if (g.hd2 <= 0.0 || g.hc2 <= 0.0)
        throw ParameterError("from_gaussian: channel gains must be positive");
    if (g.CG < 0.0) throw ParameterError("from_gaussian: cooperative rate must be nonnegative");
    const auto floor_log2_pos = [](double x) {
        const double f = std::floor(std::log2(x));
        return f < 0.0 ? 0 : static_cast<int>(f);
    };
    ChannelParams p;
    p.m = floor_log2_pos(g.hd2);
    p.n = floor_log2_pos(g.hc2);
    p.C = static_cast<int>(std::floor(g.CG));
    return p;
}

std::pair<BitVector, BitVector> transmit(const BitVector& x1, const BitVector& x2,
                                         const ChannelParams& p) {
    validate(p);
    const std::size_t q = static_cast<std::size_t>(p.q());
    if (x1.size() != q || x2.size() != q)
        throw DimensionError("transmit: inputs must have length q = max{m, n}");
    const std::size_t sd = q - static_cast<std::size_t>(p.m);
    const std::size_t sc = q - static_cast<std::size_t>(p.n);
    BitVector y1 = shift_down(x1, sd) ^ shift_down(x2, sc);
    BitVector y2 = shift_down(x2, sd) ^ shift_down(x1, sc);
    return {std::move(y1), std::move(y2)};
}

std::pair<BitMatrix, BitMatrix> transfer_matrices(const ChannelParams& p) {
    validate(p);
    const std::size_t q = static_cast<std::size_t>(p.q());
    return {downshift(q, static_cast<std::int64_t>(q) - p.m),
            downshift(q, static_cast<std::int64_t>(q) - p.n)};
}

}  // namespace sldic
