#pragma once

// The 2-user symmetric linear deterministic interference channel:
//   y1 = D^{q-m} x1 xor D^{q-n} x2,   y2 = D^{q-m} x2 xor D^{q-n} x1,
// with q = max{m, n}, plus the floor-log mapping from Gaussian parameters.

#include <utility>

#include "sldic/gf2.hpp"
#include "sldic/rational.hpp"

namespace sldic {

struct ChannelParams {
    int m = 0;  // direct-link level count
    int n = 0;  // cross-link level count
    int C = 0;  // cooperation capacity, bits per channel use per direction

    int q() const { return m > n ? m : n; }

    /// Coupling ratio n/m; undefined for m = 0.
    Rational alpha() const;

    /// Cooperative bits a scheme may actually use: excess above n is discarded.
    int effective_coop() const { return C < n ? C : n; }

    friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
};

struct GaussianParams {
    double hd2 = 0.0;  // |h_d|^2
    double hc2 = 0.0;  // |h_c|^2
    double CG = 0.0;   // cooperative-link rate
};

/// Throws ParameterError on negative fields.
void validate(const ChannelParams& p);

/// m = (floor(log2 |h_d|^2))+, n = (floor(log2 |h_c|^2))+, C = floor(CG).
ChannelParams from_gaussian(const GaussianParams& g);

/// One channel use. Inputs must both have length q.
std::pair<BitVector, BitVector> transmit(const BitVector& x1, const BitVector& x2,
                                         const ChannelParams& p);

/// (D^{q-m}, D^{q-n}): the direct and cross transfer matrices.
std::pair<BitMatrix, BitMatrix> transfer_matrices(const ChannelParams& p);

}  // namespace sldic
