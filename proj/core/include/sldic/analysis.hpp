#pragma once

// Exact verification of decodability and perfect secrecy for any
// SchemeDescription, by two independent routes:
//
//  * rank method: column-space tests on the stacked observation matrices.
//    For uniform independent sources, y_j = A w_i xor B r is independent of
//    w_i iff every column of A lies in colspace(B), and receiver i decodes
//    W_i with zero error iff its own-message block has full column rank and
//    meets the rest only in {0}.
//
//  * enumeration method: walk every source realization, histogram the joint
//    distributions, and evaluate entropies and mutual information exactly
//    (rational arithmetic; all probabilities are counts over a power of two).
//
// Secrecy is evaluated over the full multi-slot observation: time-sharing
// schemes must be secret jointly, not per slot.

#include <cstdint>
#include <string>
#include <utility>

#include "sldic/gf2.hpp"
#include "sldic/rational.hpp"
#include "sldic/scheme.hpp"

namespace sldic {

/// Receiver j's stacked observation: M_j maps the source vector to the
/// concatenation of y_j over all slots; unintended/rest split the columns by
/// the other user's message segment vs everything else.
struct ReceiverView {
    BitMatrix observation;  // (q * slots) x total
    BitMatrix unintended;   // columns of the other user's message segment
    BitMatrix rest;         // all remaining columns
};

enum class VerifyMethod { enumeration, rank, both };

std::string to_string(VerifyMethod m);

struct VerificationReport {
    bool decodable_1 = false;  // H(W1 | y1) = 0
    bool decodable_2 = false;
    bool secret_1 = false;  // I(W1 ; y2) = 0
    bool secret_2 = false;
    Rational mi_bits_1;  // I(W1 ; y2), exact
    Rational mi_bits_2;  // I(W2 ; y1)
    Rational cond_h_1;   // H(W1 | y1)
    Rational cond_h_2;   // H(W2 | y2)
    Rational h_w1;       // H(W1); equals w1_len for a well-formed source
    Rational h_w2;
    VerifyMethod method = VerifyMethod::rank;
    std::uint64_t state_count = 0;  // enumerated source realizations

    bool all_pass() const { return decodable_1 && decodable_2 && secret_1 && secret_2; }
};

constexpr std::uint64_t kDefaultMaxStates = std::uint64_t{1} << 24;

/// Stacked observation matrices for both receivers.
/// Throws MalformedSchemeError when generator shapes disagree with params.
std::pair<ReceiverView, ReceiverView> receiver_views(const SchemeDescription& s);

/// Per-receiver zero-error decodability of the own message (rank route).
std::pair<bool, bool> check_decodability(const SchemeDescription& s);

/// Per-message perfect secrecy at the unintended receiver (rank route).
std::pair<bool, bool> check_secrecy_rank(const SchemeDescription& s);

/// Full report via the rank route only (exact integer entropies).
VerificationReport rank_report(const SchemeDescription& s);

/// Exhaustive enumeration of the joint source distribution; throws
/// CapacityExceededError when 2^total exceeds max_states (callers fall back
/// to the rank method).
VerificationReport check_secrecy_enum(const SchemeDescription& s,
                                      std::uint64_t max_states = kDefaultMaxStates);

/// Runs the rank route always and the enumeration route when the state space
/// fits max_states; throws ConsistencyError if the two routes disagree on any
/// verdict or value.
VerificationReport verify(const SchemeDescription& s,
                          std::uint64_t max_states = kDefaultMaxStates);

/// Report serialization for the structured text format.
std::string to_json_string(const VerificationReport& r, int indent = 2);

/// Scheme and its report in one document: {"scheme": ..., "report": ...}.
std::string to_json_string(const SchemeDescription& s, const VerificationReport& r,
                           int indent = 2);

}  // namespace sldic
