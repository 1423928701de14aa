#pragma once

#include <stdexcept>
#include <string>

namespace sldic {

/// Mismatched vector/matrix dimensions.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Downshift amount outside [0, q].
struct InvalidShiftError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Invalid channel/Gaussian parameters (e.g. nonpositive gains).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// m = n = 0: no signal path at all, alpha has no meaning.
struct DegenerateChannelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A builder was called for parameters outside its regime.
struct RegimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parameters fall in a regime whose construction is deferred
/// (1 < alpha < 2, alpha > 2, alpha = 2 with odd m or n != 2m).
struct UnsupportedCaseError : std::runtime_error {
    explicit UnsupportedCaseError(std::string regime_tag, const std::string& what)
        : std::runtime_error(what), regime(std::move(regime_tag)) {}
    std::string regime;
};

/// A SchemeDescription with internally inconsistent dimensions.
struct MalformedSchemeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Enumeration state space exceeds the configured bound; callers fall
/// back to the rank method.
struct CapacityExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The rank and enumeration verifiers disagree: an implementation bug.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace sldic
