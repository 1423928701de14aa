#pragma once

// Command implementations behind the sldic CLI, separated from argument
// parsing so they can be exercised in-process by the tests.
//
// Exit codes: 0 success, 2 verification failure, 3 unsupported regime,
// 4 usage or I/O error.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "sldic/analysis.hpp"

namespace sldic::cli {

struct Options {
    int m = 0;
    int n = 0;
    int C = 0;
    int cmax = 0;
    std::string out;  // output file (encode/verify/sweep) or directory (demo)
    std::string format = "structured-text";  // or "csv" (sweep)
    std::uint64_t max_states = kDefaultMaxStates;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitUnsupported = 3;
inline constexpr int kExitUsage = 4;

int run_encode(const Options& opt, std::ostream& out, std::ostream& err);
int run_verify(const Options& opt, std::ostream& out, std::ostream& err);
int run_rate(const Options& opt, std::ostream& out, std::ostream& err);
int run_sweep(const Options& opt, std::ostream& out, std::ostream& err);
int run_demo(const Options& opt, std::ostream& out, std::ostream& err);

/// CSV rows for sweep(m, n, cmax), exactly as written by run_sweep.
std::string sweep_csv(const Options& opt);

}  // namespace sldic::cli
