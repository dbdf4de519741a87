#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace netcap {

// Single absolute tolerance used for every inequality check in the library.
inline constexpr double kDefaultTol = 1e-9;

// All numeric output is rendered with 12 significant digits.
inline std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

struct NetcapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : NetcapError {
    int line = 0;
    ParseError(const std::string& msg, int line_)
        : NetcapError("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct ValidationError : NetcapError {
    using NetcapError::NetcapError;
};

struct GuardError : NetcapError {
    using NetcapError::NetcapError;
};

inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

}  // namespace netcap
