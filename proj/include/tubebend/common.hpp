#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace tubebend {

// Error buckets map onto CLI exit codes: usage 1, data 2, numeric 3.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest round-trip-exact decimal form (17 significant digits).
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace tubebend
