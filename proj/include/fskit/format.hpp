#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace fskit {

/// Shortest decimal string that round-trips the exact binary64 value.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace fskit
