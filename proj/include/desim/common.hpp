#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace desim {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void msg_append(std::ostringstream&) {}

template <typename T, typename... Rest>
void msg_append(std::ostringstream& os, const T& v, const Rest&... rest) {
    os << v;
    msg_append(os, rest...);
}

} // namespace detail

// Builds an error message from heterogeneous parts.
template <typename... Parts>
std::string msg(const Parts&... parts) {
    std::ostringstream os;
    detail::msg_append(os, parts...);
    return os.str();
}

template <typename... Parts>
[[noreturn]] void fail(const Parts&... parts) {
    throw Error(msg(parts...));
}

// FNV-1a, 64-bit. Stable across platforms; used for content hashes and
// for deriving named RNG substreams.
inline std::uint64_t fnv1a64(std::string_view data,
                             std::uint64_t seed = 0xcbf29ce484222325ull) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace desim
