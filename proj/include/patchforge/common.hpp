#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace patchforge {

// Error taxonomy used across the library. The CLI maps `config` to exit
// code 2 and everything else to exit code 1.
enum class ErrorKind {
    config,
    io,
    data,
    shape,
    placement,
    role,
    registry,
    dependency,
    runtime,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

// FNV-1a over raw bytes; used for parameter checksums and config fingerprints.
inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t seed = 14695981039346656037ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace patchforge
