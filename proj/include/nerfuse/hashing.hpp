#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace nerfuse {

// FNV-1a, used for feature hashing and embedding buckets.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// SHA-256 hex digest; keys the prompt replay cache.
std::string sha256_hex(std::string_view data);

}  // namespace nerfuse
