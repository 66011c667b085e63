#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hybrid {

using Byte = std::uint8_t;
using Bytes = std::vector<Byte>;

// Positions and ranks are 1-based everywhere in the public API.
using Pos = std::uint64_t;
using Rank = std::uint64_t;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Bytes to_bytes(const std::string& s) {
    return Bytes(s.begin(), s.end());
}

inline std::string to_string(const Bytes& b) {
    return std::string(b.begin(), b.end());
}

// Number of bits needed by the fixed-width codes: floor(log2(max(1,v))) + 1.
inline std::uint32_t bit_width_of(std::uint64_t v) {
    if (v == 0) return 1;
    std::uint32_t w = 0;
    while (v) {
        ++w;
        v >>= 1;
    }
    return w;
}

}  // namespace hybrid
