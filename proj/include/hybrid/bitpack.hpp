#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "hybrid/common.hpp"

namespace hybrid {

// Fixed-width bit streams over a little-endian byte buffer: bit t lives in
// byte t/8, position t%8. Streams are padded with zero bits to a byte
// boundary so serialized sections are byte-aligned and deterministic.
class BitBuffer {
public:
    BitBuffer() = default;

    explicit BitBuffer(std::vector<std::uint8_t> bytes, std::uint64_t nbits)
        : m_bytes(std::move(bytes)), m_nbits(nbits) {}

    void append(std::uint64_t value, std::uint32_t width) {
        assert(width >= 1 && width <= 64);
        assert(width == 64 || value < (std::uint64_t(1) << width));
        std::uint64_t pos = m_nbits;
        m_nbits += width;
        m_bytes.resize((m_nbits + 7) / 8, 0);
        for (std::uint32_t i = 0; i < width; ++i, ++pos) {
            if ((value >> i) & 1) m_bytes[pos >> 3] |= std::uint8_t(1u << (pos & 7));
        }
    }

    std::uint64_t read(std::uint64_t bit_pos, std::uint32_t width) const {
        assert(width >= 1 && width <= 64);
        assert(bit_pos + width <= m_nbits);
        std::uint64_t v = 0;
        for (std::uint32_t i = 0; i < width; ++i) {
            std::uint64_t p = bit_pos + i;
            v |= std::uint64_t((m_bytes[p >> 3] >> (p & 7)) & 1) << i;
        }
        return v;
    }

    std::uint64_t bit_size() const { return m_nbits; }
    std::uint64_t byte_size() const { return m_bytes.size(); }
    const std::vector<std::uint8_t>& bytes() const { return m_bytes; }

private:
    std::vector<std::uint8_t> m_bytes;
    std::uint64_t m_nbits = 0;
};

// Packed array of equal-width integers, the building block for satellite
// ranks, suffix-array entries and the gap lists' component streams.
class PackedArray {
public:
    PackedArray() = default;

    PackedArray(std::uint64_t count, std::uint32_t width) : m_count(count), m_width(width) {
        assert(width >= 1 && width <= 64);
        m_buf = BitBuffer(std::vector<std::uint8_t>((count * width + 7) / 8, 0), count * width);
    }

    static PackedArray from_parts(std::vector<std::uint8_t> bytes, std::uint64_t count,
                                  std::uint32_t width) {
        PackedArray pa;
        pa.m_count = count;
        pa.m_width = width;
        pa.m_buf = BitBuffer(std::move(bytes), count * width);
        return pa;
    }

    void set(std::uint64_t idx, std::uint64_t value) {
        assert(idx < m_count);
        assert(m_width == 64 || value < (std::uint64_t(1) << m_width));
        std::uint64_t pos = idx * m_width;
        for (std::uint32_t i = 0; i < m_width; ++i, ++pos) {
            auto& byte = const_cast<std::vector<std::uint8_t>&>(m_buf.bytes())[pos >> 3];
            std::uint8_t mask = std::uint8_t(1u << (pos & 7));
            if ((value >> i) & 1)
                byte |= mask;
            else
                byte &= std::uint8_t(~mask);
        }
    }

    std::uint64_t get(std::uint64_t idx) const {
        assert(idx < m_count);
        return m_buf.read(idx * m_width, m_width);
    }

    std::uint64_t size() const { return m_count; }
    std::uint32_t width() const { return m_width; }
    std::uint64_t byte_size() const { return m_buf.byte_size(); }
    const std::vector<std::uint8_t>& bytes() const { return m_buf.bytes(); }

private:
    BitBuffer m_buf;
    std::uint64_t m_count = 0;
    std::uint32_t m_width = 1;
};

}  // namespace hybrid
