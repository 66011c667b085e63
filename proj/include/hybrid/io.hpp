#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "hybrid/bitpack.hpp"
#include "hybrid/common.hpp"

namespace hybrid {

// Little-endian byte writer/reader used by the index file format.
class ByteWriter {
public:
    void u8(std::uint8_t v) { m_out.push_back(v); }
    void u16(std::uint16_t v) { put(v, 2); }
    void u32(std::uint32_t v) { put(v, 4); }
    void u64(std::uint64_t v) { put(v, 8); }

    void raw(const void* data, std::size_t len) {
        const auto* p = static_cast<const std::uint8_t*>(data);
        m_out.insert(m_out.end(), p, p + len);
    }

    void raw(const std::vector<std::uint8_t>& v) { raw(v.data(), v.size()); }

    std::size_t size() const { return m_out.size(); }
    std::vector<std::uint8_t>& buffer() { return m_out; }
    const std::vector<std::uint8_t>& buffer() const { return m_out; }

private:
    void put(std::uint64_t v, int n) {
        for (int i = 0; i < n; ++i) m_out.push_back(std::uint8_t(v >> (8 * i)));
    }

    std::vector<std::uint8_t> m_out;
};

class ByteReader {
public:
    ByteReader(const std::uint8_t* data, std::size_t len) : m_data(data), m_len(len) {}

    explicit ByteReader(const std::vector<std::uint8_t>& v) : ByteReader(v.data(), v.size()) {}

    std::uint8_t u8() { return std::uint8_t(get(1)); }
    std::uint16_t u16() { return std::uint16_t(get(2)); }
    std::uint32_t u32() { return std::uint32_t(get(4)); }
    std::uint64_t u64() { return get(8); }

    std::vector<std::uint8_t> raw(std::size_t len) {
        need(len);
        std::vector<std::uint8_t> v(m_data + m_pos, m_data + m_pos + len);
        m_pos += len;
        return v;
    }

    void seek(std::size_t pos) {
        if (pos > m_len) throw Error("truncated section");
        m_pos = pos;
    }

    std::size_t pos() const { return m_pos; }
    std::size_t remaining() const { return m_len - m_pos; }

private:
    void need(std::size_t n) const {
        if (m_pos + n > m_len) throw Error("truncated section");
    }

    std::uint64_t get(int n) {
        need(std::size_t(n));
        std::uint64_t v = 0;
        for (int i = 0; i < n; ++i) v |= std::uint64_t(m_data[m_pos + i]) << (8 * i);
        m_pos += std::size_t(n);
        return v;
    }

    const std::uint8_t* m_data;
    std::size_t m_len;
    std::size_t m_pos = 0;
};

// CRC-32 (IEEE 802.3, reflected 0xEDB88320), as used by zip/zlib.
inline std::uint32_t crc32(const std::uint8_t* data, std::size_t len,
                           std::uint32_t seed = 0) {
    static const std::array<std::uint32_t, 256> table = [] {
        std::array<std::uint32_t, 256> t{};
        for (std::uint32_t i = 0; i < 256; ++i) {
            std::uint32_t c = i;
            for (int j = 0; j < 8; ++j) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : (c >> 1);
            t[i] = c;
        }
        return t;
    }();
    std::uint32_t crc = ~seed;
    for (std::size_t i = 0; i < len; ++i) crc = table[(crc ^ data[i]) & 0xFF] ^ (crc >> 8);
    return ~crc;
}

inline std::uint32_t crc32(const std::vector<std::uint8_t>& v) {
    return crc32(v.data(), v.size());
}

inline void write_packed(ByteWriter& w, const PackedArray& pa) {
    w.u64(pa.size());
    w.u8(std::uint8_t(pa.width()));
    w.u64(pa.byte_size());
    w.raw(pa.bytes());
}

inline PackedArray read_packed(ByteReader& r) {
    std::uint64_t count = r.u64();
    std::uint32_t width = r.u8();
    std::uint64_t nbytes = r.u64();
    if (width < 1 || width > 64 || nbytes != (count * width + 7) / 8)
        throw Error("corrupt packed stream");
    return PackedArray::from_parts(r.raw(nbytes), count, width);
}

}  // namespace hybrid
