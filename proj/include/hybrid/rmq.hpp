#pragma once

#include <cstdint>
#include <vector>

#include "hybrid/bitpack.hpp"
#include "hybrid/common.hpp"
#include "hybrid/io.hpp"

namespace hybrid {

/// Position-only range-maximum index over an externally supplied sequence:
/// only argmax positions are stored, values are re-read through the accessor
/// at query time. Two levels: leftmost-argmax per 64-rank block, plus a
/// doubling table over blocks. Ties resolve to the leftmost position.
class RmqIndex {
public:
    RmqIndex() = default;

    /// get(rank) -> value for ranks 1..n; n = 0 gives an empty index whose
    /// queries all fail.
    template <class F>
    static RmqIndex build(F&& get, Rank n) {
        RmqIndex rmq;
        rmq.m_n = n;
        if (n == 0) return rmq;
        Rank nblocks = (n + kBlock - 1) / kBlock;
        std::uint32_t width = bit_width_of(n);
        rmq.m_block_arg = PackedArray(nblocks, width);
        for (Rank bk = 0; bk < nblocks; ++bk) {
            Rank first = bk * kBlock + 1, last = std::min(n, (bk + 1) * kBlock);
            Rank arg = first;
            std::uint64_t best = get(first);
            for (Rank r = first + 1; r <= last; ++r) {
                std::uint64_t v = get(r);
                if (v > best) {
                    best = v;
                    arg = r;
                }
            }
            rmq.m_block_arg.set(bk, arg);
        }
        for (Rank span = 2; span <= nblocks; span *= 2) {
            const PackedArray& prev =
                rmq.m_levels.empty() ? rmq.m_block_arg : rmq.m_levels.back();
            PackedArray cur(nblocks - span + 1, width);
            for (Rank bk = 0; bk + span <= nblocks; ++bk) {
                Rank a = prev.get(bk), b = prev.get(bk + span / 2);
                cur.set(bk, pick(a, b, get));
            }
            rmq.m_levels.push_back(std::move(cur));
        }
        return rmq;
    }

    /// Leftmost position of the maximum value in [lo, hi], 1-based inclusive.
    template <class F>
    Rank query(Rank lo, Rank hi, F&& get) const {
        if (lo < 1 || lo > hi || hi > m_n) throw Error("bad range");
        Rank bl = (lo - 1) / kBlock, bh = (hi - 1) / kBlock;
        Rank arg = scan(lo, std::min(hi, (bl + 1) * kBlock), get);
        if (bl != bh) {
            arg = pick(arg, scan(bh * kBlock + 1, hi, get), get);
            if (bl + 1 < bh) {  // full blocks in between, covered by the table
                Rank span = bh - bl - 1;
                std::uint32_t k = 0;
                while ((Rank(2) << k) <= span) ++k;
                const PackedArray& lvl = k == 0 ? m_block_arg : m_levels[k - 1];
                Rank a = lvl.get(bl + 1), b = lvl.get(bh - (Rank(1) << k));
                arg = pick(arg, pick(a, b, get), get);
            }
        }
        return arg;
    }

    Rank size() const { return m_n; }

    void serialize(ByteWriter& w) const;
    static RmqIndex deserialize(ByteReader& r);

    bool operator==(const RmqIndex& o) const;

private:
    static constexpr Rank kBlock = 64;

    template <class F>
    static Rank pick(Rank a, Rank b, F&& get) {
        std::uint64_t va = get(a), vb = get(b);
        if (va != vb) return va > vb ? a : b;
        return std::min(a, b);
    }

    template <class F>
    static Rank scan(Rank first, Rank last, F&& get) {
        Rank arg = first;
        std::uint64_t best = get(first);
        for (Rank r = first + 1; r <= last; ++r) {
            std::uint64_t v = get(r);
            if (v > best) {
                best = v;
                arg = r;
            }
        }
        return arg;
    }

    Rank m_n = 0;
    PackedArray m_block_arg;            // leftmost argmax rank per block
    std::vector<PackedArray> m_levels;  // doubling table over blocks
};

}  // namespace hybrid
