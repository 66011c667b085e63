#include "hybrid/rmq.hpp"

namespace hybrid {

void RmqIndex::serialize(ByteWriter& w) const {
    w.u64(m_n);
    w.u32(std::uint32_t(m_levels.size() + (m_n > 0 ? 1 : 0)));
    if (m_n == 0) return;
    write_packed(w, m_block_arg);
    for (const PackedArray& lvl : m_levels) write_packed(w, lvl);
}

RmqIndex RmqIndex::deserialize(ByteReader& r) {
    RmqIndex rmq;
    rmq.m_n = r.u64();
    std::uint32_t tables = r.u32();
    if (rmq.m_n == 0) {
        if (tables != 0) throw Error("corrupt rmq index");
        return rmq;
    }
    if (tables == 0) throw Error("corrupt rmq index");
    rmq.m_block_arg = read_packed(r);
    Rank nblocks = (rmq.m_n + kBlock - 1) / kBlock;
    if (rmq.m_block_arg.size() != nblocks) throw Error("corrupt rmq index");
    Rank span = 2;
    for (std::uint32_t t = 1; t < tables; ++t, span *= 2) {
        rmq.m_levels.push_back(read_packed(r));
        if (span > nblocks || rmq.m_levels.back().size() != nblocks - span + 1)
            throw Error("corrupt rmq index");
    }
    if (span <= nblocks) throw Error("corrupt rmq index");
    return rmq;
}

bool RmqIndex::operator==(const RmqIndex& o) const {
    if (m_n != o.m_n || m_levels.size() != o.m_levels.size()) return false;
    if (m_n > 0 && m_block_arg.bytes() != o.m_block_arg.bytes()) return false;
    for (std::size_t t = 0; t < m_levels.size(); ++t)
        if (m_levels[t].bytes() != o.m_levels[t].bytes()) return false;
    return true;
}

}  // namespace hybrid
