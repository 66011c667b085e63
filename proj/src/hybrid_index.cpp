#include "hybrid/hybrid_index.hpp"

#include <algorithm>
#include <cstring>

#include "hybrid/io.hpp"

namespace hybrid {

namespace {

constexpr char kMagic[4] = {'H', 'Y', 'B', 'X'};
constexpr std::uint16_t kVersion = 1;

enum SectionId : std::uint16_t {
    kSecHeader = 1,
    kSecKernel = 2,
    kSecL = 3,
    kSecLMK = 4,
    kSecFirstOcc = 5,
    kSecSuffixArray = 6,
    kSecX = 7,
    kSecSatellites = 8,
    kSecRmq = 9,
};

constexpr std::uint16_t kSectionIds[] = {kSecHeader,      kSecKernel, kSecL,
                                         kSecLMK,         kSecFirstOcc, kSecSuffixArray,
                                         kSecX,           kSecSatellites, kSecRmq};
constexpr std::size_t kSectionCount = sizeof(kSectionIds) / sizeof(kSectionIds[0]);

const char* section_name(std::uint16_t id) {
    switch (id) {
        case kSecHeader: return "header";
        case kSecKernel: return "kernel";
        case kSecL: return "L";
        case kSecLMK: return "L_MK";
        case kSecFirstOcc: return "first_occ";
        case kSecSuffixArray: return "suffix_array";
        case kSecX: return "X";
        case kSecSatellites: return "satellites";
        case kSecRmq: return "rmq";
    }
    return "?";
}

}  // namespace

HybridIndex HybridIndex::build(const Bytes& text, const BuildParams& params) {
    if (text.empty()) throw Error("empty text");
    if (params.M < 1) throw Error("M must be at least 1");

    FilterParams fp;
    fp.M = params.M;
    fp.K = params.K;
    fp.sep = params.sep ? *params.sep : pick_separator(text);
    fp.sep_count = params.sep_count > 0 ? params.sep_count : params.K + 1;

    HybridIndex hx;
    Parse parse = hybrid::parse(text);
    hx.m_ft = FilteredText::build(text, parse, fp, params.g, params.b);
    hx.m_inner = InnerIndex::build(hx.m_ft.kernel());
    hx.m_grid = SourceGrid::build(parse, hx.m_ft.l());
    return hx;
}

QueryResult HybridIndex::query(const Bytes& pattern, std::uint32_t k) const {
    if (pattern.empty()) throw Error("empty pattern");
    if (pattern.size() > m_ft.params().M || k > m_ft.params().K)
        throw Error("query exceeds index bounds");

    std::vector<KernelMatch> matches =
        k == 0 ? m_inner.locate_exact(m_ft.kernel(), pattern)
               : locate_approx(m_ft.kernel(), pattern, k);

    std::vector<std::pair<Pos, Pos>> mapped;
    for (const KernelMatch& km : matches) {
        Pos l = 0, r = 0;
        if (m_ft.classify(km.i, km.j, &l, &r) == MatchClass::Primary)
            mapped.emplace_back(l, r);
    }
    std::sort(mapped.begin(), mapped.end());
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());

    std::vector<Occurrence> primaries;
    primaries.reserve(mapped.size());
    for (auto [l, r] : mapped) primaries.push_back(Occurrence{l, r, Origin::Primary});

    QueryResult res;
    res.pattern = pattern;
    res.k = k;
    res.occurrences = m_grid.expand_secondaries(primaries);
    std::sort(res.occurrences.begin(), res.occurrences.end());
    return res;
}

Bytes HybridIndex::serialize() const {
    const FilterParams& fp = m_ft.params();
    Rank z = m_ft.z();

    ByteWriter payloads[kSectionCount];
    {
        ByteWriter& w = payloads[0];  // header
        w.u64(m_ft.n());
        w.u64(fp.M);
        w.u64(fp.K);
        w.u32(m_ft.l().g());
        w.u32(m_ft.l().b());
        w.u8(fp.sep);
        w.u64(fp.run());
        w.u64(z);
    }
    payloads[1].raw(m_ft.kernel().data(), m_ft.kernel().size());
    m_ft.l().serialize(payloads[2]);
    m_ft.l_mk().serialize(payloads[3]);
    {
        PackedArray fo(m_ft.first_occ().size(), bit_width_of(z));
        for (std::size_t t = 0; t < m_ft.first_occ().size(); ++t)
            fo.set(t, m_ft.first_occ()[t]);
        write_packed(payloads[4], fo);
    }
    write_packed(payloads[5], m_inner.sa());
    m_grid.x().serialize(payloads[6]);
    write_packed(payloads[7], m_grid.satellites());
    m_grid.rmq().serialize(payloads[8]);

    ByteWriter out;
    out.raw(kMagic, 4);
    out.u16(kVersion);
    out.u16(std::uint16_t(kSectionCount));
    std::uint64_t offset = 4 + 2 + 2 + kSectionCount * 20;
    for (std::size_t t = 0; t < kSectionCount; ++t) {
        out.u16(kSectionIds[t]);
        out.u16(0);
        out.u64(offset);
        out.u64(payloads[t].size());
        offset += payloads[t].size();
    }
    for (std::size_t t = 0; t < kSectionCount; ++t) out.raw(payloads[t].buffer());
    out.u32(crc32(out.buffer()));
    return out.buffer();
}

HybridIndex HybridIndex::deserialize(const Bytes& data) {
    ByteReader r(data);
    Bytes magic = r.raw(4);
    if (std::memcmp(magic.data(), kMagic, 4) != 0) throw Error("bad magic");
    std::uint16_t version = r.u16();
    if (version != kVersion) throw Error("version mismatch");
    std::uint16_t count = r.u16();

    struct Entry {
        std::uint64_t offset = 0, length = 0;
        bool present = false;
    };
    Entry table[16];
    if (data.size() < 4 + 2 + 2 + std::size_t(count) * 20 + 4) throw Error("truncated section");
    std::uint64_t payload_end = data.size() - 4;
    for (std::uint16_t t = 0; t < count; ++t) {
        std::uint16_t id = r.u16();
        r.u16();  // reserved
        std::uint64_t off = r.u64();
        std::uint64_t len = r.u64();
        if (off > payload_end || len > payload_end - off) throw Error("truncated section");
        if (id >= 1 && id < 16) table[id] = Entry{off, len, true};
    }
    for (std::uint16_t id : kSectionIds)
        if (!table[id].present) throw Error("missing section");

    std::uint32_t stored = std::uint32_t(data[data.size() - 4]) |
                           std::uint32_t(data[data.size() - 3]) << 8 |
                           std::uint32_t(data[data.size() - 2]) << 16 |
                           std::uint32_t(data[data.size() - 1]) << 24;
    if (crc32(data.data(), data.size() - 4) != stored) throw Error("checksum failure");

    auto section = [&](std::uint16_t id) {
        return ByteReader(data.data() + table[id].offset, table[id].length);
    };

    ByteReader hr = section(kSecHeader);
    Pos n = hr.u64();
    FilterParams fp;
    fp.M = hr.u64();
    fp.K = hr.u64();
    std::uint32_t g = hr.u32();
    std::uint32_t b = hr.u32();
    fp.sep = hr.u8();
    fp.sep_count = hr.u64();
    Rank z = hr.u64();
    (void)g;
    (void)b;

    ByteReader kr = section(kSecKernel);
    Bytes kernel = kr.raw(table[kSecKernel].length);

    ByteReader lr = section(kSecL);
    GapList l = GapList::deserialize(lr);
    ByteReader lmkr = section(kSecLMK);
    GapList lmk = GapList::deserialize(lmkr);
    if (l.size() != z + 1 || lmk.size() != z) throw Error("corrupt index");

    ByteReader fr = section(kSecFirstOcc);
    PackedArray fo = read_packed(fr);
    std::vector<Rank> first_occ(fo.size());
    for (std::size_t t = 0; t < fo.size(); ++t) first_occ[t] = fo.get(t);

    HybridIndex hx;
    hx.m_ft = FilteredText::from_parts(fp, n, std::move(kernel), std::move(l), std::move(lmk),
                                       std::move(first_occ));

    ByteReader sr = section(kSecSuffixArray);
    PackedArray sa = read_packed(sr);
    if (sa.size() != hx.m_ft.kernel().size()) throw Error("corrupt index");
    hx.m_inner = InnerIndex::from_parts(std::move(sa));

    ByteReader xr = section(kSecX);
    GapList x = GapList::deserialize(xr);
    ByteReader satr = section(kSecSatellites);
    PackedArray sat = read_packed(satr);
    ByteReader rmqr = section(kSecRmq);
    RmqIndex rmq = RmqIndex::deserialize(rmqr);
    hx.m_grid = SourceGrid::from_parts(std::move(x), std::move(sat), std::move(rmq),
                                       hx.m_ft.l());
    return hx;
}

StatsReport HybridIndex::stats() const {
    Bytes bytes = serialize();
    StatsReport rep;
    rep.n = m_ft.n();
    rep.z = m_ft.z();
    rep.kernel_size = m_ft.kernel().size();
    rep.kernel_ratio = rep.n > 0 ? double(rep.kernel_size) / double(rep.n) : 0.0;
    rep.grid_points = m_grid.points();
    rep.total_bytes = bytes.size();

    ByteReader r(bytes);
    r.raw(4);
    r.u16();
    std::uint16_t count = r.u16();
    std::uint64_t framing = 4 + 2 + 2 + std::uint64_t(count) * 20;
    rep.sections.push_back(SectionStat{"framing", framing});
    for (std::uint16_t t = 0; t < count; ++t) {
        std::uint16_t id = r.u16();
        r.u16();
        r.u64();
        std::uint64_t len = r.u64();
        rep.sections.push_back(SectionStat{section_name(id), len});
    }
    rep.sections.push_back(SectionStat{"crc", 4});
    return rep;
}

}  // namespace hybrid
