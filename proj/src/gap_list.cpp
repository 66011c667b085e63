#include "hybrid/gap_list.hpp"

#include <algorithm>
#include <cassert>

namespace hybrid {

GapList GapList::build(const std::vector<Pos>& values, std::uint32_t g, std::uint32_t b,
                       Pos universe, bool strict) {
    if (g < 1) throw Error("g must be positive");
    if (b < 1 || b % g != 0) throw Error("b must be a positive multiple of g");

    Pos max_diff = 0;
    for (std::size_t t = 0; t + 1 < values.size(); ++t) {
        if (values[t + 1] < values[t] || (strict && values[t + 1] == values[t]))
            throw Error("not strictly increasing");
        max_diff = std::max(max_diff, values[t + 1] - values[t]);
    }
    if (!values.empty() && values.back() > universe) throw Error("value exceeds universe");

    GapList gl;
    gl.m_count = values.size();
    gl.m_universe = universe;
    gl.m_g = g;
    gl.m_b = b;
    gl.m_width_d = bit_width_of(max_diff);
    gl.m_width_raw = bit_width_of(universe);

    Rank n_raw = (gl.m_count + g - 1) / g;
    Rank n_samp = (gl.m_count + b - 1) / b;
    gl.m_raw = PackedArray(n_raw, gl.m_width_raw);
    gl.m_samples = PackedArray(n_samp, gl.m_width_raw);
    for (Rank t = 0; t < gl.m_count; ++t) {
        if (t % g == 0)
            gl.m_raw.set(t / g, values[t]);
        else
            gl.m_diffs.append(values[t] - values[t - 1], gl.m_width_d);
        if (t % b == 0) gl.m_samples.set(t / b, values[t]);
    }
    return gl;
}

Pos GapList::diff_at(Rank r) const {
    Rank q = (r - 1) / m_g;  // block index; rank r is not a raw slot
    std::uint64_t idx = q * (m_g - 1) + (r - q * m_g - 2);
    return m_diffs.read(idx * m_width_d, m_width_d);
}

Pos GapList::access(Rank k) const {
    if (k < 1 || k > m_count) throw Error("rank out of range");
    Rank q = (k - 1) / m_g;
    Pos v = m_raw.get(q);
    for (Rank r = q * m_g + 2; r <= k; ++r) v += diff_at(r);
    return v;
}

std::optional<std::pair<Rank, Pos>> GapList::successor(Pos x) const {
    if (m_count == 0) return std::nullopt;
    // Stage 1: first sample >= x narrows the answer to one b-window.
    Rank ns = m_samples.size();
    Rank lo = 0, hi = ns;
    while (lo < hi) {
        Rank mid = lo + (hi - lo) / 2;
        if (m_samples.get(mid) >= x)
            hi = mid;
        else
            lo = mid + 1;
    }
    if (lo == 0) return std::make_pair(Rank(1), Pos(m_raw.get(0)));

    Rank s = (lo - 1) * m_b + 1;                       // value at s is < x
    Rank e = lo < ns ? Rank(lo) * m_b + 1 : m_count;   // answer rank <= e if any
    // Stage 2: first raw slot in (s, e] holding a value >= x.
    Rank qs = (s - 1) / m_g, qe = (e - 1) / m_g;
    Rank qlo = qs + 1, qhi = qe + 1;
    while (qlo < qhi) {
        Rank mid = qlo + (qhi - qlo) / 2;
        if (m_raw.get(mid) >= x)
            qhi = mid;
        else
            qlo = mid + 1;
    }
    // Stage 3: sequential gap decoding from the raw slot before the answer.
    Rank r0, cap;
    if (qlo <= qe) {  // raw slot qlo has value >= x; answer in ((qlo-1)g+1, qlo*g+1]
        r0 = (qlo - 1) * m_g + 1;
        cap = qlo * m_g;  // the slot itself is handled after the scan
    } else {          // all raw slots < x; answer in (last raw, e], if at all
        r0 = qe * m_g + 1;
        cap = e;
    }
    Pos v = m_raw.get((r0 - 1) / m_g);
    for (Rank r = r0 + 1; r <= cap; ++r) {
        v += diff_at(r);
        if (v >= x) return std::make_pair(r, v);
    }
    if (qlo <= qe) return std::make_pair(qlo * m_g + 1, Pos(m_raw.get(qlo)));
    return std::nullopt;
}

std::optional<std::pair<Rank, Pos>> GapList::predecessor(Pos x) const {
    if (m_count == 0) return std::nullopt;
    // Stage 1: last sample <= x.
    Rank ns = m_samples.size();
    Rank lo = 0, hi = ns;
    while (lo < hi) {
        Rank mid = lo + (hi - lo) / 2;
        if (m_samples.get(mid) <= x)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == 0) return std::nullopt;  // even the first value exceeds x

    Rank s = (lo - 1) * m_b + 1;                         // value at s is <= x
    Rank e = lo < ns ? Rank(lo) * m_b : m_count;         // answer rank in [s, e]
    // Stage 2: last raw slot in [s, e] holding a value <= x.
    Rank qs = (s - 1) / m_g, qe = (e - 1) / m_g;
    Rank qlo = qs, qhi = qe + 1;
    while (qlo + 1 < qhi) {
        Rank mid = qlo + (qhi - qlo) / 2;
        if (m_raw.get(mid) <= x)
            qlo = mid;
        else
            qhi = mid;
    }
    // Stage 3: walk forward while values stay <= x; the next raw slot (or the
    // window end) is known to exceed x, capping the scan within one block.
    Rank r0 = qlo * m_g + 1;
    Rank cap = std::min(e, (qlo + 1) * m_g);
    Pos v = m_raw.get(qlo);
    Rank best_r = r0;
    Pos best_v = v;
    for (Rank r = r0 + 1; r <= cap; ++r) {
        v += diff_at(r);
        if (v > x) break;
        best_r = r;
        best_v = v;
    }
    return std::make_pair(best_r, best_v);
}

std::uint64_t GapList::bit_size() const {
    return m_diffs.bit_size() + m_raw.size() * m_width_raw + m_samples.size() * m_width_raw;
}

void GapList::serialize(ByteWriter& w) const {
    w.u64(m_count);
    w.u64(m_universe);
    w.u32(m_g);
    w.u32(m_b);
    w.u8(std::uint8_t(m_width_d));
    w.u8(std::uint8_t(m_width_raw));
    w.u64(m_diffs.bit_size());
    w.u64(m_diffs.byte_size());
    w.raw(m_diffs.bytes());
    write_packed(w, m_raw);
    write_packed(w, m_samples);
}

GapList GapList::deserialize(ByteReader& r) {
    GapList gl;
    gl.m_count = r.u64();
    gl.m_universe = r.u64();
    gl.m_g = r.u32();
    gl.m_b = r.u32();
    gl.m_width_d = r.u8();
    gl.m_width_raw = r.u8();
    if (gl.m_g < 1 || gl.m_b < 1 || gl.m_b % gl.m_g != 0 || gl.m_width_d < 1 ||
        gl.m_width_d > 64 || gl.m_width_raw < 1 || gl.m_width_raw > 64)
        throw Error("corrupt gap list");
    std::uint64_t nbits = r.u64();
    std::uint64_t nbytes = r.u64();
    if (nbytes != (nbits + 7) / 8) throw Error("corrupt gap list");
    gl.m_diffs = BitBuffer(r.raw(nbytes), nbits);
    gl.m_raw = read_packed(r);
    gl.m_samples = read_packed(r);
    Rank n_raw = (gl.m_count + gl.m_g - 1) / gl.m_g;
    Rank n_samp = (gl.m_count + gl.m_b - 1) / gl.m_b;
    if (gl.m_raw.size() != n_raw || gl.m_samples.size() != n_samp ||
        nbits != (gl.m_count - n_raw) * gl.m_width_d)
        throw Error("corrupt gap list");
    return gl;
}

bool GapList::operator==(const GapList& o) const {
    return m_count == o.m_count && m_universe == o.m_universe && m_g == o.m_g && m_b == o.m_b &&
           m_width_d == o.m_width_d && m_width_raw == o.m_width_raw &&
           m_diffs.bytes() == o.m_diffs.bytes() && m_raw.bytes() == o.m_raw.bytes() &&
           m_samples.bytes() == o.m_samples.bytes();
}

}  // namespace hybrid
