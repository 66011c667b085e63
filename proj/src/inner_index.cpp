#include "hybrid/inner_index.hpp"

#include <algorithm>
#include <cstring>

#include "hybrid/suffix_array.hpp"

namespace hybrid {

namespace {

// <0 / 0 / >0 comparison of the suffix at 1-based position `pos` against the
// pattern, looking at most |pattern| bytes.
int compare_suffix(const Bytes& kernel, Pos pos, const Bytes& pattern) {
    std::size_t avail = kernel.size() - (pos - 1);
    std::size_t k = std::min(avail, pattern.size());
    int c = std::memcmp(kernel.data() + (pos - 1), pattern.data(), k);
    if (c != 0) return c;
    return avail < pattern.size() ? -1 : 0;
}

}  // namespace

InnerIndex InnerIndex::build(const Bytes& kernel) {
    if (kernel.empty()) throw Error("empty kernel");
    std::vector<std::uint32_t> sa = build_suffix_array(kernel);
    std::uint32_t width = ((bit_width_of(kernel.size()) + 7) / 8) * 8;
    InnerIndex idx;
    idx.m_sa = PackedArray(sa.size(), width);
    for (std::size_t t = 0; t < sa.size(); ++t) idx.m_sa.set(t, Pos(sa[t]) + 1);
    return idx;
}

InnerIndex InnerIndex::from_parts(PackedArray sa) {
    InnerIndex idx;
    idx.m_sa = std::move(sa);
    return idx;
}

std::vector<KernelMatch> InnerIndex::locate_exact(const Bytes& kernel,
                                                  const Bytes& pattern) const {
    if (pattern.empty()) throw Error("empty pattern");
    std::vector<KernelMatch> out;
    if (pattern.size() > kernel.size()) return out;
    // Binary search over SA ranks for the run of suffixes prefixed by pattern.
    Rank n = m_sa.size();
    Rank lo = 0, hi = n;
    while (lo < hi) {
        Rank mid = lo + (hi - lo) / 2;
        if (compare_suffix(kernel, m_sa.get(mid), pattern) < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    Rank first = lo;
    hi = n;
    while (lo < hi) {
        Rank mid = lo + (hi - lo) / 2;
        if (compare_suffix(kernel, m_sa.get(mid), pattern) <= 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    out.reserve(lo - first);
    for (Rank t = first; t < lo; ++t) {
        Pos i = m_sa.get(t);
        out.push_back(KernelMatch{i, i + pattern.size() - 1, 0});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// All start positions q with dist(text[q..p], pattern) <= k, via a DP over
// the reversed strings; appends one interval per qualifying q.
void enumerate_starts(const Bytes& text, const Bytes& pattern, std::uint32_t k, Pos p,
                      std::vector<KernelMatch>& out) {
    std::size_t m = pattern.size();
    std::size_t wlen = std::min<std::size_t>(p, m + k);
    std::vector<std::uint32_t> prev(wlen + 1), cur(wlen + 1);
    for (std::size_t y = 0; y <= wlen; ++y) prev[y] = std::uint32_t(y);
    for (std::size_t x = 1; x <= m; ++x) {
        cur[0] = std::uint32_t(x);
        Byte pc = pattern[m - x];
        for (std::size_t y = 1; y <= wlen; ++y) {
            Byte tc = text[p - y];  // y-th char leftward from the endpoint
            std::uint32_t best = prev[y - 1] + (pc == tc ? 0 : 1);
            best = std::min(best, prev[y] + 1);
            best = std::min(best, cur[y - 1] + 1);
            cur[y] = best;
        }
        std::swap(prev, cur);
    }
    for (std::size_t y = 1; y <= wlen; ++y) {
        if (prev[y] <= k) out.push_back(KernelMatch{p - y + 1, p, prev[y]});
    }
}

}  // namespace

std::vector<KernelMatch> locate_approx(const Bytes& text, const Bytes& pattern,
                                       std::uint32_t k) {
    if (pattern.empty()) throw Error("empty pattern");
    std::size_t m = pattern.size();
    std::size_t words = (m + 63) / 64;

    // Bit-parallel column DP (blocks of 64 pattern rows). The score is
    // tracked at row m via the last block's horizontal-delta bits; rows past
    // m in the last block never match and never feed back into rows <= m.
    std::vector<std::uint64_t> peq(256 * words, 0);
    for (std::size_t t = 0; t < m; ++t)
        peq[std::size_t(pattern[t]) * words + t / 64] |= std::uint64_t(1) << (t % 64);

    std::vector<std::uint64_t> pv(words, ~std::uint64_t(0)), mv(words, 0);
    std::int64_t score = std::int64_t(m);
    std::uint32_t row_bit = (m - 1) % 64;

    std::vector<KernelMatch> out;
    for (std::size_t p = 0; p < text.size(); ++p) {
        const std::uint64_t* eq_row = peq.data() + std::size_t(text[p]) * words;
        int hin = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t eq = eq_row[w];
            std::uint64_t pv_w = pv[w], mv_w = mv[w];
            std::uint64_t xv = eq | mv_w;
            if (hin < 0) eq |= 1;
            std::uint64_t xh = (((eq & pv_w) + pv_w) ^ pv_w) | eq;
            std::uint64_t ph = mv_w | ~(xh | pv_w);
            std::uint64_t mh = pv_w & xh;
            if (w == words - 1) {
                score += std::int64_t((ph >> row_bit) & 1);
                score -= std::int64_t((mh >> row_bit) & 1);
            }
            int hout = int((ph >> 63) & 1) - int((mh >> 63) & 1);
            ph = (ph << 1) | std::uint64_t(hin > 0 ? 1 : 0);
            mh = (mh << 1) | std::uint64_t(hin < 0 ? 1 : 0);
            pv[w] = mh | ~(xv | ph);
            mv[w] = ph & xv;
            hin = hout;
        }
        if (score <= std::int64_t(k)) enumerate_starts(text, pattern, k, Pos(p) + 1, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hybrid
