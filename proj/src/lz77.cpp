#include "hybrid/lz77.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <ostream>

#include "hybrid/suffix_array.hpp"

namespace hybrid {

namespace {

// Two-level range-min over the suffix array values: block minima plus a
// doubling table over blocks. Returns the minimum SA value in [lo, hi),
// i.e. the leftmost text position among a lexicographic run of suffixes.
class SaRangeMin {
public:
    explicit SaRangeMin(const std::vector<std::uint32_t>& sa) : m_sa(sa) {
        std::size_t n = sa.size();
        std::size_t blocks = (n + kBlock - 1) / kBlock;
        m_block_min.resize(blocks);
        for (std::size_t b = 0; b < blocks; ++b) {
            std::uint32_t mn = sa[b * kBlock];
            std::size_t end = std::min(n, (b + 1) * kBlock);
            for (std::size_t t = b * kBlock + 1; t < end; ++t) mn = std::min(mn, sa[t]);
            m_block_min[b] = mn;
        }
        std::size_t levels = 1;
        while ((std::size_t(1) << levels) <= blocks) ++levels;
        m_table.assign(levels, m_block_min);
        for (std::size_t k = 1; k < levels; ++k) {
            std::size_t span = std::size_t(1) << k;
            for (std::size_t b = 0; b + span <= blocks; ++b)
                m_table[k][b] = std::min(m_table[k - 1][b], m_table[k - 1][b + span / 2]);
        }
    }

    std::uint32_t min_in(std::size_t lo, std::size_t hi) const {
        assert(lo < hi && hi <= m_sa.size());
        std::size_t bl = lo / kBlock, bh = (hi - 1) / kBlock;
        if (bl == bh) {
            std::uint32_t mn = m_sa[lo];
            for (std::size_t t = lo + 1; t < hi; ++t) mn = std::min(mn, m_sa[t]);
            return mn;
        }
        std::uint32_t mn = m_sa[lo];
        for (std::size_t t = lo + 1; t < (bl + 1) * kBlock; ++t) mn = std::min(mn, m_sa[t]);
        for (std::size_t t = bh * kBlock; t < hi; ++t) mn = std::min(mn, m_sa[t]);
        if (bl + 1 < bh) {
            std::size_t k = 0;
            while ((std::size_t(2) << k) <= bh - bl - 1) ++k;
            mn = std::min(mn, std::min(m_table[k][bl + 1], m_table[k][bh - (std::size_t(1) << k)]));
        }
        return mn;
    }

private:
    static constexpr std::size_t kBlock = 64;
    const std::vector<std::uint32_t>& m_sa;
    std::vector<std::uint32_t> m_block_min;
    std::vector<std::vector<std::uint32_t>> m_table;
};

// memcmp-style comparison of the suffix at `suf` against pattern (0-based).
// <0 / 0 / >0 like strcmp; a proper-prefix suffix compares smaller.
int compare_suffix(const Bytes& text, std::size_t suf, const Byte* pat, std::size_t m) {
    std::size_t avail = text.size() - suf;
    std::size_t k = std::min(avail, m);
    int c = std::memcmp(text.data() + suf, pat, k);
    if (c != 0) return c;
    return avail < m ? -1 : 0;
}

std::size_t lcp_from(const Bytes& text, std::size_t a, std::size_t b) {
    std::size_t n = text.size();
    std::size_t l = 0;
    while (a + l < n && b + l < n && text[a + l] == text[b + l]) ++l;
    return l;
}

}  // namespace

Parse parse(const Bytes& text) {
    Parse out;
    out.n = text.size();
    if (text.empty()) return out;

    std::size_t n = text.size();
    std::vector<std::uint32_t> sa = build_suffix_array(text);

    // Previous/next smaller SA value per text position: the lexicographically
    // nearest suffixes that start strictly earlier. One of them realizes the
    // longest previous factor.
    constexpr std::uint32_t kNone = 0xffffffffu;
    std::vector<std::uint32_t> psv(n), nsv(n);
    {
        std::vector<std::uint32_t> stack;
        for (std::size_t t = 0; t < n; ++t) {
            std::uint32_t cur = sa[t];
            while (!stack.empty() && stack.back() > cur) {
                nsv[stack.back()] = cur;
                stack.pop_back();
            }
            psv[cur] = stack.empty() ? kNone : stack.back();
            stack.push_back(cur);
        }
        for (std::uint32_t v : stack) nsv[v] = kNone;
    }

    SaRangeMin range_min(sa);

    std::size_t i = 0;
    while (i < n) {
        std::size_t l1 = psv[i] == kNone ? 0 : lcp_from(text, i, psv[i]);
        std::size_t l2 = nsv[i] == kNone ? 0 : lcp_from(text, i, nsv[i]);
        std::size_t len = std::max(l1, l2);
        if (len == 0) {
            out.phrases.push_back(Phrase::make_literal(text[i]));
            ++i;
            continue;
        }
        // Leftmost source: min SA value over the lexicographic run of
        // suffixes sharing the phrase as a prefix.
        const Byte* pat = text.data() + i;
        auto begin = sa.begin();
        auto lo = std::lower_bound(begin, sa.end(), 0, [&](std::uint32_t suf, int) {
            return compare_suffix(text, suf, pat, len) < 0;
        });
        auto hi = std::upper_bound(lo, sa.end(), 0, [&](int, std::uint32_t suf) {
            return compare_suffix(text, suf, pat, len) > 0;
        });
        std::uint32_t src = range_min.min_in(std::size_t(lo - begin), std::size_t(hi - begin));
        assert(src < i);
        out.phrases.push_back(Phrase::make_copy(Pos(src) + 1, len));
        i += len;
    }
    return out;
}

Bytes decode(const Parse& parse) {
    Bytes text;
    text.reserve(parse.n);
    for (const Phrase& p : parse.phrases) {
        if (p.kind == Phrase::Kind::Literal) {
            text.push_back(p.literal);
        } else {
            if (p.src == 0 || p.src > text.size())
                throw Error("phrase source out of range");
            std::size_t from = p.src - 1;  // may run into the phrase itself
            for (Pos t = 0; t < p.len; ++t) text.push_back(text[from + t]);
        }
    }
    if (text.size() != parse.n) throw Error("decoded length mismatch");
    return text;
}

std::vector<Pos> phrase_starts(const Parse& parse) {
    std::vector<Pos> starts;
    starts.reserve(parse.phrases.size());
    Pos at = 1;
    for (const Phrase& p : parse.phrases) {
        starts.push_back(at);
        at += p.len;
    }
    return starts;
}

void dump_parse(const Parse& parse, std::ostream& out) {
    static const char* hex = "0123456789abcdef";
    for (const Phrase& p : parse.phrases) {
        if (p.kind == Phrase::Kind::Literal)
            out << "L " << hex[p.literal >> 4] << hex[p.literal & 15] << '\n';
        else
            out << "C " << p.src << ' ' << p.len << '\n';
    }
}

}  // namespace hybrid
