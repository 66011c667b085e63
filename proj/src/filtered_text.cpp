#include "hybrid/filtered_text.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace hybrid {

Byte pick_separator(const Bytes& text) {
    std::array<bool, 256> seen{};
    for (Byte c : text) seen[c] = true;
    if (!seen['#']) return '#';
    for (int c = 0; c < 256; ++c)
        if (!seen[c]) return Byte(c);
    throw Error("no separator byte available: text uses all 256 values");
}

FilteredText FilteredText::build(const Bytes& text, const Parse& parse,
                                 const FilterParams& params, std::uint32_t g, std::uint32_t b) {
    if (std::find(text.begin(), text.end(), params.sep) != text.end())
        throw Error("separator collision");

    Pos halo = params.halo();
    Pos run = params.run();

    FilteredText ft;
    ft.m_params = params;
    ft.m_n = parse.n;

    std::vector<Pos> l_values;
    std::vector<Pos> lmk_values;
    l_values.reserve(parse.phrases.size() + 1);
    lmk_values.reserve(parse.phrases.size());

    Pos start = 1;
    Rank rank = 0;
    for (const Phrase& p : parse.phrases) {
        ++rank;
        l_values.push_back(start);
        lmk_values.push_back(ft.m_kernel.size() + 1);
        if (p.kind == Phrase::Kind::Literal) ft.m_first_occ.push_back(rank);
        const Byte* bytes = text.data() + (start - 1);
        if (p.len <= 2 * halo) {
            ft.m_kernel.insert(ft.m_kernel.end(), bytes, bytes + p.len);
        } else {
            ft.m_kernel.insert(ft.m_kernel.end(), bytes, bytes + halo);
            ft.m_kernel.insert(ft.m_kernel.end(), run, params.sep);
            ft.m_kernel.insert(ft.m_kernel.end(), bytes + (p.len - halo), bytes + p.len);
        }
        start += p.len;
    }
    assert(start == parse.n + 1);
    l_values.push_back(parse.n + 1);  // sentinel

    ft.m_l = GapList::build(l_values, g, b, parse.n + 1);
    ft.m_lmk = GapList::build(lmk_values, g, b, ft.m_kernel.size());
    ft.index_separator_runs();
    return ft;
}

FilteredText FilteredText::from_parts(FilterParams params, Pos n, Bytes kernel, GapList l,
                                      GapList l_mk, std::vector<Rank> first_occ) {
    FilteredText ft;
    ft.m_params = params;
    ft.m_n = n;
    ft.m_kernel = std::move(kernel);
    ft.m_l = std::move(l);
    ft.m_lmk = std::move(l_mk);
    ft.m_first_occ = std::move(first_occ);
    if (ft.m_l.size() != ft.m_lmk.size() + 1) throw Error("corrupt filtered text");
    ft.index_separator_runs();
    return ft;
}

void FilteredText::index_separator_runs() {
    m_sep_runs.clear();
    for (std::size_t t = 0; t < m_kernel.size(); ++t) {
        if (m_kernel[t] == m_params.sep && (t == 0 || m_kernel[t - 1] != m_params.sep))
            m_sep_runs.push_back(t + 1);
    }
}

bool FilteredText::has_separator(Pos i, Pos j) const {
    // Runs all have the same length run(); the last run starting at or
    // before j intersects [i, j] iff it reaches back to i.
    auto it = std::upper_bound(m_sep_runs.begin(), m_sep_runs.end(), j);
    if (it == m_sep_runs.begin()) return false;
    return *(it - 1) + m_params.run() - 1 >= i;
}

bool FilteredText::marked(Rank s) const {
    return std::binary_search(m_first_occ.begin(), m_first_occ.end(), s);
}

MatchClass FilteredText::classify(Pos i, Pos j, Pos* lp, Pos* rp) const {
    if (i < 1 || i > j || j > m_kernel.size()) throw Error("range out of bounds");
    if (has_separator(i, j)) return MatchClass::ContainsSeparator;
    auto sv = m_lmk.successor(i);
    if (!sv || sv->second > j) return MatchClass::NonPrimary;
    auto [s, v] = *sv;
    // Either a phrase starts inside (i, j], or the range starts exactly at
    // phrase s and that phrase is a first occurrence or ends within range.
    bool primary =
        i < v || marked(s) || (s < m_lmk.size() && m_lmk.access(s + 1) <= j);
    if (!primary) return MatchClass::NonPrimary;
    if (lp) {
        Pos ip = m_l.access(s) - m_lmk.access(s) + i;
        *lp = ip;
        *rp = ip + (j - i);
    }
    return MatchClass::Primary;
}

std::pair<Pos, Pos> FilteredText::map_to_original(Pos i, Pos j) const {
    Pos l = 0, r = 0;
    if (classify(i, j, &l, &r) != MatchClass::Primary) throw Error("not primary");
    return {l, r};
}

}  // namespace hybrid
