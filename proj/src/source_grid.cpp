#include "hybrid/source_grid.hpp"

#include <algorithm>
#include <cassert>

namespace hybrid {

SourceGrid SourceGrid::build(const Parse& parse, const GapList& l) {
    assert(l.size() == parse.phrases.size() + 1);

    std::vector<std::pair<Pos, Rank>> pts;  // (x, rank into L)
    for (std::size_t t = 0; t < parse.phrases.size(); ++t) {
        if (parse.phrases[t].kind == Phrase::Kind::Copy)
            pts.emplace_back(parse.phrases[t].src, Rank(t) + 1);
    }
    std::stable_sort(pts.begin(), pts.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Pos> xs(pts.size());
    for (std::size_t t = 0; t < pts.size(); ++t) xs[t] = pts[t].first;

    SourceGrid grid;
    Pos universe = parse.n;
    grid.m_x = GapList::build(xs, l.g(), l.b(), universe, /*strict=*/false);
    grid.m_sat = PackedArray(pts.size(), bit_width_of(parse.phrases.size()));
    for (std::size_t t = 0; t < pts.size(); ++t) grid.m_sat.set(t, pts[t].second);
    grid.decode_cache(l);
    grid.m_rmq = RmqIndex::build([&](Rank t) { return grid.m_y[t - 1]; }, pts.size());
    return grid;
}

SourceGrid SourceGrid::from_parts(GapList x, PackedArray satellites, RmqIndex rmq,
                                  const GapList& l) {
    SourceGrid grid;
    grid.m_x = std::move(x);
    grid.m_sat = std::move(satellites);
    grid.m_rmq = std::move(rmq);
    if (grid.m_rmq.size() != grid.m_x.size() || grid.m_sat.size() != grid.m_x.size())
        throw Error("corrupt source grid");
    grid.decode_cache(l);
    return grid;
}

void SourceGrid::decode_cache(const GapList& l) {
    Rank count = m_x.size();
    m_y.resize(count);
    m_start.resize(count);
    for (Rank t = 0; t < count; ++t) {
        Rank rank = m_sat.get(t);
        if (rank < 1 || rank + 1 > l.size()) throw Error("corrupt source grid");
        Pos start = l.access(rank);
        Pos next = l.access(rank + 1);
        m_start[t] = start;
        m_y[t] = m_x.access(t + 1) + (next - 1) - start;
    }
}

GridPoint SourceGrid::point(Rank t) const {
    if (t < 1 || t > m_x.size()) throw Error("rank out of range");
    return GridPoint{m_x.access(t), m_y[t - 1], m_start[t - 1]};
}

std::vector<GridPoint> SourceGrid::covering_sources(Pos l, Pos r) const {
    std::vector<GridPoint> out;
    auto pred = m_x.predecessor(l);
    if (!pred) return out;
    Rank k = pred->first;  // last point with x <= l
    auto yval = [this](Rank t) { return m_y[t - 1]; };
    std::vector<std::pair<Rank, Rank>> stack;
    stack.emplace_back(1, k);
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        if (lo > hi) continue;
        Rank p = m_rmq.query(lo, hi, yval);
        if (m_y[p - 1] < r) continue;
        out.push_back(GridPoint{m_x.access(p), m_y[p - 1], m_start[p - 1]});
        if (lo < p) stack.emplace_back(lo, p - 1);
        if (p < hi) stack.emplace_back(p + 1, hi);
    }
    return out;
}

std::vector<Occurrence> SourceGrid::expand_secondaries(
    const std::vector<Occurrence>& primaries) const {
    std::vector<Occurrence> list = primaries;
    for (std::size_t cur = 0; cur < list.size(); ++cur) {
        Pos l = list[cur].l, r = list[cur].r;
        for (const GridPoint& pt : covering_sources(l, r)) {
            Pos lp = pt.start + (l - pt.x);
            list.push_back(Occurrence{lp, lp + (r - l), Origin::Secondary});
        }
    }
    return list;
}

}  // namespace hybrid
