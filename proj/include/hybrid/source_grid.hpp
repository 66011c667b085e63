#pragma once

#include <cstdint>
#include <vector>

#include "hybrid/bitpack.hpp"
#include "hybrid/common.hpp"
#include "hybrid/gap_list.hpp"
#include "hybrid/lz77.hpp"
#include "hybrid/rmq.hpp"

namespace hybrid {

/// One grid point: a copy phrase's source interval [x..y] in the original
/// text, with the phrase's own start as satellite. start > x always.
struct GridPoint {
    Pos x = 0;
    Pos y = 0;
    Pos start = 0;

    bool operator==(const GridPoint& o) const {
        return x == o.x && y == o.y && start == o.start;
    }
};

enum class Origin : std::uint8_t { Primary, Secondary };

struct Occurrence {
    Pos l = 0;
    Pos r = 0;
    Origin origin = Origin::Primary;

    bool operator==(const Occurrence& o) const {
        return l == o.l && r == o.r && origin == o.origin;
    }
    bool operator<(const Occurrence& o) const { return l != o.l ? l < o.l : r < o.r; }
};

/// 2-sided range reporting over the phrase sources: one point per copy
/// phrase, sorted by x (parse order among equal x). Stored: X as a gap list,
/// satellites as packed ranks into L, and a position-only RMQ over the
/// implicit Y. Y values and phrase starts are decoded into plain vectors at
/// construction for query speed; only the compact parts are serialized.
class SourceGrid {
public:
    SourceGrid() = default;

    /// l must include the sentinel n+1 so that point t's y can be derived as
    /// X[t] + (L[rank+1] - 1) - L[rank].
    static SourceGrid build(const Parse& parse, const GapList& l);
    static SourceGrid from_parts(GapList x, PackedArray satellites, RmqIndex rmq,
                                 const GapList& l);

    /// All points with x <= l and y >= r: the sources whose interval covers
    /// [l..r]. Predecessor search on X, then recursive RMQ splitting on Y.
    std::vector<GridPoint> covering_sources(Pos l, Pos r) const;

    /// Worklist expansion: seeds the list with the primaries, then for each
    /// entry appends one copy per covering source, (l', r') = (start + l - x,
    /// l' + (r - l)), tagged secondary. Every copy starts strictly to the
    /// right of its original, so the list is finite.
    std::vector<Occurrence> expand_secondaries(const std::vector<Occurrence>& primaries) const;

    Rank points() const { return m_x.size(); }
    GridPoint point(Rank t) const;  // 1-based

    const GapList& x() const { return m_x; }
    const PackedArray& satellites() const { return m_sat; }
    const RmqIndex& rmq() const { return m_rmq; }

private:
    void decode_cache(const GapList& l);

    GapList m_x;
    PackedArray m_sat;  // ranks into L, one per point
    RmqIndex m_rmq;     // over the implicit Y sequence
    std::vector<Pos> m_y;      // derived cache
    std::vector<Pos> m_start;  // derived cache: L[sat[t]]
};

}  // namespace hybrid
