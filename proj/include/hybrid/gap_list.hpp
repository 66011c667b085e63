#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hybrid/bitpack.hpp"
#include "hybrid/common.hpp"
#include "hybrid/io.hpp"

namespace hybrid {

/// Gap-coded monotone position list. Differences between consecutive values
/// are stored as fixed (⌊log₂ d⌋+1)-bit integers where d is the largest
/// difference; every g-th value is kept raw at ⌊log₂ u⌋+1 bits (u = universe
/// bound), and every b-th value is additionally sampled to speed up binary
/// search. b must be a positive multiple of g, so samples land on raw slots.
///
/// Phrase-boundary lists are strictly increasing; the grid's X list keeps
/// duplicates (several phrases can share a source start), so strictness is a
/// build parameter. Successor returns the first of equal values, predecessor
/// the last — that keeps range endpoints maximal for the grid search.
class GapList {
public:
    GapList() = default;

    static GapList build(const std::vector<Pos>& values, std::uint32_t g, std::uint32_t b,
                         Pos universe, bool strict = true);

    Rank size() const { return m_count; }
    Pos universe() const { return m_universe; }
    std::uint32_t g() const { return m_g; }
    std::uint32_t b() const { return m_b; }
    std::uint32_t width_d() const { return m_width_d; }
    std::uint32_t width_raw() const { return m_width_raw; }

    /// k-th original value, 1-based.
    Pos access(Rank k) const;

    /// Smallest stored value >= x with its rank (first of ties); empty if all
    /// values are < x.
    std::optional<std::pair<Rank, Pos>> successor(Pos x) const;

    /// Largest stored value <= x with its rank (last of ties); empty if all
    /// values are > x.
    std::optional<std::pair<Rank, Pos>> predecessor(Pos x) const;

    /// Payload bits across the difference/raw/sample streams (no metadata).
    std::uint64_t bit_size() const;

    void serialize(ByteWriter& w) const;
    static GapList deserialize(ByteReader& r);

    bool operator==(const GapList& o) const;

private:
    Pos diff_at(Rank r) const;  // difference value[r] - value[r-1], r not a raw slot

    Rank m_count = 0;
    Pos m_universe = 0;
    std::uint32_t m_g = 1;
    std::uint32_t m_b = 1;
    std::uint32_t m_width_d = 1;
    std::uint32_t m_width_raw = 1;
    BitBuffer m_diffs;      // count - ceil(count/g) diffs, width_d bits each
    PackedArray m_raw;      // values at ranks 1, g+1, 2g+1, ...
    PackedArray m_samples;  // values at ranks 1, b+1, 2b+1, ...
};

}  // namespace hybrid
