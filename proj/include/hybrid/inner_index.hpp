#pragma once

#include <cstdint>
#include <vector>

#include "hybrid/bitpack.hpp"
#include "hybrid/common.hpp"

namespace hybrid {

/// A match interval in the kernel, 1-based inclusive.
struct KernelMatch {
    Pos i = 0;
    Pos j = 0;
    std::uint32_t dist = 0;

    bool operator==(const KernelMatch& o) const { return i == o.i && j == o.j && dist == o.dist; }
    bool operator<(const KernelMatch& o) const { return i != o.i ? i < o.i : j < o.j; }
};

/// The conventional index over the kernel: a plain suffix array with binary
/// search. Entries are 1-based positions at byte-aligned fixed width. The
/// kernel bytes themselves are owned elsewhere and passed into queries.
class InnerIndex {
public:
    InnerIndex() = default;

    static InnerIndex build(const Bytes& kernel);
    static InnerIndex from_parts(PackedArray sa);

    /// All exact occurrences of pattern, in increasing start position.
    std::vector<KernelMatch> locate_exact(const Bytes& kernel, const Bytes& pattern) const;

    Rank size() const { return m_sa.size(); }
    Pos sa_at(Rank t) const { return m_sa.get(t); }  // t 0-based, result 1-based
    const PackedArray& sa() const { return m_sa; }

private:
    PackedArray m_sa;
};

/// All intervals [i..j] of the text with unit-cost edit distance <= k from
/// the pattern, deduplicated and sorted by (i, j). Column-wise bit-parallel
/// scan for match endpoints, then a per-endpoint reverse DP enumerating the
/// qualifying start positions. Only non-empty intervals are reported.
std::vector<KernelMatch> locate_approx(const Bytes& text, const Bytes& pattern, std::uint32_t k);

}  // namespace hybrid
