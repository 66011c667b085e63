#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hybrid/common.hpp"
#include "hybrid/filtered_text.hpp"
#include "hybrid/inner_index.hpp"
#include "hybrid/source_grid.hpp"

namespace hybrid {

struct BuildParams {
    Pos M = 100;
    Pos K = 0;
    std::uint32_t g = 32;
    std::uint32_t b = 512;
    Pos sep_count = 0;              // 0 means K+1
    std::optional<Byte> sep;        // unset means auto-pick
};

struct QueryResult {
    Bytes pattern;
    std::uint32_t k = 0;
    std::vector<Occurrence> occurrences;  // sorted by (l, r), duplicate-free
};

struct SectionStat {
    std::string name;
    std::uint64_t bytes = 0;
};

struct StatsReport {
    Pos n = 0;
    Rank z = 0;
    std::uint64_t kernel_size = 0;
    double kernel_ratio = 0.0;  // |kernel| / n
    Rank grid_points = 0;
    std::vector<SectionStat> sections;
    std::uint64_t total_bytes = 0;
};

/// The assembled index: filtered text + inner index over the kernel + source
/// grid, plus the build parameters. Immutable once built or loaded.
class HybridIndex {
public:
    HybridIndex() = default;

    static HybridIndex build(const Bytes& text, const BuildParams& params);

    /// Full pipeline: locate in the kernel (exact for k=0), drop separator
    /// ranges, keep and map the primary matches, deduplicate, expand
    /// secondaries through the grid, sort by (l, r).
    QueryResult query(const Bytes& pattern, std::uint32_t k) const;

    Bytes serialize() const;
    static HybridIndex deserialize(const Bytes& data);

    StatsReport stats() const;

    const FilteredText& filtered() const { return m_ft; }
    const InnerIndex& inner() const { return m_inner; }
    const SourceGrid& grid() const { return m_grid; }
    Pos n() const { return m_ft.n(); }
    Pos m_limit() const { return m_ft.params().M; }
    Pos k_limit() const { return m_ft.params().K; }

private:
    FilteredText m_ft;
    InnerIndex m_inner;
    SourceGrid m_grid;
};

}  // namespace hybrid
