#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hybrid/common.hpp"
#include "hybrid/gap_list.hpp"
#include "hybrid/lz77.hpp"

namespace hybrid {

/// Parameters of the filter. halo() is how far from each phrase end
/// characters are kept; run() is how many separator copies stand in for a
/// dropped stretch (defaults to K+1, enough to break any k<=K match).
struct FilterParams {
    Pos M = 100;        // max supported pattern length, >= 1
    Pos K = 0;          // max supported edit distance
    Byte sep = '#';
    Pos sep_count = 0;  // 0 means the K+1 default

    Pos halo() const { return M + K >= 2 ? M + K - 1 : 1; }
    Pos run() const { return sep_count > 0 ? sep_count : K + 1; }
};

/// Smallest byte value absent from the text, preferring '#'. Errors if the
/// text uses all 256 values.
Byte pick_separator(const Bytes& text);

enum class MatchClass : std::uint8_t { Primary, NonPrimary, ContainsSeparator };

/// The kernel text: characters within halo() of their phrase's ends, with
/// separator runs where characters were dropped, plus the aligned coordinate
/// lists. L holds the phrase starts in the original text (sentinel n+1
/// appended); L_MK holds the kernel positions of the same phrase starts;
/// first_occ holds the ranks of literal phrases (first occurrences of
/// distinct bytes).
class FilteredText {
public:
    FilteredText() = default;

    static FilteredText build(const Bytes& text, const Parse& parse, const FilterParams& params,
                              std::uint32_t g = 32, std::uint32_t b = 512);

    static FilteredText from_parts(FilterParams params, Pos n, Bytes kernel, GapList l,
                                   GapList l_mk, std::vector<Rank> first_occ);

    /// Primary if kernel[i..j] (1-based, inclusive, separator-free) is
    /// guaranteed to be a first occurrence in the original text: it crosses a
    /// phrase boundary, or starts a phrase that is marked or shorter than the
    /// range. ContainsSeparator if the range touches a separator run. When
    /// Primary and lp/rp are given, they receive the original-text interval.
    MatchClass classify(Pos i, Pos j, Pos* lp, Pos* rp) const;
    MatchClass classify(Pos i, Pos j) const { return classify(i, j, nullptr, nullptr); }

    /// Original-text interval of a Primary kernel range.
    std::pair<Pos, Pos> map_to_original(Pos i, Pos j) const;

    const Bytes& kernel() const { return m_kernel; }
    const GapList& l() const { return m_l; }
    const GapList& l_mk() const { return m_lmk; }
    const std::vector<Rank>& first_occ() const { return m_first_occ; }
    const FilterParams& params() const { return m_params; }
    Pos n() const { return m_n; }
    Rank z() const { return m_lmk.size(); }

private:
    bool marked(Rank s) const;
    bool has_separator(Pos i, Pos j) const;
    void index_separator_runs();

    FilterParams m_params;
    Pos m_n = 0;
    Bytes m_kernel;
    GapList m_l;
    GapList m_lmk;
    std::vector<Rank> m_first_occ;
    std::vector<Pos> m_sep_runs;  // start of each separator run, derived
};

}  // namespace hybrid
