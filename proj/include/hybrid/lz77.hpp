#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hybrid/common.hpp"

namespace hybrid {

/// One factor of the parse: either the first occurrence of a distinct byte,
/// stored literally, or a copy of an earlier substring. `src` is the
/// leftmost position where the phrase's string occurs in the text; it is
/// always smaller than the phrase's own start, but the source may overlap
/// the phrase (self-referential copies).
struct Phrase {
    enum class Kind : std::uint8_t { Literal, Copy };

    Kind kind;
    Byte literal = 0;  // Literal only
    Pos src = 0;       // Copy only, 1-based
    Pos len = 1;       // phrase length; 1 for literals

    static Phrase make_literal(Byte ch) { return Phrase{Kind::Literal, ch, 0, 1}; }
    static Phrase make_copy(Pos src, Pos len) { return Phrase{Kind::Copy, 0, src, len}; }

    bool operator==(const Phrase& o) const {
        if (kind != o.kind || len != o.len) return false;
        return kind == Kind::Literal ? literal == o.literal : src == o.src;
    }
};

struct Parse {
    std::vector<Phrase> phrases;
    Pos n = 0;  // original text length

    Pos phrase_count() const { return phrases.size(); }
};

/// Greedy left-to-right factorization: at each position, the phrase is the
/// longest prefix of the remaining text that occurs starting strictly
/// earlier (equivalently, that has an occurrence ending before the phrase's
/// last character); if the leading byte has not occurred before, the phrase
/// is that byte as a literal. Copy sources are the leftmost occurrence of
/// the phrase's string.
Parse parse(const Bytes& text);

/// Inverse of parse(): expands copies left-to-right one byte at a time, so
/// self-referential sources work.
Bytes decode(const Parse& parse);

/// 1-based starting positions of all phrases: [1, 1+len1, 1+len1+len2, ...].
std::vector<Pos> phrase_starts(const Parse& parse);

/// Text dump format, one phrase per line: "L <byte-hex>" or "C <src> <len>".
void dump_parse(const Parse& parse, std::ostream& out);

}  // namespace hybrid
