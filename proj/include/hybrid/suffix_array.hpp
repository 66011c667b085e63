#pragma once

#include <cstdint>
#include <vector>

#include "hybrid/common.hpp"

namespace hybrid {

/// Builds the suffix array of `text`: a permutation of [0..n) such that the
/// suffixes text[sa[0]..], text[sa[1]..], ... are in increasing
/// lexicographic order. Linear time (SA-IS). Empty input gives an empty
/// array. Inputs are capped at 2^31 - 2 bytes.
std::vector<std::uint32_t> build_suffix_array(const Bytes& text);

}  // namespace hybrid
