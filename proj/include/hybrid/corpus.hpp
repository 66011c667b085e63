#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "hybrid/common.hpp"

namespace hybrid {

/// Synthetic repetitive corpus: a random base string followed by copies-1
/// independently mutated copies (point substitutions, insertions, deletions
/// at the given per-byte rate). Deterministic per seed.
struct GenParams {
    std::size_t base_size = 0;
    std::size_t copies = 1;
    double rate = 0.0;
    std::uint64_t seed = 0;
    std::string alphabet = "ACGT";
};

Bytes generate_corpus(const GenParams& params);

/// One mutated copy of base, drawing randomness from rng.
Bytes mutate_copy(const Bytes& base, double rate, const Bytes& alphabet, std::mt19937_64& rng);

}  // namespace hybrid
