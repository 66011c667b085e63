#include "hybrid/corpus.hpp"

namespace hybrid {

Bytes mutate_copy(const Bytes& base, double rate, const Bytes& alphabet, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick_char(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> pick_op(0, 2);
    Bytes out;
    out.reserve(base.size());
    for (Byte c : base) {
        if (rate > 0.0 && coin(rng) < rate) {
            switch (pick_op(rng)) {
                case 0: out.push_back(alphabet[pick_char(rng)]); break;  // substitution
                case 1:                                                  // insertion
                    out.push_back(alphabet[pick_char(rng)]);
                    out.push_back(c);
                    break;
                default: break;  // deletion
            }
        } else {
            out.push_back(c);
        }
    }
    return out;
}

Bytes generate_corpus(const GenParams& params) {
    if (params.alphabet.empty()) throw Error("empty alphabet");
    if (params.rate < 0.0 || params.rate > 1.0) throw Error("rate must be in [0,1]");
    Bytes alphabet = to_bytes(params.alphabet);
    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<std::size_t> pick_char(0, alphabet.size() - 1);

    Bytes base(params.base_size);
    for (auto& c : base) c = alphabet[pick_char(rng)];

    Bytes out = base;
    for (std::size_t t = 1; t < params.copies; ++t) {
        Bytes copy = mutate_copy(base, params.rate, alphabet, rng);
        out.insert(out.end(), copy.begin(), copy.end());
    }
    return out;
}

}  // namespace hybrid
