#include "hybrid/suffix_array.hpp"

#include <cstring>
#include <limits>

namespace hybrid {

namespace {

// SA-IS induced sorting over an integer string s[0..n-1] with alphabet
// [0..sigma). s must end with a unique smallest sentinel s[n-1] = 0.
void sais(const std::int32_t* s, std::int32_t* sa, std::int32_t n, std::int32_t sigma) {
    if (n == 1) {
        sa[0] = 0;
        return;
    }

    std::vector<bool> is_s(n);
    is_s[n - 1] = true;
    for (std::int32_t i = n - 2; i >= 0; --i)
        is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);
    auto is_lms = [&](std::int32_t i) { return i > 0 && is_s[i] && !is_s[i - 1]; };

    std::vector<std::int32_t> count(sigma, 0);
    for (std::int32_t i = 0; i < n; ++i) ++count[s[i]];
    std::vector<std::int32_t> heads(sigma), tails(sigma);
    auto reset_buckets = [&] {
        std::int32_t sum = 0;
        for (std::int32_t c = 0; c < sigma; ++c) {
            heads[c] = sum;
            sum += count[c];
            tails[c] = sum - 1;
        }
    };

    auto induce = [&](const std::vector<std::int32_t>& lms) {
        std::fill(sa, sa + n, -1);
        reset_buckets();
        for (auto it = lms.rbegin(); it != lms.rend(); ++it) sa[tails[s[*it]]--] = *it;
        reset_buckets();
        for (std::int32_t i = 0; i < n; ++i) {
            std::int32_t j = sa[i] - 1;
            if (sa[i] > 0 && !is_s[j]) sa[heads[s[j]]++] = j;
        }
        reset_buckets();
        for (std::int32_t i = n - 1; i >= 0; --i) {
            std::int32_t j = sa[i] - 1;
            if (sa[i] > 0 && is_s[j]) sa[tails[s[j]]--] = j;
        }
    };

    std::vector<std::int32_t> lms;
    lms.reserve(n / 2 + 1);
    for (std::int32_t i = 1; i < n; ++i)
        if (is_lms(i)) lms.push_back(i);

    induce(lms);

    // Name the LMS substrings in the order they appear in sa.
    std::vector<std::int32_t> name(n, -1);
    std::int32_t names = 0, prev = -1;
    auto lms_equal = [&](std::int32_t a, std::int32_t b) {
        for (std::int32_t d = 0;; ++d) {
            bool ea = is_lms(a + d), eb = is_lms(b + d);
            if (d > 0 && ea && eb) return true;
            if (ea != eb || s[a + d] != s[b + d]) return false;
        }
    };
    for (std::int32_t i = 0; i < n; ++i) {
        std::int32_t p = sa[i];
        if (!is_lms(p)) continue;
        if (prev >= 0 && lms_equal(prev, p))
            name[p] = names - 1;
        else
            name[p] = names++;
        prev = p;
    }

    std::vector<std::int32_t> sorted_lms(lms.size());
    if (names < std::int32_t(lms.size())) {
        std::vector<std::int32_t> s1(lms.size());
        for (std::size_t i = 0; i < lms.size(); ++i) s1[i] = name[lms[i]];
        std::vector<std::int32_t> sa1(lms.size());
        sais(s1.data(), sa1.data(), std::int32_t(lms.size()), names);
        for (std::size_t i = 0; i < lms.size(); ++i) sorted_lms[i] = lms[sa1[i]];
    } else {
        for (std::size_t i = 0; i < lms.size(); ++i) sorted_lms[name[lms[i]]] = lms[i];
    }

    induce(sorted_lms);
}

}  // namespace

std::vector<std::uint32_t> build_suffix_array(const Bytes& text) {
    const std::size_t n = text.size();
    if (n == 0) return {};
    if (n > std::size_t(std::numeric_limits<std::int32_t>::max()) - 2)
        throw Error("text too large for suffix array construction");

    // Shift byte values by one so 0 is free for the sentinel.
    std::vector<std::int32_t> s(n + 1);
    for (std::size_t i = 0; i < n; ++i) s[i] = std::int32_t(text[i]) + 1;
    s[n] = 0;

    std::vector<std::int32_t> sa(n + 1);
    sais(s.data(), sa.data(), std::int32_t(n + 1), 257);

    // Drop the sentinel suffix (always first).
    std::vector<std::uint32_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::uint32_t(sa[i + 1]);
    return out;
}

}  // namespace hybrid
