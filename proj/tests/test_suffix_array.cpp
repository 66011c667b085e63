#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "hybrid/suffix_array.hpp"
#include "oracles.hpp"

using namespace hybrid;

namespace {
Bytes bytes_of(const std::string& s) { return to_bytes(s); }
}  // namespace

TEST_CASE("banana has the classic suffix order") {
    // Suffixes sorted: a, ana, anana, banana, na, nana.
    auto sa = build_suffix_array(bytes_of("banana"));
    REQUIRE(sa.size() == 6);
    CHECK(sa == std::vector<std::uint32_t>{5, 3, 1, 0, 4, 2});
}

TEST_CASE("mississippi matches a direct sort") {
    Bytes t = bytes_of("mississippi");
    CHECK(build_suffix_array(t) == oracle::naive_suffix_sort(t));
}

TEST_CASE("degenerate inputs") {
    CHECK(build_suffix_array(Bytes{}).empty());
    CHECK(build_suffix_array(bytes_of("x")) == std::vector<std::uint32_t>{0});
    CHECK(build_suffix_array(bytes_of("aaaaaa")) ==
          std::vector<std::uint32_t>{5, 4, 3, 2, 1, 0});
    CHECK(build_suffix_array(bytes_of("ba")) == std::vector<std::uint32_t>{1, 0});
}

TEST_CASE("agrees with direct sort on random strings") {
    std::mt19937_64 rng(101);
    for (int sigma : {2, 4, 26, 256}) {
        for (int rep = 0; rep < 40; ++rep) {
            std::size_t n = std::uniform_int_distribution<std::size_t>(0, 300)(rng);
            Bytes t(n);
            for (auto& c : t) c = Byte(std::uniform_int_distribution<int>(0, sigma - 1)(rng));
            CAPTURE(sigma);
            CAPTURE(n);
            REQUIRE(build_suffix_array(t) == oracle::naive_suffix_sort(t));
        }
    }
}

TEST_CASE("handles full byte range including zero bytes") {
    Bytes t = {0x00, 0xFF, 0x00, 0x01, 0xFF, 0x00};
    CHECK(build_suffix_array(t) == oracle::naive_suffix_sort(t));
}

TEST_CASE("periodic strings sort correctly") {
    std::string s;
    for (int rep = 0; rep < 50; ++rep) s += "abcab";
    Bytes t = bytes_of(s);
    CHECK(build_suffix_array(t) == oracle::naive_suffix_sort(t));
}
