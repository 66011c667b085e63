#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "hybrid/gap_list.hpp"
#include "hybrid/io.hpp"
#include "oracles.hpp"

using namespace hybrid;

namespace {

std::vector<Pos> random_sorted(std::mt19937_64& rng, std::size_t count, Pos universe,
                               bool strict) {
    std::vector<Pos> v;
    if (strict) {
        // sample distinct values
        v.reserve(count);
        while (v.size() < count) {
            Pos x = std::uniform_int_distribution<Pos>(1, universe)(rng);
            v.push_back(x);
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }
    } else {
        for (std::size_t t = 0; t < count; ++t)
            v.push_back(std::uniform_int_distribution<Pos>(1, universe)(rng));
        std::sort(v.begin(), v.end());
    }
    return v;
}

GapList round_trip(const GapList& gl) {
    ByteWriter w;
    gl.serialize(w);
    ByteReader r(w.buffer());
    return GapList::deserialize(r);
}

}  // namespace

TEST_CASE("access returns the stored values") {
    std::vector<Pos> v = {1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    GapList gl = GapList::build(v, 3, 6, 100, true);
    REQUIRE(gl.size() == v.size());
    for (std::size_t t = 0; t < v.size(); ++t) CHECK(gl.access(t + 1) == v[t]);
    CHECK_THROWS_WITH_AS(gl.access(0), "rank out of range", Error);
    CHECK_THROWS_WITH_AS(gl.access(11), "rank out of range", Error);
}

TEST_CASE("successor picks the first value >= x, predecessor the last <= x") {
    std::vector<Pos> v = {10, 20, 20, 20, 30};
    GapList gl = GapList::build(v, 2, 4, 40, false);
    auto s = gl.successor(20);
    REQUIRE(s.has_value());
    CHECK(s->first == 2);  // first of the ties
    CHECK(s->second == 20);
    auto p = gl.predecessor(20);
    REQUIRE(p.has_value());
    CHECK(p->first == 4);  // last of the ties
    CHECK(p->second == 20);

    CHECK(gl.successor(31) == std::nullopt);
    CHECK(gl.predecessor(9) == std::nullopt);
    CHECK(gl.successor(1)->first == 1);
    CHECK(gl.predecessor(100)->first == 5);
}

TEST_CASE("strict mode rejects duplicates, relaxed mode accepts them") {
    std::vector<Pos> dup = {3, 7, 7, 9};
    CHECK_THROWS_WITH_AS(GapList::build(dup, 2, 4, 10, true), "not strictly increasing", Error);
    CHECK_NOTHROW(GapList::build(dup, 2, 4, 10, false));
    std::vector<Pos> decreasing = {5, 4};
    CHECK_THROWS_AS(GapList::build(decreasing, 1, 1, 10, false), Error);
    std::vector<Pos> beyond = {5, 11};
    CHECK_THROWS_WITH_AS(GapList::build(beyond, 1, 1, 10, true), "value exceeds universe", Error);
}

TEST_CASE("parameter validation") {
    std::vector<Pos> v = {1};
    CHECK_THROWS_AS(GapList::build(v, 0, 4, 10, true), Error);
    CHECK_THROWS_AS(GapList::build(v, 3, 4, 10, true), Error);  // b not a multiple of g
    CHECK_THROWS_AS(GapList::build(v, 3, 0, 10, true), Error);
}

TEST_CASE("queries agree with a linear scan across parameter grid") {
    std::mt19937_64 rng(303);
    for (auto [g, b] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {1, 1}, {1, 4}, {2, 8}, {3, 6}, {7, 14}, {32, 512}}) {
        for (bool strict : {true, false}) {
            for (std::size_t count : {1, 2, 7, 63, 64, 65, 200}) {
                Pos universe = Pos(count) * 3 + 10;
                auto v = random_sorted(rng, count, universe, strict);
                GapList gl = GapList::build(v, g, b, universe, strict);
                CAPTURE(g);
                CAPTURE(b);
                CAPTURE(strict);
                CAPTURE(count);
                for (Pos x = 0; x <= universe + 2; ++x) {
                    auto s = gl.successor(x);
                    auto so = oracle::scan_successor(v, x);
                    REQUIRE(s == so);
                    auto p = gl.predecessor(x);
                    auto po = oracle::scan_predecessor(v, x);
                    REQUIRE(p == po);
                }
                for (std::size_t t = 0; t < count; ++t) REQUIRE(gl.access(t + 1) == v[t]);
            }
        }
    }
}

TEST_CASE("empty list") {
    GapList gl = GapList::build({}, 4, 8, 50, true);
    CHECK(gl.size() == 0);
    CHECK(gl.successor(1) == std::nullopt);
    CHECK(gl.predecessor(50) == std::nullopt);
    GapList back = round_trip(gl);
    CHECK(back == gl);
    CHECK(back.size() == 0);
}

TEST_CASE("serialization round-trips exactly") {
    std::mt19937_64 rng(404);
    for (int rep = 0; rep < 10; ++rep) {
        auto v = random_sorted(rng, 150, 5000, false);
        GapList gl = GapList::build(v, 4, 16, 5000, false);
        GapList back = round_trip(gl);
        CHECK(back == gl);
        for (std::size_t t = 0; t < v.size(); ++t) REQUIRE(back.access(t + 1) == v[t]);
        for (Pos x : {Pos(1), Pos(2500), Pos(4999), Pos(5000)}) {
            REQUIRE(back.successor(x) == gl.successor(x));
            REQUIRE(back.predecessor(x) == gl.predecessor(x));
        }
        // byte-identical re-serialization
        ByteWriter w1, w2;
        gl.serialize(w1);
        back.serialize(w2);
        CHECK(w1.buffer() == w2.buffer());
    }
}

TEST_CASE("deserialize rejects corrupt streams") {
    GapList gl = GapList::build({2, 4, 9}, 2, 4, 10, true);
    ByteWriter w;
    gl.serialize(w);
    Bytes good = w.buffer();

    // truncated stream
    Bytes cut(good.begin(), good.begin() + good.size() / 2);
    ByteReader r1(cut);
    CHECK_THROWS_AS(GapList::deserialize(r1), Error);

    // inconsistent counts: break the stored count field
    Bytes bad = good;
    bad[0] = Byte(bad[0] + 1);
    ByteReader r2(bad);
    CHECK_THROWS_AS(GapList::deserialize(r2), Error);
}
