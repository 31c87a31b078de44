#include <doctest.h>

#include "pact/group.hpp"

using namespace pact;

TEST_SUITE_BEGIN("group");

TEST_CASE("make_group: trivial and Z2") {
    const auto t = trivial_group();
    CHECK(t.order() == 1);
    CHECK(t.identity == 0);

    const auto z2 = make_group({"e", "a"}, {{"e", "a"}, {"a", "e"}});
    CHECK(z2.order() == 2);
    CHECK(z2.inv(z2.index_of("a")) == z2.index_of("a"));
}

TEST_CASE("make_group: klein four-group, all elements self-inverse") {
    const auto k = klein_four();
    CHECK(k.order() == 4);
    for (int g = 0; g < 4; ++g) CHECK(k.inv(g) == g);
}

TEST_CASE("make_group rejects bad tables with witnesses") {
    // not associative: a*a = e but a*b arrangement breaks (ab)c = a(bc)
    CHECK_THROWS_AS(make_group({"e", "a", "b"},
                               {{"e", "a", "b"}, {"a", "b", "b"}, {"b", "e", "a"}}),
                    error);
    // associative but without identity (constant table)
    CHECK_THROWS_WITH_AS(make_group({"x", "y"}, {{"x", "x"}, {"x", "x"}}), "table has no identity element", error);
    // identity present but no inverse for 'a' (two-element monoid)
    CHECK_THROWS_WITH_AS(make_group({"e", "a"}, {{"e", "a"}, {"a", "a"}}), "element 'a' has no inverse", error);
    CHECK_THROWS_AS(make_group({"e"}, {{"q"}}), error);
    CHECK_THROWS_AS(make_group({"e", "e"}, {{"e", "e"}, {"e", "e"}}), error);
}

TEST_CASE("group laws hold exhaustively for constructed groups") {
    for (const auto& g : {cyclic_group(1), cyclic_group(3), cyclic_group(4), klein_four(), symmetric_group(3)}) {
        const int n = static_cast<int>(g.order());
        for (int a = 0; a < n; ++a) {
            CHECK(g.mul(g.identity, a) == a);
            CHECK(g.mul(a, g.identity) == a);
            CHECK(g.mul(a, g.inv(a)) == g.identity);
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
    }
}

TEST_CASE("cyclic groups") {
    const auto c3 = cyclic_group(3);
    CHECK(c3.order() == 3);
    const int a = c3.index_of("g1");
    CHECK(c3.mul(c3.mul(a, a), a) == c3.identity);
    CHECK_THROWS_AS(cyclic_group(0), error);
    CHECK_THROWS_AS(cyclic_group(1000), guard_error);
}

TEST_CASE("symmetric group: S3 is non-abelian") {
    const auto s3 = symmetric_group(3);
    CHECK(s3.order() == 6);
    bool witness = false;
    for (int g = 0; g < 6 && !witness; ++g)
        for (int h = 0; h < 6; ++h)
            if (s3.mul(g, h) != s3.mul(h, g)) {
                witness = true;
                break;
            }
    CHECK(witness);
    CHECK_THROWS_AS(symmetric_group(5), guard_error);
}

TEST_SUITE_END();
