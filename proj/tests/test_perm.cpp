#include "dhb/error.hpp"
#include "dhb/perm.hpp"
#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace dhb;
using dhb::testing::random_perm;

TEST_CASE("points act on the right") {
    Perm p = parse_cycles("(0 1 2)", 4), q = parse_cycles("(1 3)", 4);
    Perm pq = compose(p, q);
    for (point a = 0; a < 4; ++a) CHECK(pq[a] == q[p[a]]);
    CHECK(to_cycles(pq) == "(0 3 1 2)");
    CHECK(to_cycles(Perm(5)) == "()");
}

TEST_CASE("cycle notation round trip and parse errors") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Perm p = random_perm(1 + i % 20, rng);
        CHECK(parse_cycles(to_cycles(p), p.degree()) == p);
    }
    CHECK_THROWS_AS(parse_cycles("(0 1", 3), parse_error);
    CHECK_THROWS_AS(parse_cycles("(0 0)", 3), parse_error);
    CHECK_THROWS_AS(parse_cycles("(0 5)", 3), parse_error);
    CHECK_THROWS_AS(parse_cycles("0 1", 3), parse_error);
    try {
        parse_cycles("(0 1)(2 x)", 4);
        FAIL("no error");
    } catch (const parse_error& e) {
        CHECK(e.pos() == 8);
    }
    CHECK_THROWS_AS(Perm(std::vector<point>{0, 0}), usage_error);
}

TEST_CASE("cycle type, order, parity, powers") {
    Perm p = parse_cycles("(0 1)(2 3 4)(5 6 7 8)", 10);
    CHECK(cycle_type(p) == CycleType{1, 2, 3, 4});
    CHECK(format_cycle_type(cycle_type(p)) == "1 2 3 4");
    CHECK(order(p) == 12);
    CHECK(parity(p) == 1);
    CHECK(parity(parse_cycles("(0 1)", 3)) == -1);
    CHECK(num_cycles(p) == 4);
    CHECK(num_fixed(p) == 1);
    CHECK(power(p, 12).is_identity());
    CHECK(power(p, -1) == inverse(p));
    CHECK(compose(power(p, 5), power(p, 7)).is_identity());
}

TEST_CASE("transitivity") {
    CHECK(is_transitive({parse_cycles("(0 1 2 3)", 4)}, 4));
    CHECK_FALSE(is_transitive({parse_cycles("(0 1)(2 3)", 4)}, 4));
}

TEST_CASE("alternating-group conjugacy agrees with brute force up to degree 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto cls = dhb::testing::an_classes(n);
        for (const auto& [p, cp] : cls)
            for (const auto& [q, cq] : cls) REQUIRE(an_conjugate(p, q) == (cp == cq));
    }
}

TEST_CASE("split classes: a 5-cycle and its square are not A_5-conjugate") {
    Perm c = parse_cycles("(0 1 2 3 4)", 5);
    CHECK_FALSE(an_conjugate(c, power(c, 2)));
    CHECK(an_conjugate(c, power(c, 4)));
    CHECK_THROWS_AS(an_conjugate(parse_cycles("(0 1)", 5), c), usage_error);
}

TEST_CASE("S_n conjugator conjugates") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        Perm p = random_perm(12, rng), r = random_perm(12, rng);
        Perm q = compose(compose(inverse(r), p), r);
        Perm c(sn_conjugator(p, q));
        CHECK(compose(compose(inverse(c), p), c) == q);
    }
    CHECK(sn_conjugator(parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)).empty());
}

TEST_CASE("stabilizer-chain order") {
    Perm s = parse_cycles("(0 1)", 6), c = parse_cycles("(0 1 2 3 4 5)", 6);
    CHECK(group_order({s, c}) == 720);
    CHECK(group_order({parse_cycles("(0 1 2)", 5), parse_cycles("(0 1 2 3 4)", 5)}) == 60);
    CHECK(group_order({parse_cycles("(0 1)(2 3)", 4), parse_cycles("(0 2)(1 3)", 4)}) == 4);
    CHECK(group_order({Perm(3)}) == 1);
    // Dihedral group of order 2m on m points: not a full alternating or symmetric group.
    Perm r = parse_cycles("(0 1 2 3 4 5 6 7 8 9 10)", 11), f = parse_cycles("(1 10)(2 9)(3 8)(4 7)(5 6)", 11);
    CHECK(group_order({r, f}) == 22);
}
