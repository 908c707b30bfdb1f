#include "dhb/atlas.hpp"
#include "dhb/error.hpp"
#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace dhb;

namespace {
const HurwitzMap& map_A() { return basic_map(BasicMapId::A); }
}  // namespace

TEST_CASE("map construction rejects broken relations") {
    const HurwitzMap& a = map_A();
    // With x = t the product xy is an involution, so (xy)^7 = 1 fails.
    try {
        HurwitzMap bad(a.t(), a.y(), a.t());
        (void)bad;
        FAIL("accepted");
    } catch (const check_error& e) {
        CHECK(std::string(e.what()).find("relation fails") != std::string::npos);
    }
    CHECK_THROWS_AS(HurwitzMap(a.x(), a.y(), Perm(15)), usage_error);
    CHECK_THROWS_AS(new_map(15, a.x(), a.y(), a.t()), usage_error);
}

TEST_CASE("fixed points, genus and signature of map A") {
    const HurwitzMap& a = map_A();
    CHECK(fixed_point_vector(a) == FixedPointVector{2, 2, 0});
    CHECK(genus(a) == 0);
    CHECK(genus_of(168, {0, 0, 7}) == 0);
    CHECK(genus_of(168, {4, 6, 0}) == 0);
    CHECK_THROWS_AS(genus_of(100, {0, 0, 0}), check_error);
    CHECK(to_string(FixedPointVector{4, 6, -7}) == "(4,6,-7)");
}

TEST_CASE("handles are oriented a -> a(xy)^k") {
    for (auto id : all_basic_maps) {
        const HurwitzMap& m = basic_map(id);
        Perm xy = compose(m.x(), m.y());
        for (const Handle& h : all_handles(m)) {
            CHECK(m.x()[h.a] == h.a);
            CHECK(m.x()[h.b] == h.b);
            CHECK(power(xy, h.k)[h.a] == h.b);
            CHECK(h.t_symmetric == (m.t()[h.a] == h.b));
        }
    }
}

TEST_CASE("useful cycles carry valid witnesses") {
    for (auto id : all_basic_maps) {
        const HurwitzMap& m = basic_map(id);
        WCycles wc = w_cycles(m);
        auto hp = handle_points(m);
        for (const auto& u : useful_cycles(m, wc)) {
            CHECK(wc.cycle_of[m.x()[u.x_witness]] == u.index);
            CHECK(wc.cycle_of[m.y()[u.y_witness]] == u.index);
            CHECK_FALSE((m.x()[u.x_witness] == u.x_witness && hp.count(u.x_witness)));
            CHECK(u.length == wc.cycles[u.index].size());
        }
    }
}

TEST_CASE("tau counts transpositions") {
    const HurwitzMap& a = map_A();
    CHECK(tau(a, a.x()) == 6);
    CHECK(tau(a, a.t()) == 6);
    CHECK_THROWS_AS(tau(a, a.y()), usage_error);
}

TEST_CASE("map file round trip") {
    for (auto id : all_basic_maps) {
        const HurwitzMap& m = basic_map(id);
        CHECK(read_map(write_map(m)) == m);
    }
    CHECK_THROWS_AS(read_map("hurwitz-map 2\ndegree 3\n"), parse_error);
    CHECK_THROWS_AS(read_map("degree 3\n"), parse_error);
    CHECK_THROWS_AS(read_map("hurwitz-map 1\ndegree 14\nx ()\n"), parse_error);
    std::string text = "# a comment\n" + write_map(map_A());
    CHECK(read_map(text) == map_A());
}

TEST_CASE("invariants survive relabeling") {
    std::mt19937_64 rng(2024);
    for (auto id : all_basic_maps) {
        const HurwitzMap& m = basic_map(id);
        for (int i = 0; i < 5; ++i) {
            HurwitzMap r = dhb::testing::relabel(m, dhb::testing::random_perm(m.degree(), rng));
            CHECK(fixed_point_vector(r) == fixed_point_vector(m));
            CHECK(genus(r) == genus(m));
            CHECK(w_cycles(r).type() == w_cycles(m).type());
            for (int k = 1; k <= 3; ++k) CHECK(find_handles(r, k).size() == find_handles(m, k).size());
            CHECK(useful_cycles(r).size() == useful_cycles(m).size());
            CHECK(prime_set(r) == prime_set(m));
            CHECK(parity(r.t()) == parity(m.t()));
        }
    }
}

TEST_CASE("prime helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(83));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(prime_divisors(84) == std::set<unsigned>{2, 3, 7});
}
