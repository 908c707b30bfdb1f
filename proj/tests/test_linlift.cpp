#include "dhb/error.hpp"
#include "dhb/linlift.hpp"
#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace dhb;

namespace {
SparseMatrix random_matrix(unsigned p, std::size_t n, double density, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0, 1);
    std::uniform_int_distribution<residue> val(1, p - 1);
    SparseMatrix m(p, n);
    for (std::size_t i = 0; i < n; ++i) {
        SparseMatrix::Row r;
        for (std::uint32_t j = 0; j < n; ++j)
            if (coin(rng) < density) r.emplace_back(j, val(rng));
        m.set_row(i, r);
    }
    return m;
}
}  // namespace

TEST_CASE("fixed space of a permutation matrix has one dimension per cycle") {
    std::mt19937_64 rng(11);
    for (unsigned p : {2u, 3u, 5u, 101u})
        for (int i = 0; i < 30; ++i) {
            std::size_t n = 1 + rng() % 100;
            Perm g = dhb::testing::random_perm(n, rng);
            CHECK(fixed_space_dim(SparseMatrix::permutation(p, g)) == num_cycles(g));
        }
    CHECK(fixed_space_dim(SparseMatrix::identity(7, 40)) == 40);
    CHECK(fixed_space_dim(SparseMatrix::permutation(3, basic_map(BasicMapId::A).y())) == 6);
}

TEST_CASE("sparse arithmetic agrees with dense arithmetic") {
    std::mt19937_64 rng(12);
    for (unsigned p : {2u, 3u, 7u})
        for (int i = 0; i < 40; ++i) {
            std::size_t n = 1 + rng() % 12;
            double density = (i % 4 + 1) / 5.0;
            SparseMatrix a = random_matrix(p, n, density, rng), b = random_matrix(p, n, density, rng);
            DenseMatrix da = to_dense(a), db = to_dense(b);
            CHECK(to_dense(a * b).a == (da * db).a);
            CHECK(rank(a) == dense_rank(da));
            CHECK(determinant(a) == dense_determinant(da));
            CHECK(determinant(a * b) == dense_determinant(da) * dense_determinant(db) % p);
            CHECK(power(a, 5) == a * a * a * a * a);
        }
    SparseMatrix m(5, 3);
    m.set_row(0, {{2, 7}, {0, 5}, {1, 4}});
    CHECK(m.row(0) == SparseMatrix::Row{{1, 4}, {2, 2}});
    CHECK(m.at(0, 0) == 0);
    CHECK_THROWS_AS(m.set_row(1, {{3, 1}}), usage_error);
    CHECK_THROWS_AS(SparseMatrix(4, 2), usage_error);
    CHECK_THROWS_AS(m * SparseMatrix::identity(5, 4), usage_error);
}

TEST_CASE("determinant of a permutation matrix is its sign") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        Perm g = dhb::testing::random_perm(2 + rng() % 30, rng);
        residue expected = parity(g) == 1 ? 1 : 6;
        CHECK(determinant(SparseMatrix::permutation(7, g)) == expected);
    }
}

TEST_CASE("primitive roots") {
    CHECK(is_primitive_root(1, 2));
    CHECK(is_primitive_root(2, 3));
    CHECK(is_primitive_root(2, 5));
    CHECK_FALSE(is_primitive_root(4, 5));
    CHECK_FALSE(is_primitive_root(0, 5));
    CHECK(least_primitive_root(2) == 1);
    CHECK(least_primitive_root(7) == 3);
    CHECK(least_primitive_root(23) == 5);
    CHECK_THROWS_AS(is_primitive_root(2, 9), usage_error);
}

TEST_CASE("linear lift of a small joined map") {
    LiftSource src = lift_source(Assembly::leaf(BasicMapId::A));
    const HurwitzMap& m = src.map.map;
    const LiftPoints& pt = src.points;
    for (unsigned p : {2u, 3u, 5u}) {
        residue t1 = least_primitive_root(p);
        LinearTriple t = build_linear_triple(m, pt, p, t1);
        INFO("p = " << p);
        CHECK(t.xprime.at(pt.a, pt.a) == p - 1);
        CHECK(t.xprime.at(pt.a, pt.a2) == t1 % p);
        CHECK(t.xprime.at(pt.b, pt.b2) == t1 % p);
        CHECK(t.xprime.row(pt.a2) == SparseMatrix::Row{{pt.a2, 1}});
        CHECK(fixed_space_dim(t.x) == num_cycles(m.x()) - 2);
        CHECK(fixed_space_dim(t.y) == num_cycles(m.y()));
        CHECK(fixed_space_dim(t.z) == num_cycles(compose(m.x(), m.y())));
        CHECK(t.det_x == 1);
    }
    CHECK_THROWS_AS(build_linear_triple(m, pt, 5, 4), usage_error);
    CHECK_THROWS_AS(build_linear_triple(m, {pt.a, pt.b, pt.a, pt.b2}, 3, 2), usage_error);
    point moved = 0;
    while (m.x()[moved] == moved) ++moved;
    CHECK_THROWS_AS(build_linear_triple(m, {moved, pt.b, pt.a2, pt.b2}, 3, 2), usage_error);
}

TEST_CASE("permutation triple and dimension comparison") {
    MapPair pair = build_pair(minimal_plan(7));
    LinearTriple t1 = permutation_triple(pair.w1.map, 3), t2 = permutation_triple(pair.w2.map, 3);
    DimsEvidence d = beauville_dims(t1, t2);
    CHECK(d.ok());
    long dy = static_cast<long>(d.positions[1].dim1) - static_cast<long>(d.positions[1].dim2);
    CHECK(dy == static_cast<long>(num_cycles(pair.w1.map.y())) - static_cast<long>(num_cycles(pair.w2.map.y())));
    DimsEvidence same = beauville_dims(t1, t1);
    CHECK_FALSE(same.ok());
    CHECK(same.failures.size() == 3);
    CHECK_THROWS_AS(beauville_dims(t1, permutation_triple(pair.w2.map, 5)), usage_error);
}

TEST_CASE("lifted pair over small fields") {
    LiftReport r = lift_pair(minimal_plan(7), 2, 1);
    CHECK(r.ok());
    CHECK(r.degree == 371);
    CHECK(r.dims.positions[0].dim1 == r.dims.xi_cycles1 - 2);
    CHECK(r.dims.positions[2].dim2 == r.dims.xiy_cycles2);
}
