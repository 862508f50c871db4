#include "doctest.h"
#include "gf2.hpp"
#include "naive_gf2.hpp"

#include <random>

using namespace sseq::gf2;

TEST_CASE("rref of identity is identity")
{
    Matrix id = Matrix::identity(3);
    auto rr = rref(id);
    CHECK(rr.reduced == id);
    CHECK(rr.pivots == std::vector<int>{0, 1, 2});
    CHECK(rr.rank == 3);
}

TEST_CASE("rref of zero matrix")
{
    Matrix z(2, 4);
    auto rr = rref(z);
    CHECK(rr.reduced == z);
    CHECK(rr.pivots.empty());
    CHECK(rr.rank == 0);
}

TEST_CASE("rref rank agrees with naive elimination on random 20x20")
{
    std::mt19937_64 rng(20240301);
    for (int it = 0; it < 25; ++it) {
        Matrix m = naive::random_matrix(rng, 20, 20);
        CHECK(rref(m).rank == naive::rank(naive::from_matrix(m)));
    }
}

TEST_CASE("rref is idempotent and pivots strictly increase")
{
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        Matrix m = naive::random_matrix(rng, 9, 13, 0.4);
        auto rr = rref(m);
        auto rr2 = rref(rr.reduced);
        CHECK(rr2.reduced == rr.reduced);
        for (size_t i = 1; i < rr.pivots.size(); ++i)
            CHECK(rr.pivots[i - 1] < rr.pivots[i]);
    }
}

TEST_CASE("kernel of identity is empty, kernel of zero is full")
{
    CHECK(kernel_basis(Matrix::identity(3)).rows() == 0);
    Matrix z(2, 3);
    Matrix k = kernel_basis(z);
    CHECK(k.rows() == 3);
    CHECK(rref(k).rank == 3);
}

TEST_CASE("kernel spans match exhaustive enumeration on 5x7")
{
    std::mt19937_64 rng(555);
    for (int it = 0; it < 20; ++it) {
        Matrix m = naive::random_matrix(rng, 5, 7);
        Matrix k = kernel_basis(m);
        CHECK(k.rows() == 7 - rref(m).rank);
        for (int r = 0; r < k.rows(); ++r)
            CHECK(m.mul_vec(k.row(r)).is_zero());
        auto all = naive::kernel_exhaustive(naive::from_matrix(m));
        // every enumerated kernel vector lies in the computed row space
        Span sp(7);
        for (int r = 0; r < k.rows(); ++r)
            sp.insert(k.row(r));
        size_t count = 0;
        for (auto& v : all) {
            Vec x(7);
            for (int c = 0; c < 7; ++c)
                if (v[c])
                    x.set(c);
            CHECK(sp.contains(x));
            ++count;
        }
        CHECK(count == size_t(1) << k.rows());
    }
}

TEST_CASE("solve: identity, zero and random consistent systems")
{
    Matrix id = Matrix::identity(3);
    Vec b(3);
    b.set(0);
    b.set(2);
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    Matrix z(3, 4);
    CHECK(!solve(z, b).has_value());
    Vec zero(3);
    CHECK(solve(z, zero).has_value());

    std::mt19937_64 rng(99);
    for (int it = 0; it < 40; ++it) {
        Matrix m = naive::random_matrix(rng, 6, 6);
        Vec xs(6);
        for (int c = 0; c < 6; ++c)
            if (rng() & 1)
                xs.set(c);
        Vec b2 = m.mul_vec(xs);
        auto sol = solve(m, b2);
        REQUIRE(sol.has_value());
        CHECK(m.mul_vec(*sol) == b2);
    }
}

TEST_CASE("rank(m) == rank(transpose(m)) and rank-nullity")
{
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 60; ++it) {
        int r = 1 + int(rng() % 12), c = 1 + int(rng() % 12);
        Matrix m = naive::random_matrix(rng, r, c, 0.35);
        int rk = rref(m).rank;
        CHECK(rk == rref(m.transposed()).rank);
        CHECK(rk + kernel_basis(m).rows() == c);
    }
}

TEST_CASE("randomized packed-vs-naive suite, matrices up to 16x16")
{
    std::mt19937_64 rng(0xC0FFEE);
    for (int it = 0; it < 300; ++it) {
        int r = 1 + int(rng() % 16), c = 1 + int(rng() % 16);
        Matrix m = naive::random_matrix(rng, r, c);
        auto tab = naive::from_matrix(m);
        CHECK(rref(m).rank == naive::rank(tab));
        Matrix k = kernel_basis(m);
        for (int i = 0; i < k.rows(); ++i)
            CHECK(m.mul_vec(k.row(i)).is_zero());
        // solvability agreement against row-space membership of b in col space
        Vec b(r);
        for (int i = 0; i < r; ++i)
            if (rng() & 1)
                b.set(i);
        bool packed = solve(m, b).has_value();
        auto tr = naive::from_matrix(m.transposed());
        std::vector<int> bv(r);
        for (int i = 0; i < r; ++i)
            bv[i] = b.get(i);
        CHECK(packed == naive::in_row_space(tr, bv));
    }
}

TEST_CASE("CoordSolver expresses targets over original rows")
{
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 30; ++it) {
        Matrix m = naive::random_matrix(rng, 8, 10, 0.4);
        CoordSolver cs(10);
        for (int r = 0; r < 8; ++r)
            cs.add_row(m.row(r));
        Vec combo(8);
        Vec target(10);
        for (int r = 0; r < 8; ++r)
            if (rng() & 1) {
                combo.set(r);
                target ^= m.row(r);
            }
        auto sol = cs.solve(target);
        REQUIRE(sol.has_value());
        Vec check(10);
        for (int r = 0; r < 8; ++r)
            if (sol->get(r))
                check ^= m.row(r);
        CHECK(check == target);
    }
}
