#include "doctest.h"

#include <cstdint>

#include "grouptrace/matrix.hpp"

using namespace grouptrace;

namespace {

const Field Q = Field::rationals();

// minimal deterministic generator for property tests
struct Rng {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long long range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

Matrix random_matrix(Rng& rng, const Field& f, std::size_t r, std::size_t c) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = Scalar::of_int(f, rng.range(-4, 4));
    return m;
}

} // namespace

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(Q, 3)) == 3);

    const Field f2 = Field::prime_field(2);
    CHECK(rank(Matrix::of_ints(f2, {{2, 0}, {0, 2}})) == 0); // zero after reduction

    CHECK(rank(Matrix::of_ints(Q, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace(Matrix::identity(Q, 3)).empty());
    CHECK(nullspace(Matrix(Q, 2, 2)).size() == 2);

    const auto ns = nullspace(Matrix::of_ints(Q, {{1, 1}, {1, 1}}));
    REQUIRE(ns.size() == 1);
    // proportional to (1, -1)
    CHECK(ns[0][0] == -ns[0][1]);
    CHECK(!ns[0][0].is_zero());
}

TEST_CASE("solve examples") {
    const Vec rhs = {Scalar::of_int(Q, 5), Scalar::of_int(Q, 7)};
    auto x = solve_linear(Matrix::identity(Q, 2), rhs);
    REQUIRE(x.has_value());
    CHECK(*x == rhs);

    // underdetermined: any solution is fine but it must satisfy the system
    const Matrix m = Matrix::of_ints(Q, {{1, 1}});
    auto y = solve_linear(m, {Scalar::of_int(Q, 2)});
    REQUIRE(y.has_value());
    CHECK(m.apply(*y) == Vec{Scalar::of_int(Q, 2)});

    // inconsistent
    CHECK(!solve_linear(Matrix::of_ints(Q, {{1}, {1}}),
                        {Scalar::of_int(Q, 1), Scalar::of_int(Q, 2)})
               .has_value());

    CHECK_THROWS_AS(solve_linear(Matrix::identity(Q, 2), Vec{Scalar::of_int(Q, 1)}),
                    DimensionError);
}

TEST_CASE("kron examples") {
    CHECK(kron(Matrix::identity(Q, 2), Matrix::identity(Q, 3)) == Matrix::identity(Q, 6));

    CHECK(kron(Matrix::of_ints(Q, {{0, 1}, {1, 0}}), Matrix::of_ints(Q, {{2}})) ==
          Matrix::of_ints(Q, {{0, 2}, {2, 0}}));

    // entrywise against the definition
    const Matrix a = Matrix::of_ints(Q, {{1, 1}, {0, 1}});
    const Matrix b = Matrix::of_ints(Q, {{1, 0}, {1, 1}});
    const Matrix k = kron(a, b);
    REQUIRE(k.rows() == 4);
    CHECK(k == Matrix::of_ints(Q, {{1, 0, 1, 0}, {1, 1, 1, 1}, {0, 0, 1, 0}, {0, 0, 1, 1}}));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t kk = 0; kk < 2; ++kk)
                for (std::size_t l = 0; l < 2; ++l)
                    CHECK(k.at(i * 2 + kk, j * 2 + l) == a.at(i, j) * b.at(kk, l));

    const Field f3 = Field::prime_field(3);
    CHECK_THROWS_AS(kron(Matrix::identity(Q, 2), Matrix::identity(f3, 2)),
                    FieldMismatchError);
}

TEST_CASE("rank-nullity over both fields") {
    Rng rng;
    const Field f5 = Field::prime_field(5);
    for (int iter = 0; iter < 40; ++iter) {
        const Field& f = iter % 2 == 0 ? Q : f5;
        const std::size_t r = 1 + static_cast<std::size_t>(rng.range(0, 5));
        const std::size_t c = 1 + static_cast<std::size_t>(rng.range(0, 5));
        const Matrix m = random_matrix(rng, f, r, c);
        CHECK(rank(m) + nullspace(m).size() == c);
        // every kernel vector maps to zero
        for (const auto& v : nullspace(m))
            CHECK(is_zero_vec(m.apply(v)));
    }
}

TEST_CASE("solutions are exact") {
    Rng rng;
    const Field f7 = Field::prime_field(7);
    for (int iter = 0; iter < 40; ++iter) {
        const Field& f = iter % 2 == 0 ? Q : f7;
        const std::size_t r = 1 + static_cast<std::size_t>(rng.range(0, 4));
        const std::size_t c = 1 + static_cast<std::size_t>(rng.range(0, 4));
        const Matrix m = random_matrix(rng, f, r, c);
        Vec rhs;
        for (std::size_t i = 0; i < r; ++i)
            rhs.push_back(Scalar::of_int(f, rng.range(-4, 4)));
        if (auto x = solve_linear(m, rhs))
            CHECK(m.apply(*x) == rhs); // no tolerance
    }
}

TEST_CASE("rank is invariant under row permutation") {
    Rng rng;
    const Field f5 = Field::prime_field(5);
    for (int iter = 0; iter < 30; ++iter) {
        const Field& f = iter % 2 == 0 ? Q : f5;
        const std::size_t n = 2 + static_cast<std::size_t>(rng.range(0, 4));
        Matrix m = random_matrix(rng, f, n, n);
        const std::size_t before = rank(m);
        for (int s = 0; s < 6; ++s) {
            const auto i = static_cast<std::size_t>(rng.range(0, static_cast<long long>(n) - 1));
            const auto j = static_cast<std::size_t>(rng.range(0, static_cast<long long>(n) - 1));
            m.swap_rows(i, j);
            CHECK(rank(m) == before);
        }
    }
}

TEST_CASE("rational elimination keeps exact fractions") {
    // Hilbert-like matrix: classic trap for floating point, trivial exactly
    Matrix h(Q, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            h.at(i, j) = Scalar::of_fraction(Q, 1, static_cast<long long>(i + j + 1));
    CHECK(rank(h) == 4);
    auto inv = inverse(h);
    REQUIRE(inv.has_value());
    CHECK((h * *inv).is_identity());
}

TEST_CASE("matrix inverse") {
    const Matrix m = Matrix::of_ints(Q, {{2, 1}, {1, 1}});
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((*inv * m).is_identity());
    CHECK(!inverse(Matrix::of_ints(Q, {{1, 2}, {2, 4}})).has_value());

    const Field f2 = Field::prime_field(2);
    auto invf = inverse(Matrix::of_ints(f2, {{1, 1}, {0, 1}}));
    REQUIRE(invf.has_value());
    CHECK((*invf * Matrix::of_ints(f2, {{1, 1}, {0, 1}})).is_identity());
}

TEST_CASE("nullspace bases are deterministic") {
    // reduced-echelon convention: one vector per free column, ascending
    const auto ns = nullspace(Matrix::of_ints(Q, {{1, 1}, {1, 1}}));
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == Vec{Scalar::of_int(Q, -1), Scalar::of_int(Q, 1)});

    const auto ns2 = nullspace(Matrix::of_ints(Q, {{1, 2, 3}}));
    REQUIRE(ns2.size() == 2);
    CHECK(ns2[0] == Vec{Scalar::of_int(Q, -2), Scalar::of_int(Q, 1), Scalar::of_int(Q, 0)});
    CHECK(ns2[1] == Vec{Scalar::of_int(Q, -3), Scalar::of_int(Q, 0), Scalar::of_int(Q, 1)});
}
