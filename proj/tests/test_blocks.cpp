#include "doctest.h"

#include <algorithm>

#include "family.hpp"
#include "grouptrace/blocks.hpp"

using namespace grouptrace;
using grouptrace::testing::constructor_family;

namespace {
const Field F2 = Field::prime_field(2);
const Field F5 = Field::prime_field(5);
const Field F7 = Field::prime_field(7);
}

TEST_CASE("center computations") {
    // abelian group: the dual is commutative, center is everything
    const auto A = constant_group_scheme(GroupTable::cyclic(4), Field::rationals());
    CHECK(center(convolution_algebra(A)).size() == 4);

    // S3: class functions, one per conjugacy class
    const auto S3 = constant_group_scheme(GroupTable::symmetric3(), Field::rationals());
    CHECK(center(convolution_algebra(S3)).size() == 3);

    // dim-1 algebra
    const auto T = constant_group_scheme(GroupTable::cyclic(1), Field::rationals());
    CHECK(center(convolution_algebra(T)).size() == 1);
}

TEST_CASE("center elements commute with everything") {
    const auto S3 = constant_group_scheme(GroupTable::symmetric3(), F5);
    const auto C = convolution_algebra(S3);
    for (const Vec& z : center(C))
        for (std::size_t j = 0; j < C.dim; ++j) {
            const Vec wj = unit_vec(F5, C.dim, j);
            CHECK(C.multiply(z, wj) == C.multiply(wj, z));
        }
}

TEST_CASE("splitting F7[Z/3]: three lines") {
    // x^3 - 1 splits over F7 (7 = 1 mod 3)
    const auto A = constant_group_scheme(GroupTable::cyclic(3), F7);
    const auto C = convolution_algebra(A);
    const auto B = split_center(C);
    CHECK(B.block_dims == std::vector<std::size_t>{1, 1, 1});
    CHECK(B.idempotents.size() == 3);
}

TEST_CASE("splitting F5[Z/3]: a line and a quadratic field") {
    // x^3 - 1 = (x - 1)(x^2 + x + 1) with the quadratic irreducible over F5
    const auto A = constant_group_scheme(GroupTable::cyclic(3), F5);
    const auto B = split_center(convolution_algebra(A));
    CHECK(B.block_dims == std::vector<std::size_t>{1, 2});
}

TEST_CASE("dual of mu_n over coprime characteristic splits into n lines") {
    for (std::size_t n : {4, 6}) {
        const auto A = mu_n(n, F7);
        const auto B = split_center(convolution_algebra(A));
        CHECK(B.idempotents.size() == n);
        CHECK(B.block_dims == std::vector<std::size_t>(n, 1));
        // the idempotents are exactly the grouplike dual basis vectors,
        // possibly discovered in a different order
        for (std::size_t i = 0; i < n; ++i) {
            const Vec wi = unit_vec(F7, n, i);
            CHECK(std::count(B.idempotents.begin(), B.idempotents.end(), wi) == 1);
        }
    }
}

TEST_CASE("idempotent identities hold for every split") {
    std::vector<FiniteHopfAlgebra> algebras;
    algebras.push_back(constant_group_scheme(GroupTable::cyclic(3), F7));
    algebras.push_back(constant_group_scheme(GroupTable::cyclic(3), F5));
    algebras.push_back(constant_group_scheme(GroupTable::symmetric3(), F5));
    algebras.push_back(mu_n(6, F5));
    algebras.push_back(constant_group_scheme(
        GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(3)), F7));

    for (const auto& A : algebras) {
        const auto C = convolution_algebra(A);
        const auto B = split_center(C);

        // orthogonal idempotents summing to the unit
        Vec sum = zero_vec(B.field, C.dim);
        for (std::size_t i = 0; i < B.idempotents.size(); ++i) {
            sum = add(sum, B.idempotents[i]);
            for (std::size_t j = 0; j < B.idempotents.size(); ++j) {
                const Vec prod = C.multiply(B.idempotents[i], B.idempotents[j]);
                CHECK(prod == (i == j ? B.idempotents[i] : zero_vec(B.field, C.dim)));
            }
        }
        CHECK(sum == C.unit);

        // centrality
        for (const Vec& e : B.idempotents)
            for (std::size_t j = 0; j < C.dim; ++j) {
                const Vec wj = unit_vec(B.field, C.dim, j);
                CHECK(C.multiply(e, wj) == C.multiply(wj, e));
            }

        // dims sum to the algebra dimension
        std::size_t total = 0;
        for (auto d : B.block_dims)
            total += d;
        CHECK(total == C.dim);

        // primitivity: re-splitting inside any block yields exactly that block
        for (const Vec& e : B.idempotents) {
            const auto again = split_under(C, e);
            REQUIRE(again.size() == 1);
            CHECK(again.front() == e);
        }
    }
}

TEST_CASE("splitting refuses non-semisimple duals") {
    const auto A = constant_group_scheme(GroupTable::cyclic(2), F2);
    CHECK_THROWS_AS(split_center(convolution_algebra(A)), NotSemisimpleError);
}

TEST_CASE("splitting refuses Q") {
    const auto A = constant_group_scheme(GroupTable::cyclic(3), Field::rationals());
    CHECK_THROWS_AS(split_center(convolution_algebra(A)), UnsupportedError);
}

TEST_CASE("pairing of idempotents") {
    // F7[Z/3]: all blocks are lines, so the pairing is the 3x3 identity
    {
        const auto A = constant_group_scheme(GroupTable::cyclic(3), F7);
        const auto C = convolution_algebra(A);
        CHECK(pairing_of_idempotents(split_center(C), trace_form_gram(C)).is_identity());
    }

    // F5[Z/3]: diag(1, 2)
    {
        const auto A = constant_group_scheme(GroupTable::cyclic(3), F5);
        const auto C = convolution_algebra(A);
        const Matrix P = pairing_of_idempotents(split_center(C), trace_form_gram(C));
        CHECK(P == Matrix::of_ints(F5, {{1, 0}, {0, 2}}));
    }

    // single-block algebra: the 1x1 matrix (dim mod p)
    {
        const auto A = constant_group_scheme(GroupTable::cyclic(1), F5);
        const auto C = convolution_algebra(A);
        const Matrix P = pairing_of_idempotents(split_center(C), trace_form_gram(C));
        CHECK(P == Matrix::of_ints(F5, {{1}}));
    }
}

TEST_CASE("pairing equals diag(block dims mod p) on every split instance") {
    std::vector<FiniteHopfAlgebra> algebras;
    algebras.push_back(mu_n(6, F5));
    algebras.push_back(mu_n(6, F7));
    algebras.push_back(constant_group_scheme(GroupTable::cyclic(4), F7));
    algebras.push_back(constant_group_scheme(GroupTable::cyclic(5), F2));
    for (const auto& A : algebras) {
        const auto C = convolution_algebra(A);
        const auto B = split_center(C);
        const Matrix P = pairing_of_idempotents(B, trace_form_gram(C));
        Matrix expected(A.field, B.block_dims.size(), B.block_dims.size());
        for (std::size_t i = 0; i < B.block_dims.size(); ++i)
            expected.at(i, i) =
                Scalar::of_int(A.field, static_cast<long long>(B.block_dims[i]));
        CHECK(P == expected);
    }
}

TEST_CASE("dual group summaries") {
    const auto d1 = dual_group(constant_group_scheme(GroupTable::cyclic(3), F7));
    CHECK(d1.discrete);
    CHECK(d1.num_blocks == 3);

    const auto d2 = dual_group(constant_group_scheme(GroupTable::cyclic(2), F2));
    CHECK(!d2.discrete);
    CHECK(d2.num_blocks == 0);

    const auto d3 = dual_group(alpha_p(F2));
    CHECK(!d3.discrete);

    CHECK_THROWS_AS(dual_group(mu_n(2, Field::rationals())), UnsupportedError);
}

TEST_CASE("discreteness tracks reductivity over prime fields") {
    for (const auto& [name, A] : constructor_family()) {
        if (!A.field.is_prime_field())
            continue;
        CAPTURE(name);
        CHECK(dual_group(A).discrete == is_linearly_reductive(A).reductive);
    }
}

TEST_CASE("a large field block: F2[Z/11] splits as 1 + 10") {
    // x^11 - 1 over F2 is (x - 1) times an irreducible degree-10 factor
    // (2 generates the units mod 11), so the group algebra is a line plus
    // one big field block
    const auto A = constant_group_scheme(GroupTable::cyclic(11), F2);
    const auto C = convolution_algebra(A);
    const auto B = split_center(C);
    CHECK(B.block_dims == std::vector<std::size_t>{1, 10});

    // the pairing still matches diag(dims mod p): 10 = 0 mod 2
    const Matrix P = pairing_of_idempotents(B, trace_form_gram(C));
    CHECK(P == Matrix::of_ints(F2, {{1, 0}, {0, 0}}));

    // and the trace form is nonetheless non-degenerate on the whole algebra
    CHECK(is_linearly_reductive(A).reductive);
}

TEST_CASE("F23[Z/11] splits completely") {
    const auto A = constant_group_scheme(GroupTable::cyclic(11), Field::prime_field(23));
    const auto B = split_center(convolution_algebra(A));
    CHECK(B.block_dims == std::vector<std::size_t>(11, 1));
}

TEST_CASE("a matrix-algebra block: F5[S3] splits as 1 + 1 + 4") {
    // two linear characters plus the two-dimensional irreducible, which is
    // realizable over F5, so its block is the full 2x2 matrix algebra
    const auto A = constant_group_scheme(GroupTable::symmetric3(), F5);
    const auto C = convolution_algebra(A);
    const auto B = split_center(C);

    std::vector<std::size_t> dims = B.block_dims;
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::size_t>{1, 1, 4});

    // pairing in discovery order equals diag(dims mod 5)
    const Matrix P = pairing_of_idempotents(B, trace_form_gram(C));
    for (std::size_t i = 0; i < B.block_dims.size(); ++i)
        for (std::size_t j = 0; j < B.block_dims.size(); ++j)
            CHECK(P.at(i, j) ==
                  (i == j ? Scalar::of_int(F5, static_cast<long long>(B.block_dims[i]))
                          : Scalar::zero(F5)));
}

TEST_CASE("pairing rejects mismatched inputs") {
    const auto A = constant_group_scheme(GroupTable::cyclic(3), F7);
    const auto C = convolution_algebra(A);
    const auto B = split_center(C);

    // Gram from a different algebra of another dimension
    const auto A2 = constant_group_scheme(GroupTable::cyclic(4), F7);
    const auto G2 = trace_form_gram(convolution_algebra(A2));
    CHECK_THROWS_AS(pairing_of_idempotents(B, G2), DimensionError);

    // same dimension, wrong field
    const auto A3 = constant_group_scheme(GroupTable::cyclic(3), F5);
    const auto G3 = trace_form_gram(convolution_algebra(A3));
    CHECK_THROWS_AS(pairing_of_idempotents(B, G3), FieldMismatchError);
}
