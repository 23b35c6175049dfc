#include "doctest.h"

#include "family.hpp"
#include "grouptrace/comodule.hpp"

using namespace grouptrace;
using grouptrace::testing::constructor_family;
using grouptrace::testing::Rng;

namespace {

const Field Q = Field::rationals();

// the sign character of a constant Z/2: d_e - d_g is grouplike
Comodule sign_comodule(const FiniteHopfAlgebra& Z2) {
    Vec chi = {Scalar::one(Z2.field), -Scalar::one(Z2.field)};
    return line_comodule(Z2, chi);
}

} // namespace

TEST_CASE("comodule law verification") {
    const auto A = constant_group_scheme(GroupTable::cyclic(3), Q);

    CHECK(verify_comodule(trivial_comodule(A)).all_pass());
    CHECK(verify_comodule(regular_comodule(A)).all_pass());

    // corrupted coaction fails
    Comodule bad = regular_comodule(A);
    bad.coaction.at(0, 1, 1) += Scalar::one(Q);
    CHECK(!verify_comodule(bad).all_pass());
    CHECK_THROWS_AS(checked_comodule(bad), AxiomError);
}

TEST_CASE("regular comodules pass the laws for every constructor") {
    for (const auto& [name, A] : constructor_family()) {
        CAPTURE(name);
        CHECK(verify_comodule(regular_comodule(A)).all_pass());
        CHECK(verify_comodule(trivial_comodule(A)).all_pass());
    }
}

TEST_CASE("the counit acts as the identity") {
    const auto A = constant_group_scheme(GroupTable::cyclic(3), Q);
    const auto V = regular_comodule(A);
    Rng rng(5);
    const Vec v = rng.vec(Q, 3);
    CHECK(astar_action(V, A.counit, v) == v);
}

TEST_CASE("group elements translate the regular comodule") {
    const auto A = constant_group_scheme(GroupTable::cyclic(2), Q);
    const auto V = regular_comodule(A);
    // acting by the evaluation at g sends d_e to d_{g^{-1}} (here g = g^{-1})
    CHECK(astar_action(V, unit_vec(Q, 2, 1), unit_vec(Q, 2, 0)) == unit_vec(Q, 2, 1));
}

TEST_CASE("the action is associative and unital") {
    for (const auto& [name, A] : constructor_family()) {
        CAPTURE(name);
        const auto C = convolution_algebra(A);
        const auto V = regular_comodule(A);
        Rng rng(13);
        for (int t = 0; t < 4; ++t) {
            const Vec u = rng.vec(A.field, A.dim);
            const Vec w = rng.vec(A.field, A.dim);
            const Vec v = rng.vec(A.field, V.dim);
            // (u w) . v = u . (w . v)
            CHECK(astar_action(V, C.multiply(u, w), v) ==
                  astar_action(V, u, astar_action(V, w, v)));
            CHECK(astar_action(V, C.unit, v) == v);
        }
    }
}

TEST_CASE("characters") {
    // trivial 1-dim comodule
    const auto A = constant_group_scheme(GroupTable::cyclic(3), Q);
    CHECK(character(trivial_comodule(A)) == A.unit);

    // regular comodule of the constant Z/3: |G| at the identity, 0 elsewhere
    const Vec chi_reg = character(regular_comodule(A));
    CHECK(chi_reg == Vec{Scalar::of_int(Q, 3), Scalar::zero(Q), Scalar::zero(Q)});

    // additivity on direct sums
    const auto V = regular_comodule(A);
    const auto W = trivial_comodule(A);
    CHECK(character(direct_sum(V, W)) == add(character(V), character(W)));
}

TEST_CASE("characters are multiplicative on tensor products") {
    const auto A = constant_group_scheme(GroupTable::cyclic(2), Q);
    const auto V = regular_comodule(A);
    const auto S = sign_comodule(A);
    CHECK(verify_comodule(tensor_product(V, S)).all_pass());
    CHECK(character(tensor_product(V, S)) == A.multiply(character(V), character(S)));
    CHECK(tensor_product(V, S).dim == V.dim * S.dim);
}

TEST_CASE("dual comodules") {
    const auto A = constant_group_scheme(GroupTable::cyclic(3), Q);

    // dual of the trivial comodule is trivial
    const auto T = trivial_comodule(A);
    CHECK(dual_comodule(T).coaction == T.coaction);

    // chi of the dual is the antipode of chi
    const auto V = regular_comodule(A);
    const auto D = dual_comodule(V);
    CHECK(verify_comodule(D).all_pass());
    CHECK(character(D) == star_map(A, character(V)));
}

TEST_CASE("invariants of the regular representation are one-dimensional") {
    const auto A = constant_group_scheme(GroupTable::cyclic(3), Q);
    const auto V = regular_comodule(A);
    CHECK(invariants_dim(V) == 1);
    CHECK(invariants_dim_direct(V) == 1);

    // Eq-style pairing: integral of the character equals the invariant count
    const auto res = invariant_integral(A);
    REQUIRE(res.normalized.has_value());
    CHECK(dot(*res.normalized, character(V)).is_one());
}

TEST_CASE("sign representation has no invariants") {
    const auto Z2 = constant_group_scheme(GroupTable::cyclic(2), Q);
    const auto S = sign_comodule(Z2);
    CHECK(invariants_dim(S) == 0);
    const auto res = invariant_integral(Z2);
    CHECK(dot(*res.normalized, character(S)).is_zero());

    // reynolds averages v and -v to zero
    CHECK(is_zero_vec(reynolds(Z2, S, Vec{Scalar::of_int(Q, 5)})));
}

TEST_CASE("trivial direct sums count invariants additively") {
    const auto A = constant_group_scheme(GroupTable::cyclic(2), Q);
    const auto T2 = direct_sum(trivial_comodule(A), trivial_comodule(A));
    CHECK(invariants_dim(T2) == 2);
}

TEST_CASE("reynolds on the regular comodule of Z/2") {
    const auto A = constant_group_scheme(GroupTable::cyclic(2), Q);
    const auto V = regular_comodule(A);
    const Scalar half = Scalar::of_fraction(Q, 1, 2);
    CHECK(reynolds(A, V, unit_vec(Q, 2, 0)) == Vec{half, half});

    // trivial comodule: reynolds is the identity
    const auto T = trivial_comodule(A, 3);
    Rng rng(17);
    const Vec v = rng.vec(Q, 3);
    CHECK(reynolds(A, T, v) == v);
}

TEST_CASE("reynolds is idempotent and lands on coinvariant vectors") {
    for (const auto& [name, A] : constructor_family()) {
        if (!is_linearly_reductive(A).reductive)
            continue;
        CAPTURE(name);
        const auto V = regular_comodule(A);
        const Matrix R = reynolds_matrix(A, V);
        CHECK(R * R == R);

        // image vectors are fixed: rho(v) = v (x) 1, checked through the
        // defining linear system
        Rng rng(29);
        for (int t = 0; t < 3; ++t) {
            const Vec v = R.apply(rng.vec(A.field, V.dim));
            for (std::size_t j = 0; j < V.dim; ++j)
                for (std::size_t k = 0; k < A.dim; ++k) {
                    Scalar got = Scalar::zero(A.field);
                    for (std::size_t i = 0; i < V.dim; ++i)
                        if (!V.coaction.at(i, j, k).is_zero())
                            got += v[i] * V.coaction.at(i, j, k);
                    CHECK(got == v[j] * A.unit[k]);
                }
        }
    }
}

TEST_CASE("reynolds requires reductivity") {
    const auto A = constant_group_scheme(GroupTable::cyclic(2), Field::prime_field(2));
    const auto V = regular_comodule(A);
    CHECK_THROWS_AS(reynolds(A, V, unit_vec(A.field, 2, 0)), NotReductiveError);
    // the direct solve still works
    CHECK(invariants_dim(V) == 1);
}

TEST_CASE("integral of the character counts invariants on reductive pairs") {
    for (const auto& [name, A] : constructor_family()) {
        const auto res = invariant_integral(A);
        if (!res.normalized)
            continue;
        CAPTURE(name);
        std::vector<Comodule> mods;
        mods.push_back(regular_comodule(A));
        mods.push_back(trivial_comodule(A));
        mods.push_back(dual_comodule(regular_comodule(A)));
        mods.push_back(direct_sum(regular_comodule(A), trivial_comodule(A)));
        for (const auto& V : mods) {
            const std::size_t inv = invariants_dim(V);
            CHECK(inv == invariants_dim_direct(V));
            CHECK(dot(*res.normalized, character(V)) ==
                  Scalar::of_int(A.field, static_cast<long long>(inv)));
        }
    }
}

TEST_CASE("character orthogonality for the lines of mu_n over Q") {
    const auto A = mu_n(4, Q);
    std::vector<Vec> chars;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto Vi = line_comodule(A, unit_vec(Q, 4, i));
        chars.push_back(character(Vi));
        CHECK(chars.back() == unit_vec(Q, 4, i));
    }
    // F(chi_i)(chi_j) = [i = j]
    for (std::size_t i = 0; i < 4; ++i) {
        const Vec Fi = fourier(A, chars[i]);
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(dot(Fi, chars[j]) ==
                  (i == j ? Scalar::one(Q) : Scalar::zero(Q)));
    }
}

TEST_CASE("regular character of mu_2 via hand expansion") {
    // partial trace of the grouplike comultiplication: chi = sum_i x^i read
    // coefficientwise, so 1 at every basis slot
    const auto A = mu_n(2, Q);
    CHECK(character(regular_comodule(A)) == Vec{Scalar::one(Q), Scalar::one(Q)});
}

TEST_CASE("dual characters are antipode images across the family") {
    for (const auto& [name, A] : constructor_family()) {
        CAPTURE(name);
        const auto V = regular_comodule(A);
        CHECK(character(dual_comodule(V)) == star_map(A, character(V)));
        CHECK(verify_comodule(dual_comodule(V)).all_pass());
    }
}

TEST_CASE("comodules over different algebras do not mix") {
    const auto A = mu_n(2, Q);
    const auto B = mu_n(2, Q); // distinct object, same data
    CHECK_THROWS_AS(direct_sum(regular_comodule(A), regular_comodule(B)),
                    FieldMismatchError);
    CHECK_THROWS_AS(astar_action(regular_comodule(A), zero_vec(Q, 3), zero_vec(Q, 2)),
                    DimensionError);
}
