#include "grouptrace/comodule.hpp"

namespace grouptrace {

std::string ComoduleReport::summary() const {
    std::string s = "counit law: ";
    s += counit_law ? "ok\n" : "FAILED\n";
    s += "coassociativity law: ";
    s += coassociativity_law ? "ok\n" : "FAILED\n";
    return s;
}

ComoduleReport verify_comodule(const Comodule& V) {
    const FiniteHopfAlgebra& A = *V.algebra;
    const std::size_t v = V.dim, n = A.dim;
    const Field& f = A.field;

    // (id (x) eps) rho = id
    bool counit_ok = true;
    for (std::size_t i = 0; i < v && counit_ok; ++i)
        for (std::size_t j = 0; j < v && counit_ok; ++j) {
            Scalar s = Scalar::zero(f);
            for (std::size_t k = 0; k < n; ++k)
                if (!V.coaction.at(i, j, k).is_zero())
                    s += V.coaction.at(i, j, k) * A.counit[k];
            const Scalar expected = i == j ? Scalar::one(f) : Scalar::zero(f);
            counit_ok = s == expected;
        }

    // (rho (x) id) rho = (id (x) Delta) rho:
    //   sum_m r(i,m,c) r(m,j,k) = sum_t r(i,j,t) d(t,k,c)  for all i,j,k,c
    bool coassoc_ok = true;
    for (std::size_t i = 0; i < v && coassoc_ok; ++i) {
        Tensor3 lhs(f, v, n, n), rhs(f, v, n, n); // [j][k][c]
        for (std::size_t m = 0; m < v; ++m)
            for (std::size_t c = 0; c < n; ++c) {
                const Scalar& outer = V.coaction.at(i, m, c);
                if (outer.is_zero())
                    continue;
                for (std::size_t j = 0; j < v; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        if (!V.coaction.at(m, j, k).is_zero())
                            lhs.at(j, k, c) += outer * V.coaction.at(m, j, k);
            }
        for (std::size_t j = 0; j < v; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                const Scalar& outer = V.coaction.at(i, j, t);
                if (outer.is_zero())
                    continue;
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t c = 0; c < n; ++c)
                        if (!A.comult.at(t, k, c).is_zero())
                            rhs.at(j, k, c) += outer * A.comult.at(t, k, c);
            }
        coassoc_ok = lhs == rhs;
    }

    return {counit_ok, coassoc_ok};
}

Comodule checked_comodule(Comodule raw) {
    const ComoduleReport rep = verify_comodule(raw);
    if (!rep.all_pass())
        throw AxiomError("comodule laws failed", rep.summary());
    return raw;
}

Matrix astar_action_matrix(const Comodule& V, const Vec& w) {
    const std::size_t v = V.dim, n = V.algebra->dim;
    if (w.size() != n)
        throw DimensionError("functional length does not match algebra dimension");
    Matrix m(V.algebra->field, v, v);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!V.coaction.at(i, j, k).is_zero() && !w[k].is_zero())
                    m.at(j, i) += V.coaction.at(i, j, k) * w[k];
    return m;
}

Vec astar_action(const Comodule& V, const Vec& w, const Vec& v) {
    if (v.size() != V.dim)
        throw DimensionError("vector length does not match comodule dimension");
    return astar_action_matrix(V, w).apply(v);
}

Vec character(const Comodule& V) {
    const std::size_t v = V.dim, n = V.algebra->dim;
    Vec chi = zero_vec(V.algebra->field, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < v; ++i)
            chi[k] += V.coaction.at(i, i, k);
    return chi;
}

namespace {

void require_same_algebra(const Comodule& V, const Comodule& W) {
    if (V.algebra != W.algebra)
        throw FieldMismatchError("comodules over different algebras");
}

} // namespace

Comodule direct_sum(const Comodule& V, const Comodule& W) {
    require_same_algebra(V, W);
    const std::size_t n = V.algebra->dim;
    const std::size_t d = V.dim + W.dim;
    Tensor3 r(V.algebra->field, d, d, n);
    for (std::size_t i = 0; i < V.dim; ++i)
        for (std::size_t j = 0; j < V.dim; ++j)
            for (std::size_t k = 0; k < n; ++k)
                r.at(i, j, k) = V.coaction.at(i, j, k);
    for (std::size_t i = 0; i < W.dim; ++i)
        for (std::size_t j = 0; j < W.dim; ++j)
            for (std::size_t k = 0; k < n; ++k)
                r.at(V.dim + i, V.dim + j, k) = W.coaction.at(i, j, k);
    return {V.algebra, d, std::move(r)};
}

Comodule tensor_product(const Comodule& V, const Comodule& W) {
    require_same_algebra(V, W);
    const FiniteHopfAlgebra& A = *V.algebra;
    const std::size_t n = A.dim;
    const std::size_t d = V.dim * W.dim;
    const auto idx = [&](std::size_t a, std::size_t b) { return a * W.dim + b; };

    // Kronecker coaction on the V legs, multiplication in A on the A legs
    Tensor3 r(A.field, d, d, n);
    for (std::size_t i1 = 0; i1 < V.dim; ++i1)
        for (std::size_t j1 = 0; j1 < V.dim; ++j1)
            for (std::size_t k1 = 0; k1 < n; ++k1) {
                const Scalar& c1 = V.coaction.at(i1, j1, k1);
                if (c1.is_zero())
                    continue;
                for (std::size_t i2 = 0; i2 < W.dim; ++i2)
                    for (std::size_t j2 = 0; j2 < W.dim; ++j2)
                        for (std::size_t k2 = 0; k2 < n; ++k2) {
                            const Scalar& c2 = W.coaction.at(i2, j2, k2);
                            if (c2.is_zero())
                                continue;
                            const Scalar c = c1 * c2;
                            for (std::size_t k = 0; k < n; ++k)
                                if (!A.mult.at(k1, k2, k).is_zero())
                                    r.at(idx(i1, i2), idx(j1, j2), k) +=
                                        c * A.mult.at(k1, k2, k);
                        }
            }
    return {V.algebra, d, std::move(r)};
}

Comodule dual_comodule(const Comodule& V) {
    const FiniteHopfAlgebra& A = *V.algebra;
    const std::size_t v = V.dim, n = A.dim;
    // rho*(v_i^*) = sum_j v_j^* (x) S(rho_{ij}) where rho_{ij} in A is the
    // coefficient matrix of the coaction: transpose the V legs and twist by S.
    Tensor3 r(A.field, v, v, n);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                const Scalar& c = V.coaction.at(j, i, t);
                if (c.is_zero())
                    continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (!A.antipode.at(k, t).is_zero())
                        r.at(i, j, k) += c * A.antipode.at(k, t);
            }
    return {V.algebra, v, std::move(r)};
}

std::size_t invariants_dim_direct(const Comodule& V) {
    const FiniteHopfAlgebra& A = *V.algebra;
    const std::size_t v = V.dim, n = A.dim;
    // rho(v) = v (x) 1: sum_i v_i r(i,j,k) = v_j unit_k for all j,k
    Matrix system(A.field, v * n, v);
    for (std::size_t j = 0; j < v; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < v; ++i) {
                Scalar c = V.coaction.at(i, j, k);
                if (i == j)
                    c -= A.unit[k];
                system.at(j * n + k, i) = c;
            }
    return nullspace(system).size();
}

std::size_t invariants_dim(const Comodule& V) {
    const FiniteHopfAlgebra& A = *V.algebra;
    const IntegralResult integral = invariant_integral(A);
    if (!integral.normalized)
        return invariants_dim_direct(V);
    return rank(astar_action_matrix(V, *integral.normalized));
}

Comodule regular_comodule(const FiniteHopfAlgebra& A) { return {&A, A.dim, A.comult}; }

Comodule trivial_comodule(const FiniteHopfAlgebra& A, std::size_t dim) {
    Tensor3 r(A.field, dim, dim, A.dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < A.dim; ++k)
            r.at(i, i, k) = A.unit[k];
    return {&A, dim, std::move(r)};
}

Comodule line_comodule(const FiniteHopfAlgebra& A, const Vec& grouplike) {
    if (grouplike.size() != A.dim)
        throw DimensionError("character length does not match algebra dimension");
    Tensor3 r(A.field, 1, 1, A.dim);
    for (std::size_t k = 0; k < A.dim; ++k)
        r.at(0, 0, k) = grouplike[k];
    return checked_comodule({&A, 1, std::move(r)});
}

Vec reynolds(const FiniteHopfAlgebra& A, const Comodule& V, const Vec& v) {
    const IntegralResult integral = invariant_integral(A);
    if (!integral.normalized)
        throw NotReductiveError("no invariant integral: Reynolds projection undefined");
    return astar_action(V, *integral.normalized, v);
}

Matrix reynolds_matrix(const FiniteHopfAlgebra& A, const Comodule& V) {
    const IntegralResult integral = invariant_integral(A);
    if (!integral.normalized)
        throw NotReductiveError("no invariant integral: Reynolds projection undefined");
    return astar_action_matrix(V, *integral.normalized);
}

} // namespace grouptrace
