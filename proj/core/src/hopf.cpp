#include "grouptrace/hopf.hpp"

#include <algorithm>

namespace grouptrace {

bool AxiomReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AxiomCheck& c) { return c.pass; });
}

std::string AxiomReport::summary() const {
    std::string s;
    for (const auto& c : checks) {
        s += c.name;
        s += c.pass ? ": ok\n" : ": FAILED\n";
    }
    return s;
}

Vec FiniteHopfAlgebra::multiply(const Vec& a, const Vec& b) const {
    if (a.size() != dim || b.size() != dim)
        throw DimensionError("element length does not match algebra dimension");
    Vec r = zero_vec(field, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero())
                continue;
            const Scalar c = a[i] * b[j];
            for (std::size_t k = 0; k < dim; ++k)
                if (!mult.at(i, j, k).is_zero())
                    r[k] += c * mult.at(i, j, k);
        }
    }
    return r;
}

Vec FiniteHopfAlgebra::antipode_apply(const Vec& a) const { return antipode.apply(a); }

Scalar FiniteHopfAlgebra::counit_value(const Vec& a) const { return dot(counit, a); }

Matrix FiniteHopfAlgebra::mult_matrix(const Vec& a) const {
    if (a.size() != dim)
        throw DimensionError("element length does not match algebra dimension");
    Matrix m(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (!mult.at(i, j, k).is_zero())
                    m.at(k, j) += a[i] * mult.at(i, j, k);
    }
    return m;
}

namespace {

// Iterates nonzero entries only; the standard constructors produce very
// sparse tensors and the axiom checks below rely on that for speed.
template <typename F>
void for_nonzero(const Tensor3& t, std::size_t i, F&& f) {
    for (std::size_t j = 0; j < t.n1(); ++j)
        for (std::size_t k = 0; k < t.n2(); ++k)
            if (!t.at(i, j, k).is_zero())
                f(j, k, t.at(i, j, k));
}

bool check_associativity(const FiniteHopfAlgebra& A) {
    const std::size_t n = A.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // x = e_i e_j
            for (std::size_t l = 0; l < n; ++l) {
                Vec lhs = zero_vec(A.field, n), rhs = zero_vec(A.field, n);
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar& xk = A.mult.at(i, j, k);
                    if (!xk.is_zero())
                        for (std::size_t r = 0; r < n; ++r)
                            if (!A.mult.at(k, l, r).is_zero())
                                lhs[r] += xk * A.mult.at(k, l, r);
                    const Scalar& yk = A.mult.at(j, l, k);
                    if (!yk.is_zero())
                        for (std::size_t r = 0; r < n; ++r)
                            if (!A.mult.at(i, k, r).is_zero())
                                rhs[r] += yk * A.mult.at(i, k, r);
                }
                if (lhs != rhs)
                    return false;
            }
        }
    return true;
}

bool check_unit(const FiniteHopfAlgebra& A) {
    const std::size_t n = A.dim;
    for (std::size_t j = 0; j < n; ++j) {
        Vec left = A.multiply(A.unit, unit_vec(A.field, n, j));
        if (left != unit_vec(A.field, n, j))
            return false;
        Vec right = A.multiply(unit_vec(A.field, n, j), A.unit);
        if (right != unit_vec(A.field, n, j))
            return false;
    }
    return true;
}

bool check_commutativity(const FiniteHopfAlgebra& A) {
    const std::size_t n = A.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (A.mult.at(i, j, k) != A.mult.at(j, i, k))
                    return false;
    return true;
}

bool check_coassociativity(const FiniteHopfAlgebra& A) {
    const std::size_t n = A.dim;
    for (std::size_t i = 0; i < n; ++i) {
        Tensor3 lhs(A.field, n, n, n); // [j][k][r]
        Tensor3 rhs(A.field, n, n, n);
        for_nonzero(A.comult, i, [&](std::size_t m, std::size_t r, const Scalar& c) {
            // (Delta (x) id): expand the first leg e_m
            for_nonzero(A.comult, m, [&](std::size_t j, std::size_t k, const Scalar& d) {
                lhs.at(j, k, r) += c * d;
            });
        });
        for_nonzero(A.comult, i, [&](std::size_t j, std::size_t m, const Scalar& c) {
            // (id (x) Delta): expand the second leg e_m
            for_nonzero(A.comult, m, [&](std::size_t k, std::size_t r, const Scalar& d) {
                rhs.at(j, k, r) += c * d;
            });
        });
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

bool check_counit(const FiniteHopfAlgebra& A) {
    const std::size_t n = A.dim;
    for (std::size_t i = 0; i < n; ++i) {
        Vec left = zero_vec(A.field, n), right = zero_vec(A.field, n);
        for_nonzero(A.comult, i, [&](std::size_t j, std::size_t k, const Scalar& c) {
            left[k] += c * A.counit[j];  // (eps (x) id)
            right[j] += c * A.counit[k]; // (id (x) eps)
        });
        if (left != unit_vec(A.field, n, i) || right != unit_vec(A.field, n, i))
            return false;
    }
    return true;
}

// Delta and eps are algebra morphisms, Delta(1) = 1 (x) 1, eps(1) = 1.
bool check_compatibility(const FiniteHopfAlgebra& A) {
    const std::size_t n = A.dim;
    if (!A.counit_value(A.unit).is_one())
        return false;

    // Delta(1) = 1 (x) 1
    {
        Matrix lhs(A.field, n, n), rhs(A.field, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (A.unit[i].is_zero())
                continue;
            for_nonzero(A.comult, i, [&](std::size_t j, std::size_t k, const Scalar& c) {
                lhs.at(j, k) += A.unit[i] * c;
            });
        }
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                rhs.at(j, k) = A.unit[j] * A.unit[k];
        if (!(lhs == rhs))
            return false;
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // eps(e_i e_j) = eps(e_i) eps(e_j)
            Scalar e = Scalar::zero(A.field);
            for (std::size_t k = 0; k < n; ++k)
                if (!A.mult.at(i, j, k).is_zero())
                    e += A.mult.at(i, j, k) * A.counit[k];
            if (e != A.counit[i] * A.counit[j])
                return false;

            // Delta(e_i e_j) = Delta(e_i) Delta(e_j)
            Matrix lhs(A.field, n, n), rhs(A.field, n, n);
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = A.mult.at(i, j, k);
                if (c.is_zero())
                    continue;
                for_nonzero(A.comult, k, [&](std::size_t a, std::size_t b, const Scalar& d) {
                    lhs.at(a, b) += c * d;
                });
            }
            for_nonzero(A.comult, i, [&](std::size_t p, std::size_t q, const Scalar& ci) {
                for_nonzero(A.comult, j, [&](std::size_t r, std::size_t s, const Scalar& cj) {
                    const Scalar c = ci * cj;
                    for (std::size_t a = 0; a < n; ++a) {
                        const Scalar& mpr = A.mult.at(p, r, a);
                        if (mpr.is_zero())
                            continue;
                        for (std::size_t b = 0; b < n; ++b)
                            if (!A.mult.at(q, s, b).is_zero())
                                rhs.at(a, b) += c * mpr * A.mult.at(q, s, b);
                    }
                });
            });
            if (!(lhs == rhs))
                return false;
        }
    return true;
}

// m(S (x) id)Delta = u eps = m(id (x) S)Delta
bool check_antipode(const FiniteHopfAlgebra& A) {
    const std::size_t n = A.dim;
    for (std::size_t i = 0; i < n; ++i) {
        Vec left = zero_vec(A.field, n), right = zero_vec(A.field, n);
        for_nonzero(A.comult, i, [&](std::size_t j, std::size_t k, const Scalar& c) {
            left = add(left, scale(c, A.multiply(A.antipode.column(j), unit_vec(A.field, n, k))));
            right = add(right, scale(c, A.multiply(unit_vec(A.field, n, j), A.antipode.column(k))));
        });
        const Vec expected = scale(A.counit[i], A.unit);
        if (left != expected || right != expected)
            return false;
    }
    return true;
}

bool check_antipode_involution(const FiniteHopfAlgebra& A) {
    return (A.antipode * A.antipode).is_identity();
}

} // namespace

AxiomReport verify_hopf_axioms(const FiniteHopfAlgebra& A) {
    AxiomReport rep;
    rep.checks.push_back({"associativity", check_associativity(A)});
    rep.checks.push_back({"unit", check_unit(A)});
    rep.checks.push_back({"commutativity", check_commutativity(A)});
    rep.checks.push_back({"coassociativity", check_coassociativity(A)});
    rep.checks.push_back({"counit", check_counit(A)});
    rep.checks.push_back({"compatibility", check_compatibility(A)});
    rep.checks.push_back({"antipode", check_antipode(A)});
    rep.checks.push_back({"antipode_involution", check_antipode_involution(A)});
    return rep;
}

FiniteHopfAlgebra checked_hopf(FiniteHopfAlgebra raw) {
    const AxiomReport rep = verify_hopf_axioms(raw);
    if (!rep.all_pass())
        throw AxiomError("Hopf axioms failed", rep.summary());
    return raw;
}

GroupTable::GroupTable(std::vector<std::vector<std::size_t>> table)
    : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0)
        throw NotAGroupError("empty multiplication table");
    for (const auto& row : table_) {
        if (row.size() != n)
            throw NotAGroupError("multiplication table is not square");
        for (std::size_t v : row)
            if (v >= n)
                throw NotAGroupError("table entry out of range");
    }

    // identity
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j)
            ok = ok && table_[e][j] == j && table_[j][e] == j;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found)
        throw NotAGroupError("table has no identity element");

    // associativity
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
                    throw NotAGroupError("table is not associative");

    // inverses
    inverse_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (table_[i][j] == identity_ && table_[j][i] == identity_) {
                inverse_[i] = j;
                break;
            }
        if (inverse_[i] == n)
            throw NotAGroupError("element " + std::to_string(i) + " has no inverse");
    }
}

GroupTable GroupTable::cyclic(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = (i + j) % n;
    return GroupTable(std::move(t));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
    const std::size_t na = a.order(), nb = b.order(), n = na * nb;
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i1 = 0; i1 < na; ++i1)
        for (std::size_t i2 = 0; i2 < nb; ++i2)
            for (std::size_t j1 = 0; j1 < na; ++j1)
                for (std::size_t j2 = 0; j2 < nb; ++j2)
                    t[i1 * nb + i2][j1 * nb + j2] = a.mul(i1, j1) * nb + b.mul(i2, j2);
    return GroupTable(std::move(t));
}

GroupTable GroupTable::symmetric3() {
    // permutations of {0,1,2} in lexicographic one-line order:
    // 012, 021, 102, 120, 201, 210; composition (p*q)(x) = p(q(x))
    const std::size_t perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const std::size_t* p) {
        for (std::size_t i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
                return i;
        return std::size_t(6);
    };
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::size_t comp[3];
            for (std::size_t x = 0; x < 3; ++x)
                comp[x] = perms[i][perms[j][x]];
            t[i][j] = index_of(comp);
        }
    return GroupTable(std::move(t));
}

FiniteHopfAlgebra constant_group_scheme(const GroupTable& g, const Field& f) {
    const std::size_t n = g.order();
    Tensor3 mult(f, n, n, n), comult(f, n, n, n);
    Vec unit = zero_vec(f, n), counit = zero_vec(f, n);
    Matrix antipode(f, n, n);
    const Scalar one = Scalar::one(f);

    for (std::size_t i = 0; i < n; ++i) {
        mult.at(i, i, i) = one;           // indicators multiply pointwise
        unit[i] = one;                    // 1 = sum of all indicators
        antipode.at(g.inverse(i), i) = one;
    }
    counit[g.identity()] = one;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            comult.at(g.mul(a, b), a, b) = one;

    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = "d" + std::to_string(i);
    return {f, n, std::move(mult), std::move(unit), std::move(comult),
            std::move(counit), std::move(antipode), std::move(labels)};
}

FiniteHopfAlgebra mu_n(std::size_t n, const Field& f) {
    if (n == 0)
        throw Error("mu_n requires n >= 1");
    Tensor3 mult(f, n, n, n), comult(f, n, n, n);
    Vec unit = zero_vec(f, n), counit = zero_vec(f, n);
    Matrix antipode(f, n, n);
    const Scalar one = Scalar::one(f);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            mult.at(i, j, (i + j) % n) = one;
        comult.at(i, i, i) = one; // grouplike basis
        counit[i] = one;
        antipode.at((n - i) % n, i) = one;
    }
    unit[0] = one;

    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = i == 0 ? "1" : "x^" + std::to_string(i);
    return {f, n, std::move(mult), std::move(unit), std::move(comult),
            std::move(counit), std::move(antipode), std::move(labels)};
}

FiniteHopfAlgebra alpha_p(const Field& f) {
    if (!f.is_prime_field())
        throw Error("alpha_p requires positive characteristic");
    const std::size_t p = static_cast<std::size_t>(f.characteristic());
    Tensor3 mult(f, p, p, p), comult(f, p, p, p);
    Vec unit = zero_vec(f, p), counit = zero_vec(f, p);
    Matrix antipode(f, p, p);
    const Scalar one = Scalar::one(f);

    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            if (i + j < p)
                mult.at(i, j, i + j) = one; // x^i x^j, truncated at x^p = 0

    // Delta(x^k) = sum_j C(k,j) x^j (x) x^{k-j}, Pascal row by row
    std::vector<Vec> binom(p);
    binom[0] = Vec{one};
    for (std::size_t k = 1; k < p; ++k) {
        binom[k] = Vec(k + 1, Scalar::zero(f));
        binom[k][0] = one;
        binom[k][k] = one;
        for (std::size_t j = 1; j < k; ++j)
            binom[k][j] = binom[k - 1][j - 1] + binom[k - 1][j];
    }
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t j = 0; j <= k; ++j)
            comult.at(k, j, k - j) = binom[k][j];

    unit[0] = one;
    counit[0] = one;
    Scalar sign = one;
    for (std::size_t i = 0; i < p; ++i) {
        antipode.at(i, i) = sign; // S(x^i) = (-x)^i
        sign = -sign;
    }

    std::vector<std::string> labels(p);
    for (std::size_t i = 0; i < p; ++i)
        labels[i] = i == 0 ? "1" : "x^" + std::to_string(i);
    return {f, p, std::move(mult), std::move(unit), std::move(comult),
            std::move(counit), std::move(antipode), std::move(labels)};
}

FiniteHopfAlgebra product(const FiniteHopfAlgebra& a, const FiniteHopfAlgebra& b) {
    if (a.field != b.field)
        throw FieldMismatchError("product of Hopf algebras over different fields");
    const std::size_t na = a.dim, nb = b.dim, n = na * nb;
    const auto idx = [nb](std::size_t i, std::size_t j) { return i * nb + j; };

    Tensor3 mult(a.field, n, n, n), comult(a.field, n, n, n);
    Vec unit = zero_vec(a.field, n), counit = zero_vec(a.field, n);

    for (std::size_t i1 = 0; i1 < na; ++i1)
        for (std::size_t i2 = 0; i2 < nb; ++i2) {
            unit[idx(i1, i2)] = a.unit[i1] * b.unit[i2];
            counit[idx(i1, i2)] = a.counit[i1] * b.counit[i2];
        }

    for (std::size_t i1 = 0; i1 < na; ++i1)
        for (std::size_t j1 = 0; j1 < na; ++j1)
            for (std::size_t k1 = 0; k1 < na; ++k1) {
                const Scalar& ma = a.mult.at(i1, j1, k1);
                if (ma.is_zero())
                    continue;
                for (std::size_t i2 = 0; i2 < nb; ++i2)
                    for (std::size_t j2 = 0; j2 < nb; ++j2)
                        for (std::size_t k2 = 0; k2 < nb; ++k2) {
                            const Scalar& mb = b.mult.at(i2, j2, k2);
                            if (!mb.is_zero())
                                mult.at(idx(i1, i2), idx(j1, j2), idx(k1, k2)) = ma * mb;
                        }
            }

    for (std::size_t i1 = 0; i1 < na; ++i1)
        for (std::size_t j1 = 0; j1 < na; ++j1)
            for (std::size_t k1 = 0; k1 < na; ++k1) {
                const Scalar& da = a.comult.at(i1, j1, k1);
                if (da.is_zero())
                    continue;
                for (std::size_t i2 = 0; i2 < nb; ++i2)
                    for (std::size_t j2 = 0; j2 < nb; ++j2)
                        for (std::size_t k2 = 0; k2 < nb; ++k2) {
                            const Scalar& db = b.comult.at(i2, j2, k2);
                            if (!db.is_zero())
                                comult.at(idx(i1, i2), idx(j1, j2), idx(k1, k2)) = da * db;
                        }
            }

    Matrix antipode = kron(a.antipode, b.antipode);

    std::vector<std::string> labels(n);
    if (a.labels.size() == na && b.labels.size() == nb)
        for (std::size_t i1 = 0; i1 < na; ++i1)
            for (std::size_t i2 = 0; i2 < nb; ++i2)
                labels[idx(i1, i2)] = a.labels[i1] + "*" + b.labels[i2];
    return {a.field, n, std::move(mult), std::move(unit), std::move(comult),
            std::move(counit), std::move(antipode), std::move(labels)};
}

bool is_cocommutative(const FiniteHopfAlgebra& A) {
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j)
            for (std::size_t k = 0; k < j; ++k)
                if (A.comult.at(i, j, k) != A.comult.at(i, k, j))
                    return false;
    return true;
}

FiniteHopfAlgebra cartier_dual(const FiniteHopfAlgebra& A) {
    if (!is_cocommutative(A))
        throw UnsupportedError(
            "Cartier dual requires a cocommutative coordinate ring (the dual of a "
            "non-cocommutative one is a non-commutative algebra, not a group scheme)");
    const std::size_t n = A.dim;
    Tensor3 mult(A.field, n, n, n), comult(A.field, n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                mult.at(i, j, k) = A.comult.at(k, i, j);
                comult.at(i, j, k) = A.mult.at(j, k, i);
            }
    std::vector<std::string> labels(n);
    if (A.labels.size() == n)
        for (std::size_t i = 0; i < n; ++i)
            labels[i] = A.labels[i] + "*";
    return {A.field, n,           std::move(mult),     A.counit, std::move(comult),
            A.unit,  A.antipode.transpose(), std::move(labels)};
}

FiniteHopfAlgebra change_basis(const FiniteHopfAlgebra& A, const Matrix& new_basis) {
    const std::size_t n = A.dim;
    if (new_basis.rows() != n || new_basis.cols() != n)
        throw DimensionError("basis matrix must be square of the algebra dimension");
    const auto qopt = inverse(new_basis);
    if (!qopt)
        throw Error("basis matrix is singular");
    const Matrix& P = new_basis;
    const Matrix& Q = *qopt;

    Tensor3 mult(A.field, n, n, n), comult(A.field, n, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Scalar& m = A.mult.at(a, b, c);
                if (!m.is_zero())
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j)
                            for (std::size_t k = 0; k < n; ++k)
                                mult.at(i, j, k) += P.at(a, i) * P.at(b, j) * m * Q.at(k, c);
                const Scalar& d = A.comult.at(a, b, c);
                if (!d.is_zero())
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j)
                            for (std::size_t k = 0; k < n; ++k)
                                comult.at(i, j, k) += P.at(a, i) * d * Q.at(j, b) * Q.at(k, c);
            }

    Vec unit = Q.apply(A.unit);
    Vec counit = zero_vec(A.field, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            counit[i] += A.counit[a] * P.at(a, i);
    Matrix antipode = Q * A.antipode * P;
    return {A.field, n, std::move(mult), std::move(unit), std::move(comult),
            std::move(counit), std::move(antipode), {}};
}

} // namespace grouptrace
