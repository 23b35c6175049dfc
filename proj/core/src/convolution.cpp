#include "grouptrace/convolution.hpp"

namespace grouptrace {

Vec ConvolutionAlgebra::multiply(const Vec& a, const Vec& b) const {
    if (a.size() != dim || b.size() != dim)
        throw DimensionError("functional length does not match algebra dimension");
    const Field& f = mult.field();
    Vec r = zero_vec(f, dim);
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

ConvolutionAlgebra convolution_algebra(const FiniteHopfAlgebra& A) {
    const std::size_t n = A.dim;
    Tensor3 mult(A.field, n, n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& d = A.comult.at(k, i, j);
                if (!d.is_zero())
                    mult.at(i, j, k) = d;
            }
    return {&A, n, std::move(mult), A.counit};
}

Matrix left_mult_matrix(const ConvolutionAlgebra& C, const Vec& w) {
    if (w.size() != C.dim)
        throw DimensionError("functional length does not match algebra dimension");
    Matrix m(C.mult.field(), C.dim, C.dim);
    for (std::size_t i = 0; i < C.dim; ++i) {
        if (w[i].is_zero())
            continue;
        for (std::size_t j = 0; j < C.dim; ++j)
            for (std::size_t k = 0; k < C.dim; ++k)
                if (!C.mult.at(i, j, k).is_zero())
                    m.at(k, j) += w[i] * C.mult.at(i, j, k);
    }
    return m;
}

Matrix right_mult_matrix(const ConvolutionAlgebra& C, const Vec& w) {
    if (w.size() != C.dim)
        throw DimensionError("functional length does not match algebra dimension");
    Matrix m(C.mult.field(), C.dim, C.dim);
    for (std::size_t j = 0; j < C.dim; ++j) {
        if (w[j].is_zero())
            continue;
        for (std::size_t i = 0; i < C.dim; ++i)
            for (std::size_t k = 0; k < C.dim; ++k)
                if (!C.mult.at(i, j, k).is_zero())
                    m.at(k, i) += w[j] * C.mult.at(i, j, k);
    }
    return m;
}

GramMatrix trace_form_gram(const ConvolutionAlgebra& C) {
    const std::size_t n = C.dim;
    const Field& f = C.mult.field();

    // tr(L_{w_i w_j}) is linear in the product, so precompute the traces of
    // the basis multiplication operators and contract once.
    Vec basis_traces = zero_vec(f, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            basis_traces[k] += C.mult.at(k, j, j);

    Matrix g(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!C.mult.at(i, j, k).is_zero() && !basis_traces[k].is_zero())
                    g.at(i, j) += C.mult.at(i, j, k) * basis_traces[k];
    return {&C, std::move(g)};
}

Vec polarity_phi(const ConvolutionAlgebra& C, const GramMatrix& G, const Vec& wt) {
    if (wt.size() != C.dim)
        throw DimensionError("functional length does not match algebra dimension");
    return G.entries.apply(wt);
}

Vec polarity_phi(const ConvolutionAlgebra& C, const Vec& wt) {
    return polarity_phi(C, trace_form_gram(C), wt);
}

Vec polarity_varphi(const ConvolutionAlgebra& C, const GramMatrix& G, const Vec& w) {
    if (w.size() != C.dim)
        throw DimensionError("functional length does not match algebra dimension");
    return G.entries.transpose().apply(w);
}

Vec polarity_varphi(const ConvolutionAlgebra& C, const Vec& w) {
    return polarity_varphi(C, trace_form_gram(C), w);
}

Vec dual_left_action(const ConvolutionAlgebra& C, const Vec& w, const Vec& f) {
    if (w.size() != C.dim || f.size() != C.dim)
        throw DimensionError("length does not match algebra dimension");
    // (w . f)(w_j) = f(w_j w)
    Vec r = zero_vec(C.mult.field(), C.dim);
    for (std::size_t j = 0; j < C.dim; ++j)
        r[j] = dot(f, C.multiply(unit_vec(C.mult.field(), C.dim, j), w));
    return r;
}

Vec dual_right_action(const ConvolutionAlgebra& C, const Vec& f, const Vec& w) {
    if (w.size() != C.dim || f.size() != C.dim)
        throw DimensionError("length does not match algebra dimension");
    // (f . w)(w_j) = f(w w_j)
    Vec r = zero_vec(C.mult.field(), C.dim);
    for (std::size_t j = 0; j < C.dim; ++j)
        r[j] = dot(f, C.multiply(w, unit_vec(C.mult.field(), C.dim, j)));
    return r;
}

ReductivityDecision is_linearly_reductive(const FiniteHopfAlgebra& A) {
    const ConvolutionAlgebra C = convolution_algebra(A);
    const GramMatrix G = trace_form_gram(C);
    const std::size_t r = rank(G.entries);
    return {
        r == A.dim,
        r,
        A.dim,
        {"full Gram rank (trace form non-degenerate on the dual algebra)",
         "phi from the dual algebra onto A is bijective",
         "varphi from the dual algebra into its own dual is injective",
         "phi is injective and its source exhausts the dual algebra"},
        "in finite dimension the listed formulations are one and the same "
        "rank condition; a single exact rank computation decides all of them",
    };
}

namespace {

// Incremental exact feasibility for tall sparse systems: equations are folded
// one at a time into a maintained reduced echelon basis (augmented with the
// right-hand side), so the n^3 bimodule equations never sit in memory as one
// dense matrix and contradictions surface early. Divisions are exact in both
// fields.
class IncrementalFeasibility {
public:
    explicit IncrementalFeasibility(std::size_t unknowns)
        : unknowns_(unknowns), pivot_of_col_(unknowns + 1, npos) {}

    // row has unknowns_ + 1 entries, the last one the right-hand side.
    // Returns false as soon as 0 = nonzero is derived.
    bool fold(Vec row) {
        for (std::size_t c = 0; c <= unknowns_; ++c) {
            if (row[c].is_zero())
                continue;
            const std::size_t p = pivot_of_col_[c];
            if (p == npos) {
                if (c == unknowns_)
                    return false; // 0 = nonzero
                const Scalar inv = row[c].inverse();
                for (auto& x : row)
                    x *= inv;
                eliminate_column_from_existing(c, row);
                pivot_of_col_[c] = rows_.size();
                rows_.push_back(std::move(row));
                cols_.push_back(c);
                return true;
            }
            const Scalar coeff = row[c];
            const Vec& prow = rows_[p];
            for (std::size_t j = c; j <= unknowns_; ++j)
                if (!prow[j].is_zero())
                    row[j] -= coeff * prow[j];
        }
        return true; // reduced to 0 = 0
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void eliminate_column_from_existing(std::size_t c, const Vec& newrow) {
        for (std::size_t p = 0; p < rows_.size(); ++p) {
            Scalar coeff = rows_[p][c];
            if (coeff.is_zero())
                continue;
            for (std::size_t j = cols_[p]; j <= unknowns_; ++j)
                if (!newrow[j].is_zero())
                    rows_[p][j] -= coeff * newrow[j];
        }
    }

    std::size_t unknowns_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> cols_;
    std::vector<std::size_t> pivot_of_col_;
};

} // namespace

bool separability_oracle(const ConvolutionAlgebra& C) {
    const std::size_t n = C.dim;
    const Field& f = C.mult.field();
    const std::size_t unknowns = n * n; // e = sum E(a,b) w_a (x) w_b
    const auto col = [n](std::size_t a, std::size_t b) { return a * n + b; };

    IncrementalFeasibility system(unknowns);

    // m(e) = 1: sum_{a,b} E(a,b) (w_a w_b)_k = unit_k
    for (std::size_t k = 0; k < n; ++k) {
        Vec row = zero_vec(f, unknowns + 1);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& c = C.mult.at(a, b, k);
                if (!c.is_zero())
                    row[col(a, b)] += c;
            }
        row[unknowns] = C.unit[k];
        if (!system.fold(std::move(row)))
            return false;
    }

    // (x (x) 1) e = (1 (x) x) e for every basis x = w_c0, component (alpha, beta):
    //   sum_a C(c0,a,alpha) E(a,beta) - sum_b C(b,c0,beta) E(alpha,b) = 0
    for (std::size_t c0 = 0; c0 < n; ++c0)
        for (std::size_t alpha = 0; alpha < n; ++alpha)
            for (std::size_t beta = 0; beta < n; ++beta) {
                Vec row = zero_vec(f, unknowns + 1);
                bool nonzero = false;
                for (std::size_t a = 0; a < n; ++a) {
                    const Scalar& c = C.mult.at(c0, a, alpha);
                    if (!c.is_zero()) {
                        row[col(a, beta)] += c;
                        nonzero = true;
                    }
                }
                for (std::size_t b = 0; b < n; ++b) {
                    const Scalar& c = C.mult.at(b, c0, beta);
                    if (!c.is_zero()) {
                        row[col(alpha, b)] -= c;
                        nonzero = true;
                    }
                }
                if (nonzero && !system.fold(std::move(row)))
                    return false;
            }

    return true;
}

} // namespace grouptrace
