#include "grouptrace/matrix.hpp"

#include <utility>

namespace grouptrace {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionError("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionError("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r)
        x *= c;
    return r;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size() || a.empty())
        throw DimensionError("vector length mismatch");
    Scalar s = Scalar::zero(a.front().field());
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {
    if (rows == 0 || cols == 0)
        throw DimensionError("matrix dimensions must be positive");
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::of_ints(const Field& f,
                       std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw DimensionError("ragged matrix literal");
        std::size_t j = 0;
        for (long long v : row)
            m.at(i, j++) = Scalar::of_int(f, v);
        ++i;
    }
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t n, const std::vector<Vec>& cols) {
    Matrix m(f, n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != n)
            throw DimensionError("column length mismatch");
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_)
        throw DimensionError("trace of a non-square matrix");
    Scalar s = Scalar::zero(field_);
    for (std::size_t i = 0; i < rows_; ++i)
        s += at(i, i);
    return s;
}

Vec Matrix::row(std::size_t i) const {
    Vec v;
    v.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        v.push_back(at(i, j));
    return v;
}

Vec Matrix::column(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v.push_back(at(i, j));
    return v;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap(at(i, c), at(j, c));
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_)
        throw DimensionError("matrix-vector size mismatch");
    Vec r = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero())
                r[i] += at(i, j) * v[j];
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_)
        throw FieldMismatchError("matrix addition over different fields");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix addition shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i)
        r.a_[i] += b.a_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_)
        throw FieldMismatchError("matrix subtraction over different fields");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix subtraction shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i)
        r.a_[i] -= b.a_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_)
        throw FieldMismatchError("matrix product over different fields");
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product shape mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero())
                    r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        return false;
    return a_ == o.a_;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero())
                return false;
        }
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

namespace {

using Pivot = std::pair<std::size_t, std::size_t>; // (row, column)

// Multiplies each row by the lcm of its denominators so that the fraction-free
// recurrence stays in integers. Row scaling preserves row space, rank and the
// solution set of an augmented system.
void integerize_rows(Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class lcm_den(1);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpz_class& den = m.at(i, j).rational_value().get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
            lcm_den = lcm_den / g * den;
        }
        if (lcm_den == 1)
            continue;
        const Scalar c = Scalar::of_rational(mpq_class(lcm_den));
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) *= c;
    }
}

// Forward elimination to row-echelon form. Pivot = first nonzero entry in
// column order. Bareiss over Q (exact divisions by the previous pivot),
// plain Gaussian elimination over F_p.
std::vector<Pivot> forward_eliminate(Matrix& m) {
    const bool bareiss = m.field().is_rationals();
    if (bareiss)
        integerize_rows(m);

    std::vector<Pivot> pivots;
    Scalar prev = Scalar::one(m.field());
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < m.rows() && m.at(sel, c).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        m.swap_rows(pr, sel);
        const Scalar piv = m.at(pr, c);
        for (std::size_t i = pr + 1; i < m.rows(); ++i) {
            if (bareiss) {
                const Scalar mic = m.at(i, c);
                for (std::size_t j = c + 1; j < m.cols(); ++j)
                    m.at(i, j) = (m.at(i, j) * piv - mic * m.at(pr, j)) / prev;
            } else {
                if (m.at(i, c).is_zero())
                    continue;
                const Scalar factor = m.at(i, c) / piv;
                for (std::size_t j = c + 1; j < m.cols(); ++j)
                    m.at(i, j) -= factor * m.at(pr, j);
            }
            m.at(i, c) = Scalar::zero(m.field());
        }
        pivots.emplace_back(pr, c);
        prev = piv;
        ++pr;
    }
    return pivots;
}

// Back substitution to reduced row-echelon form (unit pivots, zeros above).
void to_reduced(Matrix& m, const std::vector<Pivot>& pivots) {
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto [r, c] = *it;
        const Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            m.at(r, j) *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            const Scalar f = m.at(i, c);
            if (f.is_zero())
                continue;
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
    }
}

} // namespace

std::size_t rank(const Matrix& m) {
    Matrix w = m;
    return forward_eliminate(w).size();
}

std::vector<Vec> nullspace(const Matrix& m) {
    Matrix w = m;
    const auto pivots = forward_eliminate(w);
    to_reduced(w, pivots);

    std::vector<bool> is_pivot_col(m.cols(), false);
    for (const auto& [r, c] : pivots)
        is_pivot_col[c] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot_col[f])
            continue;
        Vec v = zero_vec(m.field(), m.cols());
        v[f] = Scalar::one(m.field());
        for (const auto& [r, c] : pivots)
            v[c] = -w.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve_linear(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows())
        throw DimensionError("right-hand side length does not match row count");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        if (rhs[i].field() != m.field())
            throw FieldMismatchError("right-hand side over a different field");
        aug.at(i, m.cols()) = rhs[i];
    }

    const auto pivots = forward_eliminate(aug);
    for (const auto& [r, c] : pivots)
        if (c == m.cols())
            return std::nullopt;
    to_reduced(aug, pivots);

    Vec x = zero_vec(m.field(), m.cols());
    for (const auto& [r, c] : pivots)
        x[c] = aug.at(r, m.cols());
    return x;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field())
        throw FieldMismatchError("Kronecker product over different fields");
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero())
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(m.field());
    }
    const auto pivots = forward_eliminate(aug);
    std::size_t rank_left = 0;
    for (const auto& [r, c] : pivots)
        if (c < n)
            ++rank_left;
    if (rank_left < n)
        return std::nullopt;
    to_reduced(aug, pivots);
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

} // namespace grouptrace
