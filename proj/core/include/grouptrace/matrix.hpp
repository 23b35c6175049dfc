#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "grouptrace/field.hpp"

namespace grouptrace {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);

/// Dense row-major matrix over one exact field.
class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    /// Builds a matrix from integer literals; handy for tests and fixtures.
    static Matrix of_ints(const Field& f,
                          std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix from_columns(const Field& f, std::size_t n,
                               const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix transpose() const;
    Scalar trace() const;
    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;
    void swap_rows(std::size_t i, std::size_t j);

    /// M * v
    Vec apply(const Vec& v) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    bool operator==(const Matrix& o) const;
    bool is_identity() const;
    bool is_zero() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Exact rank. Fraction-free (Bareiss) elimination over Q, plain Gaussian
/// elimination over F_p; pivots are the first nonzero entry in column order.
std::size_t rank(const Matrix& m);

/// Basis of the right kernel; empty when the kernel is zero. The basis is
/// the reduced-echelon one (deterministic, one vector per free column in
/// ascending column order).
std::vector<Vec> nullspace(const Matrix& m);

/// One exact solution of m x = rhs with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<Vec> solve_linear(const Matrix& m, const Vec& rhs);

/// Kronecker product with index convention (i*rows(b)+k, j*cols(b)+l).
Matrix kron(const Matrix& a, const Matrix& b);

/// Exact inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

} // namespace grouptrace
