#include "grouptrace/integral.hpp"

namespace grouptrace {

std::vector<Vec> integral_space(const FiniteHopfAlgebra& A) {
    const ConvolutionAlgebra C = convolution_algebra(A);
    const std::size_t n = A.dim;
    const Field& f = A.field;

    // Invariance of lambda against the basis functional w_i reads
    //   w_i lambda = w_i(1) lambda   and   lambda w_i = w_i(1) lambda,
    // where w_i(1) is the i-th coordinate of the unit of A.
    Matrix stacked(f, 2 * n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec wi = unit_vec(f, n, i);
        const Matrix L = left_mult_matrix(C, wi);
        const Matrix R = right_mult_matrix(C, wi);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                Scalar l = L.at(r, c);
                Scalar rr = R.at(r, c);
                if (r == c) {
                    l -= A.unit[i];
                    rr -= A.unit[i];
                }
                stacked.at(i * n + r, c) = l;
                stacked.at(n * n + i * n + r, c) = rr;
            }
    }
    return nullspace(stacked);
}

IntegralResult invariant_integral(const FiniteHopfAlgebra& A) {
    const auto basis = integral_space(A);
    if (basis.size() != 1)
        throw StructureError(
            "invariant space has dimension " + std::to_string(basis.size()) +
            ", expected 1; the structure constants do not describe a Hopf algebra");

    const Vec& lambda = basis.front();
    const Scalar at_one = dot(lambda, A.unit); // lambda(1)
    if (at_one.is_zero())
        return {1, std::nullopt};
    return {1, scale(at_one.inverse(), lambda)};
}

Vec star_map(const FiniteHopfAlgebra& A, const Vec& a) { return A.antipode.apply(a); }

namespace {

Vec fourier_with(const FiniteHopfAlgebra& A, const Vec& wg, const Vec& a) {
    const Vec astar = star_map(A, a);
    Vec values = zero_vec(A.field, A.dim);
    for (std::size_t j = 0; j < A.dim; ++j)
        values[j] = dot(wg, A.multiply(astar, unit_vec(A.field, A.dim, j)));
    return values;
}

Vec require_integral(const FiniteHopfAlgebra& A) {
    const IntegralResult integral = invariant_integral(A);
    if (!integral.normalized)
        throw NotReductiveError("no invariant integral: the group scheme is not "
                                "linearly reductive, so the Fourier transform is undefined");
    return *integral.normalized;
}

} // namespace

Vec fourier(const FiniteHopfAlgebra& A, const Vec& a) {
    if (a.size() != A.dim)
        throw DimensionError("element length does not match algebra dimension");
    return fourier_with(A, require_integral(A), a);
}

Matrix fourier_matrix(const FiniteHopfAlgebra& A) {
    const Vec wg = require_integral(A);
    std::vector<Vec> cols;
    cols.reserve(A.dim);
    for (std::size_t j = 0; j < A.dim; ++j)
        cols.push_back(fourier_with(A, wg, unit_vec(A.field, A.dim, j)));
    return Matrix::from_columns(A.field, A.dim, cols);
}

ParsevalReport verify_parseval(const FiniteHopfAlgebra& A) {
    const ConvolutionAlgebra C = convolution_algebra(A);
    const Matrix phi = trace_form_gram(C).entries; // matrix of phi: dual coords -> A coords
    const Matrix F = fourier_matrix(A);            // throws when not reductive
    return {(F * phi).is_identity(), (phi * F).is_identity()};
}

} // namespace grouptrace
