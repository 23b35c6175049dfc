#pragma once

#include <optional>

#include "grouptrace/convolution.hpp"

namespace grouptrace {

/// The space of two-sided invariant functionals and, when one can be
/// normalized, the invariant integral w_G with w_G(1) = 1.
struct IntegralResult {
    std::size_t integral_space_dim;
    std::optional<Vec> normalized; // w_G, present iff some invariant has nonzero value at 1
};

/// Basis of { lambda : w lambda = w(1) lambda = lambda w for every w },
/// computed as the exact nullspace of the stacked linear system built from
/// the left and right multiplication operators of every dual basis vector.
std::vector<Vec> integral_space(const FiniteHopfAlgebra& A);

/// Throws StructureError when the invariant space is not one-dimensional
/// (a finite-dimensional Hopf algebra always has a line of invariants, so
/// anything else means the input data is corrupt).
IntegralResult invariant_integral(const FiniteHopfAlgebra& A);

/// a -> S(a), the involution induced by inversion on the group.
Vec star_map(const FiniteHopfAlgebra& A, const Vec& a);

/// F(a) = w_G(a* . -) as a functional in dual-basis coordinates.
/// Throws NotReductiveError when there is no invariant integral.
Vec fourier(const FiniteHopfAlgebra& A, const Vec& a);

/// Columns are F(e_j).
Matrix fourier_matrix(const FiniteHopfAlgebra& A);

struct ParsevalReport {
    bool fourier_after_phi_is_identity;
    bool phi_after_fourier_is_identity;
    bool both() const { return fourier_after_phi_is_identity && phi_after_fourier_is_identity; }
};

/// Composes the Fourier matrix with the matrix of the polarity phi both ways
/// and compares with the identity exactly.
ParsevalReport verify_parseval(const FiniteHopfAlgebra& A);

} // namespace grouptrace
