#pragma once

#include "grouptrace/convolution.hpp"

namespace grouptrace {

/// Central primitive idempotents of a semisimple dual algebra over F_p and
/// the dimensions of the blocks they cut out. The i-th block is A* 1_i.
struct BlockDecomposition {
    std::vector<Vec> idempotents;
    std::vector<std::size_t> block_dims;
    Field field;
};

/// Basis of the center Z(A*): exact nullspace of the stacked commutator
/// system [x, w_j] = 0 over all dual basis vectors.
std::vector<Vec> center(const ConvolutionAlgebra& C);

/// Characteristic cap for the eigenvalue scan in split_center; the scan is
/// linear in p.
inline constexpr std::uint64_t kSplitScanCap = 10'000;

/// Decomposes a semisimple dual algebra over F_p into its blocks.
///
/// Method: the p-power map is linear on the commutative center, and its
/// fixed subalgebra { x in Z : x^p = x } is spanned by the primitive central
/// idempotents. The splitting picks the lowest-index fixed basis vector that
/// is not proportional to the current idempotent, finds the eigenvalues of
/// multiplication by it (all in F_p; roots located by scanning), splits off
/// one idempotent per eigenvalue by Lagrange interpolation and recurses
/// until no fixed vector separates anything.
///
/// Throws UnsupportedError over Q or when p exceeds the scan cap, and
/// NotSemisimpleError when the separability certificate fails (the blocks of
/// A*/rad would not describe A* itself, so the request is refused).
BlockDecomposition split_center(const ConvolutionAlgebra& C);

/// The same recursion started inside the block cut out by an idempotent;
/// a primitive idempotent yields exactly itself.
std::vector<Vec> split_under(const ConvolutionAlgebra& C, const Vec& idempotent);

/// Matrix of pairings <1_i, 1_j> through the Gram matrix of the same
/// algebra; equals diag(block dims mod p) when the decomposition is correct.
Matrix pairing_of_idempotents(const BlockDecomposition& B, const GramMatrix& G);

/// The dual group of A over F_p: discrete when the (automatically dense)
/// finite dual is separable, in which case its points are enumerated by the
/// blocks of A*.
struct DualGroupSummary {
    bool discrete;
    std::size_t num_blocks;             // 0 when not discrete
    std::vector<std::size_t> block_dims;
};

DualGroupSummary dual_group(const FiniteHopfAlgebra& A);

} // namespace grouptrace
