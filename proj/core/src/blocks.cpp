#include "grouptrace/blocks.hpp"

namespace grouptrace {

std::vector<Vec> center(const ConvolutionAlgebra& C) {
    const std::size_t n = C.dim;
    const Field& f = C.mult.field();
    // [x, w_j]_k = sum_i x_i (c(i,j,k) - c(j,i,k)) = 0 for all j, k
    Matrix system(f, n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                system.at(j * n + k, i) = C.mult.at(i, j, k) - C.mult.at(j, i, k);
    return nullspace(system);
}

namespace {

// x^e by binary powering in the dual algebra.
Vec power(const ConvolutionAlgebra& C, Vec x, std::uint64_t e, const Vec& one) {
    Vec acc = one;
    while (e > 0) {
        if (e & 1)
            acc = C.multiply(acc, x);
        e >>= 1;
        if (e > 0)
            x = C.multiply(x, x);
    }
    return acc;
}

struct FixedSubalgebra {
    std::vector<Vec> basis; // of { x in Z : x^p = x }, in A* coordinates
};

// The p-power map is additive on the commutative center in characteristic p
// and fixes F_p, so it is a linear operator there; its fixed space is the
// F_p-span of the primitive central idempotents.
FixedSubalgebra berlekamp_fixed_space(const ConvolutionAlgebra& C) {
    const Field& f = C.mult.field();
    const std::uint64_t p = f.characteristic();
    const std::vector<Vec> z = center(C);
    const std::size_t m = z.size();

    const Matrix zmat = Matrix::from_columns(f, C.dim, z);
    Matrix frob_minus_id(f, m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec zp = power(C, z[i], p, C.unit);
        const auto coords = solve_linear(zmat, zp);
        if (!coords)
            throw StructureError("center is not closed under the p-power map; "
                                 "the structure constants are corrupt");
        for (std::size_t r = 0; r < m; ++r) {
            frob_minus_id.at(r, i) = (*coords)[r];
            if (r == i)
                frob_minus_id.at(r, i) -= Scalar::one(f);
        }
    }

    FixedSubalgebra out;
    for (const Vec& coeff : nullspace(frob_minus_id))
        out.basis.push_back(zmat.apply(coeff));
    return out;
}

// is y = c * f for some scalar c (c = 0 allowed)?
bool proportional(const Vec& y, const Vec& f_vec) {
    const Field& f = y.front().field();
    Scalar ratio = Scalar::zero(f);
    bool have_ratio = false;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (f_vec[i].is_zero()) {
            if (!y[i].is_zero())
                return false;
            continue;
        }
        const Scalar r = y[i] / f_vec[i];
        if (!have_ratio) {
            ratio = r;
            have_ratio = true;
        } else if (r != ratio) {
            return false;
        }
    }
    return true;
}

// Minimal polynomial of y inside the unital subalgebra with unit f_idem,
// returned as monic coefficients c_0 + c_1 t + ... + t^deg.
Vec minimal_polynomial(const ConvolutionAlgebra& C, const Vec& y, const Vec& f_idem) {
    const Field& f = C.mult.field();
    std::vector<Vec> powers = {f_idem};
    for (;;) {
        const Matrix pmat = Matrix::from_columns(f, C.dim, powers);
        const Vec next = C.multiply(powers.back(), y);
        if (auto coords = solve_linear(pmat, next)) {
            Vec coeffs = *coords;
            for (auto& c : coeffs)
                c = -c;
            coeffs.push_back(Scalar::one(f)); // monic leading term
            return coeffs;
        }
        powers.push_back(next);
        if (powers.size() > C.dim + 1)
            throw StructureError("no minimal polynomial found; corrupt algebra data");
    }
}

std::vector<std::uint64_t> roots_by_scanning(const Vec& poly, const Field& f) {
    const std::uint64_t p = f.characteristic();
    std::vector<std::uint64_t> roots;
    for (std::uint64_t lambda = 0; lambda < p; ++lambda) {
        const Scalar x = Scalar::of_residue(f, lambda);
        Scalar value = Scalar::zero(f);
        for (std::size_t i = poly.size(); i-- > 0;)
            value = value * x + poly[i];
        if (value.is_zero())
            roots.push_back(lambda);
    }
    return roots;
}

void split_recursive(const ConvolutionAlgebra& C, const FixedSubalgebra& fixed,
                     const Vec& f_idem, std::vector<Vec>& out) {
    const Field& f = C.mult.field();

    // lowest-index fixed basis vector that separates something inside f_idem
    for (const Vec& x : fixed.basis) {
        const Vec y = C.multiply(x, f_idem);
        if (proportional(y, f_idem))
            continue;

        const Vec minpoly = minimal_polynomial(C, y, f_idem);
        const auto roots = roots_by_scanning(minpoly, f);
        if (roots.size() < 2)
            throw StructureError("separating element with fewer than two eigenvalues");

        for (std::uint64_t lambda : roots) {
            // Lagrange idempotent for this eigenvalue
            Vec e = f_idem;
            for (std::uint64_t mu : roots) {
                if (mu == lambda)
                    continue;
                const Scalar denom =
                    Scalar::of_residue(f, lambda) - Scalar::of_residue(f, mu);
                Vec factor = sub(y, scale(Scalar::of_residue(f, mu), f_idem));
                e = scale(denom.inverse(), C.multiply(e, factor));
            }
            split_recursive(C, fixed, e, out);
        }
        return;
    }
    out.push_back(f_idem);
}

void require_splittable_field(const Field& f) {
    if (f.is_rationals())
        throw UnsupportedError(
            "block splitting over Q would require rational polynomial factorization "
            "and is not supported; only the center dimension is reported over Q");
    if (f.characteristic() > kSplitScanCap)
        throw UnsupportedError("block splitting scans F_p for eigenvalues and is "
                               "capped at p <= " + std::to_string(kSplitScanCap));
}

} // namespace

std::vector<Vec> split_under(const ConvolutionAlgebra& C, const Vec& idempotent) {
    require_splittable_field(C.mult.field());
    const FixedSubalgebra fixed = berlekamp_fixed_space(C);
    std::vector<Vec> out;
    split_recursive(C, fixed, idempotent, out);
    return out;
}

BlockDecomposition split_center(const ConvolutionAlgebra& C) {
    require_splittable_field(C.mult.field());
    if (!separability_oracle(C))
        throw NotSemisimpleError(
            "the dual algebra is not semisimple; splitting would describe the blocks "
            "of its semisimple quotient instead and is refused");

    BlockDecomposition out{{}, {}, C.mult.field()};
    out.idempotents = split_under(C, C.unit);
    std::size_t total = 0;
    for (const Vec& e : out.idempotents) {
        const std::size_t d = rank(left_mult_matrix(C, e));
        out.block_dims.push_back(d);
        total += d;
    }
    if (total != C.dim)
        throw StructureError("block dimensions do not sum to the algebra dimension");
    return out;
}

Matrix pairing_of_idempotents(const BlockDecomposition& B, const GramMatrix& G) {
    const std::size_t b = B.idempotents.size();
    if (b == 0)
        throw DimensionError("empty block decomposition");
    if (G.entries.rows() != B.idempotents.front().size())
        throw DimensionError("Gram matrix and decomposition sizes do not match");
    if (G.entries.field() != B.field)
        throw FieldMismatchError("Gram matrix and decomposition over different fields");

    Matrix pairing(B.field, b, b);
    for (std::size_t j = 0; j < b; ++j) {
        const Vec gj = G.entries.apply(B.idempotents[j]);
        for (std::size_t i = 0; i < b; ++i)
            pairing.at(i, j) = dot(B.idempotents[i], gj);
    }
    return pairing;
}

DualGroupSummary dual_group(const FiniteHopfAlgebra& A) {
    if (!A.field.is_prime_field())
        throw UnsupportedError("the dual group summary is computed over prime fields only");
    const ConvolutionAlgebra C = convolution_algebra(A);
    // In finite dimension the finite dual is the whole dual algebra, so the
    // density half of discreteness holds automatically; separability decides.
    if (!separability_oracle(C))
        return {false, 0, {}};
    const BlockDecomposition blocks = split_center(C);
    return {true, blocks.idempotents.size(), blocks.block_dims};
}

} // namespace grouptrace
