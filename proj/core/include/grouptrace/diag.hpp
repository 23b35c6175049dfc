#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "grouptrace/matrix.hpp"

namespace grouptrace {

/// A finitely generated abelian character group M = Z^r x Z/d_1 x ... x Z/d_t
/// in invariant-factor normal form (d_1 | d_2 | ..., each >= 2); constructors
/// normalize arbitrary torsion lists. Elements are integer tuples with the
/// torsion coordinates reduced into [0, d_i).
///
/// Spec K[M] is the diagonalizable group scheme graded by M; the free rank 1
/// case is the multiplicative group and the torsion factors contribute
/// roots-of-unity components.
class FinGenAbelianGroup {
public:
    FinGenAbelianGroup(std::size_t free_rank, std::vector<std::uint64_t> torsion);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<std::uint64_t>& torsion() const { return torsion_; }
    std::size_t tuple_length() const { return free_rank_ + torsion_.size(); }

    using Element = std::vector<std::int64_t>;

    Element zero() const;
    Element reduce(Element e) const;
    Element add(const Element& a, const Element& b) const;
    Element negate(const Element& a) const;

    /// Finite iff the free rank is zero; order of the torsion part.
    bool is_finite() const { return free_rank_ == 0; }
    std::uint64_t torsion_order() const;

    /// All elements of a finite group, in lexicographic order.
    std::vector<Element> elements() const;

    friend bool operator==(const FinGenAbelianGroup& a, const FinGenAbelianGroup& b) {
        return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
    }

private:
    std::size_t free_rank_;
    std::vector<std::uint64_t> torsion_;
};

/// An element of the finite dual part: finitely many nonzero coordinates of
/// prod_M K. Stored sparsely; zero values are never kept.
struct FinSupportFunctional {
    FinGenAbelianGroup group;
    Field field;
    std::map<FinGenAbelianGroup::Element, Scalar> support;

    Scalar value_at(const FinGenAbelianGroup::Element& m) const;
    bool is_zero() const { return support.empty(); }
    void set(const FinGenAbelianGroup::Element& m, const Scalar& v);
};

FinSupportFunctional zero_functional(const FinGenAbelianGroup& g, const Field& f);
FinSupportFunctional indicator(const FinGenAbelianGroup& g,
                               const FinGenAbelianGroup::Element& m, const Scalar& v);
FinSupportFunctional add(const FinSupportFunctional& a, const FinSupportFunctional& b);

/// A full dual vector of one of the two representable shapes: a constant
/// value outside a finite override set. Finite-support vectors are the
/// base-0 case; the unit of the dual algebra is the constant-1 case.
struct DiagDualVector {
    FinGenAbelianGroup group;
    Field field;
    Scalar base; // value outside the overrides
    std::map<FinGenAbelianGroup::Element, Scalar> overrides;

    Scalar value_at(const FinGenAbelianGroup::Element& m) const;

    static DiagDualVector constant_one(const FinGenAbelianGroup& g, const Field& f);
    static DiagDualVector of(const FinSupportFunctional& w);
};

/// An element of the coordinate ring K[M]: a finite K-combination of the
/// monomials x^m.
struct LaurentElement {
    FinGenAbelianGroup group;
    Field field;
    std::map<FinGenAbelianGroup::Element, Scalar> coeffs;

    Scalar coeff_at(const FinGenAbelianGroup::Element& m) const;
    bool is_zero() const { return coeffs.empty(); }
    void set(const FinGenAbelianGroup::Element& m, const Scalar& v);
};

LaurentElement monomial(const FinGenAbelianGroup& g, const FinGenAbelianGroup::Element& m,
                        const Scalar& coeff);

/// Convolution of two finite-dual elements. The dual basis vectors of a
/// diagonalizable group are orthogonal idempotents, so the product is
/// pointwise on the supports.
FinSupportFunctional diag_convolve(const FinSupportFunctional& u,
                                   const FinSupportFunctional& v);

/// The trace pairing <w, w~>: every block is one-dimensional, so it is the
/// finite sum over the support of w~ of w(m) w~(m).
Scalar diag_trace_pair(const DiagDualVector& w, const FinSupportFunctional& wt);
Scalar diag_trace_pair(const FinSupportFunctional& w, const FinSupportFunctional& wt);

/// The polarity: coefficientwise transcription (a_m) -> sum a_m x^m.
LaurentElement diag_phi(const FinSupportFunctional& wt);

/// The invariant integral: the indicator of the identity character.
FinSupportFunctional diag_integral(const FinGenAbelianGroup& g, const Field& f);

/// The Fourier transform w(m) = coefficient of x^m; inverse of diag_phi.
/// Diagonalizable groups are always linearly reductive, so it is total.
FinSupportFunctional diag_fourier(const LaurentElement& a);

/// Surjectivity witness for the projection of the finite dual onto finitely
/// many coordinates: indicators mapping to the standard basis of K^coords.
std::vector<FinSupportFunctional>
density_witness(const FinGenAbelianGroup& g, const Field& f,
                const std::vector<FinGenAbelianGroup::Element>& coords);

} // namespace grouptrace
