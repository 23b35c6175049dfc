#pragma once

#include <string>
#include <vector>

#include "grouptrace/matrix.hpp"
#include "grouptrace/tensor.hpp"

namespace grouptrace {

struct AxiomCheck {
    std::string name;
    bool pass;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_pass() const;
    std::string summary() const;
};

/// A finite-dimensional commutative Hopf algebra A over an exact field,
/// given by structure constants in a fixed basis e_0..e_{n-1}:
///
///   mult(i,j,k):    e_i * e_j = sum_k mult(i,j,k) e_k
///   unit:           coordinates of 1 in A
///   comult(i,j,k):  Delta(e_i) = sum_{j,k} comult(i,j,k) e_j (x) e_k
///   counit[i]:      eps(e_i)
///   antipode:       column j holds the coordinates of S(e_j)
///
/// This is the coordinate ring of a finite group scheme; the axioms are
/// checkable exactly with verify_hopf_axioms.
struct FiniteHopfAlgebra {
    Field field;
    std::size_t dim;
    Tensor3 mult;
    Vec unit;
    Tensor3 comult;
    Vec counit;
    Matrix antipode;
    std::vector<std::string> labels; // optional basis names

    /// Product of two elements given in coordinates.
    Vec multiply(const Vec& a, const Vec& b) const;
    /// S applied to an element.
    Vec antipode_apply(const Vec& a) const;
    /// eps(a).
    Scalar counit_value(const Vec& a) const;
    /// Matrix of multiplication by a on A.
    Matrix mult_matrix(const Vec& a) const;
};

/// Checks all Hopf-algebra axioms (associativity, unit, commutativity,
/// coassociativity, counit, algebra-morphism compatibility of Delta and eps,
/// the antipode identity and S^2 = id) exactly on the structure tensors.
AxiomReport verify_hopf_axioms(const FiniteHopfAlgebra& A);

/// Verifies raw user-supplied structure constants eagerly; throws AxiomError
/// with the failed-check report unless every axiom passes.
FiniteHopfAlgebra checked_hopf(FiniteHopfAlgebra raw);

/// A finite group presented by its multiplication table: table[i][j] is the
/// index of the product of elements i and j. Construction validates
/// associativity, identity and inverses.
class GroupTable {
public:
    explicit GroupTable(std::vector<std::vector<std::size_t>> table);

    std::size_t order() const { return table_.size(); }
    std::size_t mul(std::size_t i, std::size_t j) const { return table_[i][j]; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t i) const { return inverse_[i]; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    static GroupTable cyclic(std::size_t n);
    static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
    static GroupTable symmetric3();

private:
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

/// A = K^G for a finite group G: indicator basis, pointwise product,
/// Delta(d_g) = sum_{ab=g} d_a (x) d_b, eps(d_g) = [g = e], S(d_g) = d_{g^-1}.
FiniteHopfAlgebra constant_group_scheme(const GroupTable& g, const Field& f);

/// mu_n = Spec K[x]/(x^n - 1): grouplike basis x^0..x^{n-1}.
FiniteHopfAlgebra mu_n(std::size_t n, const Field& f);

/// alpha_p = Spec K[x]/(x^p) in characteristic p: Delta(x) = x(x)1 + 1(x)x.
FiniteHopfAlgebra alpha_p(const Field& f);

/// Coordinate ring of the product group scheme; tensor-product structure
/// constants with the Kronecker index convention.
FiniteHopfAlgebra product(const FiniteHopfAlgebra& a, const FiniteHopfAlgebra& b);

bool is_cocommutative(const FiniteHopfAlgebra& A);

/// Dual Hopf algebra on the dual basis (requires cocommutativity so the dual
/// is again commutative): mult <-> comult transposed, unit <-> counit,
/// antipode transposed.
FiniteHopfAlgebra cartier_dual(const FiniteHopfAlgebra& A);

/// The same Hopf algebra written in the basis whose j-th vector has old
/// coordinates new_basis.column(j). Used by tests to compare structure
/// tensors across an explicit basis identification.
FiniteHopfAlgebra change_basis(const FiniteHopfAlgebra& A, const Matrix& new_basis);

} // namespace grouptrace
