#pragma once

#include "grouptrace/hopf.hpp"

namespace grouptrace {

/// The dual algebra A* of a finite-dimensional Hopf algebra A, in the dual
/// basis w_i = e_i*. The product is convolution: (w w')(a) = (w (x) w')(Delta a),
/// so the structure constants are the comultiplication tensor read sideways:
///
///   w_i w_j = sum_k c(i,j,k) w_k   with   c(i,j,k) = comult_A(k,i,j).
///
/// For finite-dimensional A every functional generates a finite-dimensional
/// two-sided ideal, so this is the whole algebra the trace form lives on.
struct ConvolutionAlgebra {
    const FiniteHopfAlgebra* source; // non-owning; outlives the algebra
    std::size_t dim;
    Tensor3 mult;
    Vec unit; // equals the counit of A

    Vec multiply(const Vec& a, const Vec& b) const;
};

ConvolutionAlgebra convolution_algebra(const FiniteHopfAlgebra& A);

/// Matrix of w' -> w w' in the dual basis.
Matrix left_mult_matrix(const ConvolutionAlgebra& C, const Vec& w);
/// Matrix of w' -> w' w.
Matrix right_mult_matrix(const ConvolutionAlgebra& C, const Vec& w);

/// The trace form <w_i, w_j> = tr(w_i w_j), as a symmetric matrix: entry
/// (i,j) is the trace of multiplication by w_i w_j on all of A*.
struct GramMatrix {
    const ConvolutionAlgebra* algebra;
    Matrix entries;
};

GramMatrix trace_form_gram(const ConvolutionAlgebra& C);

/// phi: A* -> A, phi(w~) = <-, w~> under the identification A** = A.
/// Coordinates: Gram * w~.
Vec polarity_phi(const ConvolutionAlgebra& C, const GramMatrix& G, const Vec& wt);
Vec polarity_phi(const ConvolutionAlgebra& C, const Vec& wt);

/// varphi: A* -> (A*)^dual, varphi(w) = <w, ->; returned as the vector of
/// values <w, w_j>. Its matrix is the transpose of the matrix of phi.
Vec polarity_varphi(const ConvolutionAlgebra& C, const GramMatrix& G, const Vec& w);
Vec polarity_varphi(const ConvolutionAlgebra& C, const Vec& w);

/// The two A*-module structures on functionals f on A* (coordinates = values
/// on the dual basis): (w . f)(u) = f(u w) and (f . w)(u) = f(w u).
/// Elements of A act as such functionals through evaluation, so these also
/// give the dual bimodule structure on A.
Vec dual_left_action(const ConvolutionAlgebra& C, const Vec& w, const Vec& f);
Vec dual_right_action(const ConvolutionAlgebra& C, const Vec& f, const Vec& w);

/// Outcome of the linear-reductivity decision. For finite-dimensional A the
/// three textbook formulations of non-degeneracy (phi an isomorphism, varphi
/// injective, phi injective with dense image) are all the same full-rank
/// condition on the Gram matrix; the record lists them rather than
/// re-deriving each.
struct ReductivityDecision {
    bool reductive;
    std::size_t gram_rank;
    std::size_t dim;
    std::vector<std::string> criteria_checked;
    std::string note;
};

ReductivityDecision is_linearly_reductive(const FiniteHopfAlgebra& A);

/// Independent semisimplicity certificate: searches for a separability
/// element e in A* (x) A* with  m(e) = 1  and  (x (x) 1) e = (1 (x) x) e for
/// every basis x, as one exact linear feasibility problem in dim^2 unknowns.
/// Over Q and F_p (perfect fields) feasibility is equivalent to
/// semisimplicity of A*. This never looks at the trace form.
bool separability_oracle(const ConvolutionAlgebra& C);

} // namespace grouptrace
