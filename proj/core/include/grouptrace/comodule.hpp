#pragma once

#include "grouptrace/integral.hpp"

namespace grouptrace {

/// A finite-dimensional linear representation of the group scheme, stored as
/// a right A-comodule: the coaction rho: V -> V (x) A with
///
///   rho(v_i) = sum_{j,k} coaction(i,j,k) v_j (x) e_k.
///
/// Every comodule is an A*-module through w . v = (id (x) w)(rho(v)); the
/// coaction is the stored datum and the module action is always derived.
struct Comodule {
    const FiniteHopfAlgebra* algebra; // non-owning
    std::size_t dim;
    Tensor3 coaction;
};

struct ComoduleReport {
    bool counit_law;
    bool coassociativity_law;
    bool all_pass() const { return counit_law && coassociativity_law; }
    std::string summary() const;
};

ComoduleReport verify_comodule(const Comodule& V);

/// Verifies eagerly; throws AxiomError when a law fails.
Comodule checked_comodule(Comodule raw);

/// w . v for w in A* (dual-basis coordinates) and v in V.
Vec astar_action(const Comodule& V, const Vec& w, const Vec& v);

/// Matrix of v -> w . v.
Matrix astar_action_matrix(const Comodule& V, const Vec& w);

/// The character chi_V in A: the partial trace of the coaction tensor.
Vec character(const Comodule& V);

Comodule direct_sum(const Comodule& V, const Comodule& W);
Comodule tensor_product(const Comodule& V, const Comodule& W);

/// The dual representation, coaction twisted by the antipode; satisfies
/// chi_{V*} = S(chi_V).
Comodule dual_comodule(const Comodule& V);

/// dim { v : rho(v) = v (x) 1 }. Uses the rank of the Reynolds projection
/// when the group is reductive and a direct exact solve otherwise.
std::size_t invariants_dim(const Comodule& V);

/// Always the direct exact solve of rho(v) = v (x) 1; the reductive path of
/// invariants_dim must agree with this.
std::size_t invariants_dim_direct(const Comodule& V);

/// V = A with rho = Delta.
Comodule regular_comodule(const FiniteHopfAlgebra& A);

/// K with the trivial coaction v -> v (x) 1.
Comodule trivial_comodule(const FiniteHopfAlgebra& A, std::size_t dim = 1);

/// One-dimensional comodule on a grouplike character chi (Delta chi = chi (x) chi,
/// eps(chi) = 1): rho(v) = v (x) chi.
Comodule line_comodule(const FiniteHopfAlgebra& A, const Vec& grouplike);

/// Reynolds operator w_G . v; the projection onto the invariants.
/// Throws NotReductiveError when there is no invariant integral.
Vec reynolds(const FiniteHopfAlgebra& A, const Comodule& V, const Vec& v);
Matrix reynolds_matrix(const FiniteHopfAlgebra& A, const Comodule& V);

} // namespace grouptrace
