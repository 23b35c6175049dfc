#pragma once

#include <memory>
#include <optional>

#include "grouptrace/comodule.hpp"
#include "grouptrace/diag.hpp"
#include "grouptrace/hopf.hpp"

namespace grouptrace {

/// Parsed form of the JSON group descriptor:
///
///   {"field": {"kind": "Q"} | {"kind": "Fp", "p": <int>},
///    "group": {"type": "constant", "table": [[...]]}
///           | {"type": "mu", "n": <int>}
///           | {"type": "alpha_p"}
///           | {"type": "product", "left": <group>, "right": <group>}
///           | {"type": "cartier_dual", "of": <group>}}
struct GroupNode {
    enum class Type { Constant, Mu, AlphaP, Product, CartierDual };
    Type type;
    std::vector<std::vector<std::size_t>> table;      // Constant
    std::size_t n = 0;                                // Mu
    std::shared_ptr<const GroupNode> left, right, of; // Product / CartierDual
};

struct GroupDescriptor {
    Field field;
    std::shared_ptr<const GroupNode> group;
};

GroupDescriptor parse_group_descriptor(const std::string& json_text);

/// The dimension of the coordinate ring the node would produce, computed
/// before any tensor is materialized so oversized requests can be refused
/// cheaply. For alpha_p the dimension is the field characteristic.
std::size_t descriptor_dim(const GroupNode& node, const Field& field);

/// Builds the coordinate ring. field_override replaces the descriptor's
/// field; the dimension guard throws UnsupportedError beyond max_dim.
FiniteHopfAlgebra build_hopf(const GroupDescriptor& desc,
                             std::optional<Field> field_override = std::nullopt,
                             std::size_t max_dim = 64);

/// Canonical serialization: parsing it back yields an equal descriptor.
std::string descriptor_to_json(const GroupDescriptor& desc);

/// Parsed form of {"type": "diag", "free_rank": r, "torsion": [d1, ...]}.
struct DiagDescriptor {
    std::size_t free_rank;
    std::vector<std::uint64_t> torsion;
};

DiagDescriptor parse_diag_descriptor(const std::string& json_text);

/// Comodule JSON: {"dim": v, "coaction": [[[scalar strings]]]} with
/// coaction[i][j][k] the coefficient of v_j (x) e_k in rho(v_i). Scalars are
/// strings: fractions over Q, residues (optionally "r mod p") over F_p.
/// The comodule laws are verified eagerly; failures throw AxiomError.
Comodule parse_comodule(const FiniteHopfAlgebra& A, const std::string& json_text);

} // namespace grouptrace
