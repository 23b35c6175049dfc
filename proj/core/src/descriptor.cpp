#include "grouptrace/descriptor.hpp"

#include <json.hpp>

namespace grouptrace {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw ParseError("malformed JSON");
    return j;
}

Field parse_field(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("field must be {\"kind\": \"Q\"} or {\"kind\": \"Fp\", \"p\": ...}");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "Q")
        return Field::rationals();
    if (kind == "Fp") {
        if (!j.contains("p") || !j["p"].is_number_unsigned())
            throw ParseError("prime field needs a positive integer \"p\"");
        try {
            return Field::prime_field(j["p"].get<std::uint64_t>());
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("unknown field kind '" + kind + "'");
}

std::shared_ptr<const GroupNode> parse_group(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError("group must be an object with a \"type\"");
    const std::string type = j["type"].get<std::string>();
    auto node = std::make_shared<GroupNode>();

    if (type == "constant") {
        node->type = GroupNode::Type::Constant;
        if (!j.contains("table") || !j["table"].is_array())
            throw ParseError("constant group needs a \"table\"");
        for (const auto& row : j["table"]) {
            if (!row.is_array())
                throw ParseError("table rows must be arrays");
            std::vector<std::size_t> r;
            for (const auto& v : row) {
                if (!v.is_number_unsigned())
                    throw ParseError("table entries must be nonnegative integers");
                r.push_back(v.get<std::size_t>());
            }
            node->table.push_back(std::move(r));
        }
    } else if (type == "mu") {
        node->type = GroupNode::Type::Mu;
        if (!j.contains("n") || !j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
            throw ParseError("mu needs a positive integer \"n\"");
        node->n = j["n"].get<std::size_t>();
    } else if (type == "alpha_p") {
        node->type = GroupNode::Type::AlphaP;
    } else if (type == "product") {
        node->type = GroupNode::Type::Product;
        if (!j.contains("left") || !j.contains("right"))
            throw ParseError("product needs \"left\" and \"right\"");
        node->left = parse_group(j["left"]);
        node->right = parse_group(j["right"]);
    } else if (type == "cartier_dual") {
        node->type = GroupNode::Type::CartierDual;
        if (!j.contains("of"))
            throw ParseError("cartier_dual needs \"of\"");
        node->of = parse_group(j["of"]);
    } else {
        throw ParseError("unknown group type '" + type + "'");
    }
    return node;
}

json group_to_json(const GroupNode& node) {
    json j;
    switch (node.type) {
    case GroupNode::Type::Constant:
        j["type"] = "constant";
        j["table"] = node.table;
        break;
    case GroupNode::Type::Mu:
        j["type"] = "mu";
        j["n"] = node.n;
        break;
    case GroupNode::Type::AlphaP:
        j["type"] = "alpha_p";
        break;
    case GroupNode::Type::Product:
        j["type"] = "product";
        j["left"] = group_to_json(*node.left);
        j["right"] = group_to_json(*node.right);
        break;
    case GroupNode::Type::CartierDual:
        j["type"] = "cartier_dual";
        j["of"] = group_to_json(*node.of);
        break;
    }
    return j;
}

FiniteHopfAlgebra build_node(const GroupNode& node, const Field& field) {
    switch (node.type) {
    case GroupNode::Type::Constant:
        return constant_group_scheme(GroupTable(node.table), field);
    case GroupNode::Type::Mu:
        return mu_n(node.n, field);
    case GroupNode::Type::AlphaP:
        if (!field.is_prime_field())
            throw UnsupportedError("alpha_p requires positive characteristic");
        return alpha_p(field);
    case GroupNode::Type::Product:
        return product(build_node(*node.left, field), build_node(*node.right, field));
    case GroupNode::Type::CartierDual:
        return cartier_dual(build_node(*node.of, field));
    }
    throw Error("unreachable");
}

} // namespace

std::size_t descriptor_dim(const GroupNode& node, const Field& field) {
    switch (node.type) {
    case GroupNode::Type::Constant:
        return node.table.size();
    case GroupNode::Type::Mu:
        return node.n;
    case GroupNode::Type::AlphaP:
        if (!field.is_prime_field())
            throw UnsupportedError("alpha_p requires positive characteristic");
        return static_cast<std::size_t>(field.characteristic());
    case GroupNode::Type::Product:
        return descriptor_dim(*node.left, field) * descriptor_dim(*node.right, field);
    case GroupNode::Type::CartierDual:
        return descriptor_dim(*node.of, field);
    }
    throw Error("unreachable");
}

GroupDescriptor parse_group_descriptor(const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_object() || !j.contains("field") || !j.contains("group"))
        throw ParseError("descriptor needs \"field\" and \"group\"");
    return {parse_field(j["field"]), parse_group(j["group"])};
}

FiniteHopfAlgebra build_hopf(const GroupDescriptor& desc,
                             std::optional<Field> field_override, std::size_t max_dim) {
    const Field field = field_override.value_or(desc.field);
    const std::size_t dim = descriptor_dim(*desc.group, field);
    if (dim == 0)
        throw ParseError("descriptor describes an empty coordinate ring");
    if (dim > max_dim)
        throw UnsupportedError("descriptor dimension " + std::to_string(dim) +
                               " exceeds the limit " + std::to_string(max_dim));
    return build_node(*desc.group, field);
}

std::string descriptor_to_json(const GroupDescriptor& desc) {
    json j;
    if (desc.field.is_rationals()) {
        j["field"] = {{"kind", "Q"}};
    } else {
        j["field"] = {{"kind", "Fp"}, {"p", desc.field.characteristic()}};
    }
    j["group"] = group_to_json(*desc.group);
    return j.dump();
}

DiagDescriptor parse_diag_descriptor(const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_object() || !j.contains("type") || j["type"] != "diag")
        throw ParseError("diag descriptor needs \"type\": \"diag\"");
    DiagDescriptor d{0, {}};
    if (j.contains("free_rank")) {
        if (!j["free_rank"].is_number_unsigned())
            throw ParseError("free_rank must be a nonnegative integer");
        d.free_rank = j["free_rank"].get<std::size_t>();
    }
    if (j.contains("torsion")) {
        if (!j["torsion"].is_array())
            throw ParseError("torsion must be an array");
        for (const auto& v : j["torsion"]) {
            if (!v.is_number_unsigned() || v.get<std::uint64_t>() < 2)
                throw ParseError("torsion factors must be integers >= 2");
            d.torsion.push_back(v.get<std::uint64_t>());
        }
    }
    return d;
}

Comodule parse_comodule(const FiniteHopfAlgebra& A, const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("coaction"))
        throw ParseError("comodule needs \"dim\" and \"coaction\"");
    if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
        throw ParseError("comodule dim must be a positive integer");
    const std::size_t v = j["dim"].get<std::size_t>();

    const json& co = j["coaction"];
    if (!co.is_array() || co.size() != v)
        throw ParseError("coaction must be a dim-sized array of dim x (algebra dim) tables");
    Tensor3 r(A.field, v, v, A.dim);
    for (std::size_t i = 0; i < v; ++i) {
        if (!co[i].is_array() || co[i].size() != v)
            throw ParseError("coaction[" + std::to_string(i) + "] has the wrong shape");
        for (std::size_t jj = 0; jj < v; ++jj) {
            if (!co[i][jj].is_array() || co[i][jj].size() != A.dim)
                throw ParseError("coaction[" + std::to_string(i) + "][" +
                                 std::to_string(jj) + "] has the wrong shape");
            for (std::size_t k = 0; k < A.dim; ++k) {
                const auto& cell = co[i][jj][k];
                if (cell.is_string())
                    r.at(i, jj, k) = Scalar::parse(A.field, cell.get<std::string>());
                else if (cell.is_number_integer())
                    r.at(i, jj, k) = Scalar::of_int(A.field, cell.get<long long>());
                else
                    throw ParseError("coaction entries must be scalar strings or integers");
            }
        }
    }
    return checked_comodule({&A, v, std::move(r)});
}

} // namespace grouptrace
