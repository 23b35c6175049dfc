#include "grouptrace/report.hpp"

#include <json.hpp>

namespace grouptrace {

using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> tagged(const Vec& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& s : v)
        out.push_back(s.str_tagged());
    return out;
}

std::vector<std::vector<std::string>> tagged_rows(const Matrix& m) {
    std::vector<std::vector<std::string>> out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(tagged(m.row(i)));
    return out;
}

AnalysisReport base_report(const std::string& command, const FiniteHopfAlgebra& A,
                           const std::string& descriptor_echo) {
    AnalysisReport r;
    r.command = command;
    r.descriptor = descriptor_echo;
    r.field = A.field.name();
    r.dim = A.dim;
    return r;
}

void fill_reductivity(AnalysisReport& r, const FiniteHopfAlgebra& A) {
    const ReductivityDecision d = is_linearly_reductive(A);
    r.reductive = d.reductive;
    r.gram_rank = d.gram_rank;
    r.criteria_equivalent = d.criteria_checked;
    r.criteria_note = d.note;
}

void fill_integral(AnalysisReport& r, const FiniteHopfAlgebra& A) {
    const IntegralResult res = invariant_integral(A);
    r.integral_space_dim = res.integral_space_dim;
    r.integral_present = res.normalized.has_value();
    if (res.normalized)
        r.integral = tagged(*res.normalized);
}

void fill_blocks(AnalysisReport& r, const FiniteHopfAlgebra& A) {
    if (A.field.is_rationals()) {
        r.blocks_status = "unsupported over Q";
        return;
    }
    const ConvolutionAlgebra C = convolution_algebra(A);
    if (!separability_oracle(C)) {
        r.blocks_status = "not semisimple";
        r.dual_group_discrete = false;
        return;
    }
    // discreteness only needs separability; the eigenvalue scan cap can still
    // keep the explicit splitting out of reach
    r.dual_group_discrete = true;
    try {
        const BlockDecomposition b = split_center(C);
        r.blocks_status = "computed";
        r.block_dims = b.block_dims;
    } catch (const UnsupportedError&) {
        r.blocks_status = "splitting cap exceeded";
    }
}

} // namespace

AnalysisReport analyze_check(const FiniteHopfAlgebra& A, const std::string& descriptor_echo) {
    AnalysisReport r = base_report("check", A, descriptor_echo);
    fill_reductivity(r, A);
    fill_integral(r, A);
    if (*r.reductive) {
        const ParsevalReport p = verify_parseval(A);
        r.parseval = p.both() ? "pass" : "fail";
    } else {
        r.parseval = "skipped";
    }
    fill_blocks(r, A);
    return r;
}

AnalysisReport analyze_gram(const FiniteHopfAlgebra& A, const std::string& descriptor_echo) {
    AnalysisReport r = base_report("gram", A, descriptor_echo);
    const ConvolutionAlgebra C = convolution_algebra(A);
    const GramMatrix G = trace_form_gram(C);
    r.gram = tagged_rows(G.entries);
    r.gram_rank = rank(G.entries);
    r.reductive = *r.gram_rank == A.dim;
    return r;
}

AnalysisReport analyze_integral(const FiniteHopfAlgebra& A, const std::string& descriptor_echo) {
    AnalysisReport r = base_report("integral", A, descriptor_echo);
    fill_integral(r, A);
    return r;
}

AnalysisReport analyze_fourier(const FiniteHopfAlgebra& A, const std::string& descriptor_echo,
                               const Vec& element) {
    AnalysisReport r = base_report("fourier", A, descriptor_echo);
    r.fourier_input = tagged(element);
    r.fourier_output = tagged(fourier(A, element)); // throws NotReductiveError when undefined
    r.reductive = true;
    return r;
}

AnalysisReport analyze_blocks(const FiniteHopfAlgebra& A, const std::string& descriptor_echo) {
    AnalysisReport r = base_report("blocks", A, descriptor_echo);
    if (A.field.is_rationals()) {
        // splitting needs rational polynomial factorization; report the center
        // dimension only, which is still well-defined
        throw UnsupportedError("block splitting is unsupported over Q; center dimension " +
                               std::to_string(center(convolution_algebra(A)).size()));
    }
    fill_blocks(r, A);
    return r;
}

AnalysisReport analyze_chars(const FiniteHopfAlgebra& A, const std::string& descriptor_echo,
                             const Comodule& V) {
    AnalysisReport r = base_report("chars", A, descriptor_echo);
    fill_reductivity(r, A);
    fill_integral(r, A);

    ComoduleRecord rec;
    rec.dim = V.dim;
    const Vec chi = character(V);
    rec.character = tagged(chi);
    rec.invariants_dim = invariants_dim(V);
    if (r.integral_present && *r.integral_present) {
        const IntegralResult res = invariant_integral(A);
        const Scalar pairing = dot(*res.normalized, chi); // w_G(chi_V)
        rec.integral_of_character = pairing.str_tagged();
        rec.integral_matches_invariants =
            pairing == Scalar::of_int(A.field, static_cast<long long>(rec.invariants_dim));
    }
    r.comodules.push_back(std::move(rec));
    return r;
}

bool report_is_consistent(const AnalysisReport& r) {
    if (r.reductive && r.integral_present && *r.reductive != *r.integral_present)
        return false;
    if (r.reductive && r.parseval) {
        if (*r.reductive && *r.parseval != "pass")
            return false;
        if (!*r.reductive && *r.parseval != "skipped")
            return false;
    }
    if (r.reductive && r.gram_rank)
        if (*r.reductive != (*r.gram_rank == r.dim))
            return false;
    return true;
}

namespace {

json to_json_object(const AnalysisReport& r) {
    json j;
    j["command"] = r.command;
    j["descriptor"] = json::parse(r.descriptor);
    j["field"] = r.field;
    j["dim"] = r.dim;
    if (r.reductive)
        j["reductive"] = *r.reductive;
    if (r.gram_rank)
        j["gram_rank"] = *r.gram_rank;
    if (!r.criteria_equivalent.empty()) {
        j["criteria_equivalent"] = r.criteria_equivalent;
        j["criteria_note"] = r.criteria_note;
    }
    if (r.gram)
        j["gram"] = *r.gram;
    if (r.integral_space_dim)
        j["integral_space_dim"] = *r.integral_space_dim;
    if (r.integral_present) {
        j["integral_present"] = *r.integral_present;
        if (r.integral)
            j["integral"] = *r.integral;
    }
    if (r.parseval)
        j["parseval"] = *r.parseval;
    if (r.blocks_status) {
        j["blocks"] = *r.blocks_status;
        if (r.block_dims)
            j["block_dims"] = *r.block_dims;
    }
    if (r.dual_group_discrete)
        j["dual_group_discrete"] = *r.dual_group_discrete;
    if (r.fourier_input) {
        j["fourier_input"] = *r.fourier_input;
        j["fourier_output"] = *r.fourier_output;
    }
    if (!r.comodules.empty()) {
        json arr = json::array();
        for (const auto& c : r.comodules) {
            json cj;
            cj["dim"] = c.dim;
            cj["character"] = c.character;
            cj["invariants_dim"] = c.invariants_dim;
            if (c.integral_of_character) {
                cj["integral_of_character"] = *c.integral_of_character;
                cj["integral_matches_invariants"] = *c.integral_matches_invariants;
            }
            arr.push_back(std::move(cj));
        }
        j["comodules"] = std::move(arr);
    }
    return j;
}

} // namespace

std::string report_to_json(const AnalysisReport& r) { return to_json_object(r).dump(2) + "\n"; }

std::string report_to_text(const AnalysisReport& r) {
    std::string s;
    s += "command:   " + r.command + "\n";
    s += "field:     " + r.field + "\n";
    s += "dim:       " + std::to_string(r.dim) + "\n";
    if (r.reductive)
        s += std::string("reductive: ") + (*r.reductive ? "yes" : "no") + "\n";
    if (r.gram_rank)
        s += "gram rank: " + std::to_string(*r.gram_rank) + " of " + std::to_string(r.dim) + "\n";
    if (r.gram) {
        s += "gram matrix:\n";
        for (const auto& row : *r.gram) {
            s += "  [";
            for (std::size_t i = 0; i < row.size(); ++i)
                s += (i ? ", " : "") + row[i];
            s += "]\n";
        }
    }
    if (r.integral_present) {
        if (*r.integral_present) {
            s += "integral:  [";
            for (std::size_t i = 0; i < r.integral->size(); ++i)
                s += (i ? ", " : "") + (*r.integral)[i];
            s += "]\n";
        } else {
            s += "integral:  none (not normalizable)\n";
        }
    }
    if (r.parseval)
        s += "parseval:  " + *r.parseval + "\n";
    if (r.blocks_status) {
        s += "blocks:    " + *r.blocks_status;
        if (r.block_dims) {
            s += " [";
            for (std::size_t i = 0; i < r.block_dims->size(); ++i)
                s += (i ? ", " : "") + std::to_string((*r.block_dims)[i]);
            s += "]";
        }
        s += "\n";
    }
    if (r.dual_group_discrete)
        s += std::string("dual group discrete: ") + (*r.dual_group_discrete ? "yes" : "no") + "\n";
    if (r.fourier_output) {
        s += "fourier:   [";
        for (std::size_t i = 0; i < r.fourier_output->size(); ++i)
            s += (i ? ", " : "") + (*r.fourier_output)[i];
        s += "]\n";
    }
    for (const auto& c : r.comodules) {
        s += "comodule dim " + std::to_string(c.dim) + ":\n";
        s += "  character: [";
        for (std::size_t i = 0; i < c.character.size(); ++i)
            s += (i ? ", " : "") + c.character[i];
        s += "]\n";
        s += "  invariants dim: " + std::to_string(c.invariants_dim) + "\n";
        if (c.integral_of_character) {
            s += "  integral of character: " + *c.integral_of_character;
            s += *c.integral_matches_invariants ? " (matches)\n" : " (MISMATCH)\n";
        }
    }
    return s;
}

DiagReport analyze_diag(const DiagDescriptor& d, const Field& field) {
    const FinGenAbelianGroup g(d.free_rank, d.torsion);
    DiagReport r;
    r.field = field.name();
    r.free_rank = g.free_rank();
    r.torsion = g.torsion();
    r.reductive = true; // the trace form is diagonal with unit entries
    r.integral = "indicator of the identity character";

    // deterministic polarity/Fourier round trip on a small functional family
    bool ok = true;
    const std::size_t len = g.tuple_length();
    for (int trial = 0; trial < 8 && ok; ++trial) {
        FinSupportFunctional w = zero_functional(g, field);
        for (int t = 0; t < 3; ++t) {
            FinGenAbelianGroup::Element m(len, 0);
            for (std::size_t i = 0; i < len; ++i)
                m[i] = (trial * 7 + t * 3 + static_cast<int>(i)) % 5 - 2;
            w.set(m, Scalar::of_int(field, trial + t + 1));
        }
        const FinSupportFunctional back = diag_fourier(diag_phi(w));
        ok = back.support == w.support;
    }
    r.parseval_roundtrip = ok;
    r.dual_group_discrete = true; // every character is a one-dimensional block
    return r;
}

std::string diag_report_to_json(const DiagReport& r) {
    json j;
    j["command"] = "diag";
    j["field"] = r.field;
    j["free_rank"] = r.free_rank;
    j["torsion"] = r.torsion;
    j["reductive"] = r.reductive;
    j["integral"] = r.integral;
    j["parseval_roundtrip"] = r.parseval_roundtrip ? "pass" : "fail";
    j["dual_group_discrete"] = r.dual_group_discrete;
    return j.dump(2) + "\n";
}

std::string diag_report_to_text(const DiagReport& r) {
    std::string s;
    s += "command:   diag\n";
    s += "field:     " + r.field + "\n";
    s += "group:     Z^" + std::to_string(r.free_rank);
    for (auto d : r.torsion)
        s += " x Z/" + std::to_string(d);
    s += "\n";
    s += std::string("reductive: ") + (r.reductive ? "yes" : "no") + "\n";
    s += "integral:  " + r.integral + "\n";
    s += std::string("parseval round trip: ") + (r.parseval_roundtrip ? "pass" : "fail") + "\n";
    s += std::string("dual group discrete: ") + (r.dual_group_discrete ? "yes" : "no") + "\n";
    return s;
}

Vec parse_element(const FiniteHopfAlgebra& A, const std::string& json_text) {
    json j = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_array())
        throw ParseError("element must be a JSON array of scalars");
    if (j.size() != A.dim)
        throw ParseError("element has length " + std::to_string(j.size()) +
                         ", algebra has dimension " + std::to_string(A.dim));
    Vec v = zero_vec(A.field, A.dim);
    for (std::size_t i = 0; i < A.dim; ++i) {
        if (j[i].is_string())
            v[i] = Scalar::parse(A.field, j[i].get<std::string>());
        else if (j[i].is_number_integer())
            v[i] = Scalar::of_int(A.field, j[i].get<long long>());
        else
            throw ParseError("element entries must be scalar strings or integers");
    }
    return v;
}

} // namespace grouptrace
