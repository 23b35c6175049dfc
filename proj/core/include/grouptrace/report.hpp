#pragma once

#include "grouptrace/blocks.hpp"
#include "grouptrace/descriptor.hpp"

namespace grouptrace {

/// One analysed comodule: its character, invariant dimension and, when the
/// integral exists, the integral of the character (which must equal the
/// invariant dimension read in the field).
struct ComoduleRecord {
    std::size_t dim = 0;
    std::vector<std::string> character;
    std::size_t invariants_dim = 0;
    std::optional<std::string> integral_of_character;
    std::optional<bool> integral_matches_invariants;
};

/// Structured result of one CLI analysis. Scalars are serialized as exact
/// strings. Reports with the same input are byte-identical.
struct AnalysisReport {
    std::string command;
    std::string descriptor; // canonical echo of the input descriptor
    std::string field;
    std::size_t dim = 0;

    std::optional<bool> reductive;
    std::optional<std::size_t> gram_rank;
    std::vector<std::string> criteria_equivalent;
    std::string criteria_note;

    std::optional<std::vector<std::vector<std::string>>> gram; // full matrix (gram command)

    std::optional<std::size_t> integral_space_dim;
    std::optional<bool> integral_present;
    std::optional<std::vector<std::string>> integral;

    std::optional<std::string> parseval; // "pass" / "fail" / "skipped"

    std::optional<std::string> blocks_status; // "computed" / "unsupported over Q" / "not semisimple"
    std::optional<std::vector<std::size_t>> block_dims;
    std::optional<bool> dual_group_discrete;

    std::optional<std::vector<std::string>> fourier_input;
    std::optional<std::vector<std::string>> fourier_output;

    std::vector<ComoduleRecord> comodules;
};

std::string report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

/// reductive <=> integral present <=> parseval "pass" (whenever the fields
/// involved are populated). Violations indicate a library bug.
bool report_is_consistent(const AnalysisReport& r);

AnalysisReport analyze_check(const FiniteHopfAlgebra& A, const std::string& descriptor_echo);
AnalysisReport analyze_gram(const FiniteHopfAlgebra& A, const std::string& descriptor_echo);
AnalysisReport analyze_integral(const FiniteHopfAlgebra& A, const std::string& descriptor_echo);
AnalysisReport analyze_fourier(const FiniteHopfAlgebra& A, const std::string& descriptor_echo,
                               const Vec& element);
AnalysisReport analyze_blocks(const FiniteHopfAlgebra& A, const std::string& descriptor_echo);
AnalysisReport analyze_chars(const FiniteHopfAlgebra& A, const std::string& descriptor_echo,
                             const Comodule& V);

/// Report for a diagonalizable group Spec K[M]: always reductive; includes
/// the normal form of M, the integral, and an exact polarity/Fourier
/// round-trip check on a deterministic family of functionals.
struct DiagReport {
    std::string field;
    std::size_t free_rank = 0;
    std::vector<std::uint64_t> torsion;
    bool reductive = true;
    std::string integral; // description of w_G
    bool parseval_roundtrip = false;
    bool dual_group_discrete = true;
};

DiagReport analyze_diag(const DiagDescriptor& d, const Field& field);
std::string diag_report_to_json(const DiagReport& r);
std::string diag_report_to_text(const DiagReport& r);

/// Parses an element of A for the fourier command: a JSON array of scalar
/// strings (or integers) of length dim.
Vec parse_element(const FiniteHopfAlgebra& A, const std::string& json_text);

} // namespace grouptrace
