// Command-line front end: reads JSON group descriptors, runs the analyses
// and emits deterministic reports.
//
// Exit codes: 0 analysis completed (whatever the mathematical verdict),
// 1 input/processing error, 2 structural axiom failure (with the axiom
// report on stderr), 3 unsupported request.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "grouptrace/report.hpp"

using namespace grouptrace;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// a literal JSON argument or, when a file of that name exists, its contents
std::string inline_or_file(const std::string& arg) {
    std::ifstream in(arg);
    if (in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

std::optional<Field> parse_field_flag(const std::string& flag) {
    if (flag.empty())
        return std::nullopt;
    if (flag == "q" || flag == "Q")
        return Field::rationals();
    if (flag.rfind("fp:", 0) == 0 || flag.rfind("Fp:", 0) == 0) {
        const std::string num = flag.substr(3);
        try {
            return Field::prime_field(std::stoull(num));
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad --field: ") + e.what());
        }
    }
    throw ParseError("bad --field '" + flag + "': expected q or fp:<p>");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw ParseError("cannot write '" + out_path + "'");
    out << text;
}

struct Options {
    std::string descriptor_path;
    std::string field_flag;
    bool json = false;
    std::size_t max_dim = 64;
    std::string out_path;
};

FiniteHopfAlgebra load_algebra(const Options& opt, std::string& echo) {
    GroupDescriptor desc = parse_group_descriptor(slurp(opt.descriptor_path));
    const auto override_field = parse_field_flag(opt.field_flag);
    if (override_field)
        desc.field = *override_field;
    echo = descriptor_to_json(desc);
    return build_hopf(desc, std::nullopt, opt.max_dim);
}

void add_common(CLI::App* cmd, Options& opt, bool needs_descriptor = true) {
    if (needs_descriptor)
        cmd->add_option("descriptor", opt.descriptor_path, "JSON group descriptor file")
            ->required();
    cmd->add_option("--field", opt.field_flag, "override the descriptor field: q or fp:<p>");
    cmd->add_flag("--json", opt.json, "emit the report as JSON");
    cmd->add_option("--max-dim", opt.max_dim, "refuse coordinate rings larger than this")
        ->default_val(64);
    cmd->add_option("--out", opt.out_path, "write the report to a file");
}

void emit_report(const AnalysisReport& rep, const Options& opt) {
    if (!report_is_consistent(rep))
        throw StructureError("internal: inconsistent analysis report");
    emit(opt.json ? report_to_json(rep) : report_to_text(rep), opt.out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact trace-form analysis of finite group schemes"};
    app.require_subcommand(1);

    Options opt;
    std::string element_arg, comodule_path;

    CLI::App* c_check = app.add_subcommand("check",
        "reductivity, Gram rank, integral, Parseval, blocks");
    add_common(c_check, opt);

    CLI::App* c_gram = app.add_subcommand("gram", "trace-form Gram matrix and rank");
    add_common(c_gram, opt);

    CLI::App* c_integral = app.add_subcommand("integral", "invariant integral");
    add_common(c_integral, opt);

    CLI::App* c_fourier = app.add_subcommand("fourier", "Fourier transform of an element");
    add_common(c_fourier, opt);
    c_fourier->add_option("element", element_arg,
                          "element of A: JSON array of scalars (inline or a file)")
        ->required();

    CLI::App* c_blocks = app.add_subcommand("blocks", "block decomposition of the dual algebra");
    add_common(c_blocks, opt);

    CLI::App* c_chars = app.add_subcommand("chars", "character analysis of a comodule");
    add_common(c_chars, opt);
    c_chars->add_option("comodule", comodule_path, "JSON comodule file")->required();

    CLI::App* c_diag = app.add_subcommand("diag", "diagonalizable group Spec K[M]");
    c_diag->add_option("descriptor", opt.descriptor_path, "JSON diag descriptor file")
        ->required();
    c_diag->add_option("--field", opt.field_flag, "base field: q or fp:<p>");
    c_diag->add_flag("--json", opt.json, "emit the report as JSON");
    c_diag->add_option("--out", opt.out_path, "write the report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        std::string echo;
        if (c_check->parsed()) {
            emit_report(analyze_check(load_algebra(opt, echo), echo), opt);
        } else if (c_gram->parsed()) {
            emit_report(analyze_gram(load_algebra(opt, echo), echo), opt);
        } else if (c_integral->parsed()) {
            emit_report(analyze_integral(load_algebra(opt, echo), echo), opt);
        } else if (c_fourier->parsed()) {
            const FiniteHopfAlgebra A = load_algebra(opt, echo);
            const Vec element = parse_element(A, inline_or_file(element_arg));
            emit_report(analyze_fourier(A, echo, element), opt);
        } else if (c_blocks->parsed()) {
            emit_report(analyze_blocks(load_algebra(opt, echo), echo), opt);
        } else if (c_chars->parsed()) {
            const FiniteHopfAlgebra A = load_algebra(opt, echo);
            const Comodule V = parse_comodule(A, slurp(comodule_path));
            emit_report(analyze_chars(A, echo, V), opt);
        } else if (c_diag->parsed()) {
            const DiagDescriptor d = parse_diag_descriptor(slurp(opt.descriptor_path));
            const Field field = parse_field_flag(opt.field_flag).value_or(Field::rationals());
            const DiagReport rep = analyze_diag(d, field);
            emit(opt.json ? diag_report_to_json(rep) : diag_report_to_text(rep), opt.out_path);
        }
    } catch (const AxiomError& e) {
        std::cerr << "error: " << e.what() << "\n" << e.report();
        return 2;
    } catch (const NotAGroupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotReductiveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
