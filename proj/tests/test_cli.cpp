// Drives the installed command-line binary end to end: exit codes, report
// shape, determinism. The binary path comes in through GROUPTRACE_CLI_PATH.

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "grouptrace_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = work_dir() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

RunResult run(const std::string& args) {
    const fs::path out_path = work_dir() / "stdout.txt";
    const fs::path err_path = work_dir() / "stderr.txt";
    const std::string cmd = std::string(GROUPTRACE_CLI_PATH) + " " + args + " > " +
                            out_path.string() + " 2> " + err_path.string();
    const int status = std::system(cmd.c_str());
    int code = -1;
    if (status != -1)
        code = WEXITSTATUS(status);
    return {code, slurp(out_path), slurp(err_path)};
}

const std::string z2_f2 =
    R"({"field":{"kind":"Fp","p":2},"group":{"type":"constant","table":[[0,1],[1,0]]}})";
const std::string mu2_f2 = R"({"field":{"kind":"Fp","p":2},"group":{"type":"mu","n":2}})";
const std::string z3_f5 =
    R"({"field":{"kind":"Fp","p":5},"group":{"type":"constant","table":[[0,1,2],[1,2,0],[2,0,1]]}})";
const std::string mu3_q = R"({"field":{"kind":"Q"},"group":{"type":"mu","n":3}})";

} // namespace

TEST_CASE("check reports the non-reductive verdict with exit 0") {
    const auto desc = write_file("z2_f2.json", z2_f2);
    const auto r = run("check " + desc.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("reductive: no") != std::string::npos);
    CHECK(r.out.find("gram rank: 0 of 2") != std::string::npos);
}

TEST_CASE("check on the contrast partner passes parseval") {
    const auto desc = write_file("mu2_f2.json", mu2_f2);
    const auto r = run("check " + desc.string() + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"reductive\": true") != std::string::npos);
    CHECK(r.out.find("\"parseval\": \"pass\"") != std::string::npos);
}

TEST_CASE("gram emits the full matrix") {
    const auto desc = write_file("mu3_q.json", mu3_q);
    const auto r = run("gram " + desc.string() + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"gram_rank\": 3") != std::string::npos);
}

TEST_CASE("integral command") {
    const auto desc = write_file("mu3_q2.json", mu3_q);
    const auto r = run("integral " + desc.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("integral:  [1, 0, 0]") != std::string::npos);
}

TEST_CASE("fourier of an element") {
    const auto desc = write_file("mu3_q3.json", mu3_q);
    const auto r = run("fourier " + desc.string() + " '[\"0\",\"1\",\"0\"]'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("fourier:   [0, 1, 0]") != std::string::npos);
}

TEST_CASE("fourier without an integral is an unsupported request: exit 3") {
    const auto desc = write_file("z2_f2b.json", z2_f2);
    const auto r = run("fourier " + desc.string() + " '[\"1\",\"0\"]'");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("no invariant integral") != std::string::npos);
}

TEST_CASE("blocks on F5[Z/3]") {
    const auto desc = write_file("z3_f5.json", z3_f5);
    const auto r = run("blocks " + desc.string() + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"block_dims\": [") != std::string::npos);
    CHECK(r.out.find("1,") != std::string::npos);
    CHECK(r.out.find("2") != std::string::npos);
}

TEST_CASE("blocks over Q: exit 3") {
    const auto desc = write_file("mu3_q4.json", mu3_q);
    const auto r = run("blocks " + desc.string());
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("unsupported over Q") != std::string::npos);
}

TEST_CASE("chars on the sign comodule") {
    const auto desc = write_file("z2_q.json",
        R"({"field":{"kind":"Q"},"group":{"type":"constant","table":[[0,1],[1,0]]}})");
    const auto com = write_file("sign.json", R"({"dim":1,"coaction":[[["1","-1"]]]})");
    const auto r = run("chars " + desc.string() + " " + com.string() + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"invariants_dim\": 0") != std::string::npos);
    CHECK(r.out.find("\"integral_matches_invariants\": true") != std::string::npos);
}

TEST_CASE("bad comodules exit 2 with the report") {
    const auto desc = write_file("z2_q2.json",
        R"({"field":{"kind":"Q"},"group":{"type":"constant","table":[[0,1],[1,0]]}})");
    const auto com = write_file("bad_comodule.json", R"({"dim":1,"coaction":[[["2","0"]]]})");
    const auto r = run("chars " + desc.string() + " " + com.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("counit law: FAILED") != std::string::npos);
}

TEST_CASE("bad group tables exit 2") {
    const auto desc = write_file("notgroup.json",
        R"({"field":{"kind":"Q"},"group":{"type":"constant","table":[[0,1],[1,1]]}})");
    const auto r = run("check " + desc.string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("malformed json exits 1") {
    const auto desc = write_file("broken.json", "{not json");
    CHECK(run("check " + desc.string()).exit_code == 1);
    CHECK(run("check /no/such/file.json").exit_code == 1);
}

TEST_CASE("oversized descriptors are refused: exit 3") {
    const auto desc = write_file("mu40.json",
        R"({"field":{"kind":"Q"},"group":{"type":"mu","n":40}})");
    CHECK(run("check " + desc.string() + " --max-dim 24").exit_code == 3);
    CHECK(run("gram " + desc.string() + " --max-dim 64").exit_code == 0);
}

TEST_CASE("field override flag") {
    const auto desc = write_file("mu2_q.json", R"({"field":{"kind":"Q"},"group":{"type":"mu","n":2}})");
    const auto r = run("check " + desc.string() + " --field fp:2 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"field\": \"F2\"") != std::string::npos);
}

TEST_CASE("diag command") {
    const auto desc = write_file("diag.json", R"({"type":"diag","free_rank":1,"torsion":[4,6]})");
    const auto r = run("diag " + desc.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Z^1 x Z/2 x Z/12") != std::string::npos);
    CHECK(r.out.find("parseval round trip: pass") != std::string::npos);
}

TEST_CASE("identical input produces byte-identical reports") {
    const auto desc = write_file("mu4_f5.json",
        R"({"field":{"kind":"Fp","p":5},"group":{"type":"mu","n":4}})");
    const fs::path out1 = work_dir() / "r1.json";
    const fs::path out2 = work_dir() / "r2.json";
    CHECK(run("check " + desc.string() + " --json --out " + out1.string()).exit_code == 0);
    CHECK(run("check " + desc.string() + " --json --out " + out2.string()).exit_code == 0);
    const std::string a = slurp(out1), b = slurp(out2);
    CHECK(!a.empty());
    CHECK(a == b);
}

TEST_CASE("cartier dual of a non-cocommutative group is refused: exit 3") {
    const auto desc = write_file("dual_s3.json", R"({
      "field": {"kind": "Q"},
      "group": {"type": "cartier_dual",
                "of": {"type": "constant",
                       "table": [[0,1,2,3,4,5],[1,0,4,5,2,3],[2,5,0,4,3,1],
                                 [3,4,5,0,1,2],[4,3,1,2,5,0],[5,2,3,1,0,4]]}}})");
    const auto r = run("check " + desc.string());
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("cocommutative") != std::string::npos);
}
