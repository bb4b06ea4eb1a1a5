#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "nilcohom/catalog.hpp"
#include "nilcohom/input.hpp"

using namespace nilcohom;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(NILCOHOM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "nilcohom_cli_test";
    fs::create_directories(dir);
    return dir;
}

fs::path write_entry(const std::string& name) {
    fs::path p = scratch_dir() / (name + ".json");
    std::ofstream(p) << document_to_json(catalog_entry(name).input);
    return p;
}

fs::path write_text(const std::string& stem, const std::string& text) {
    fs::path p = scratch_dir() / (stem + ".json");
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST_CASE("catalog subcommand lists and dumps entries") {
    RunResult list = run_cli("catalog");
    CHECK(list.exit_code == 0);
    CHECK(list.out == "torus_c1\ntorus_c2\nkodaira_thurston\niwasawa\n");

    RunResult dump = run_cli("catalog iwasawa --emit-input");
    CHECK(dump.exit_code == 0);
    // the emitted document is loadable
    fs::path p = write_text("emitted_iwasawa", dump.out);
    RunResult check = run_cli("check " + p.string());
    CHECK(check.exit_code == 0);

    CHECK(run_cli("catalog nope").exit_code == 1);
}

TEST_CASE("check classifies and reports") {
    RunResult r = run_cli("check " + write_entry("kodaira_thurston").string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("integrable: yes") != std::string::npos);
    CHECK(r.out.find("abelian complex structure: yes") != std::string::npos);
    CHECK(r.out.find("bi-invariant: no") != std::string::npos);
}

TEST_CASE("check exits 1 on a Jacobi-violating file, naming the triple") {
    fs::path p = write_text("jacobi_bad", R"({"name":"bad","dim":3,
      "brackets":[{"x":1,"y":2,"value":{"3":"1"}},{"x":1,"y":3,"value":{"1":"1"}}],
      "complex_structure":{"kind":"endomorphism",
        "matrix":[["0","-1","0"],["1","0","0"],["0","0","0"]]}})");
    RunResult r = run_cli("check " + p.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("(1,2,3)") != std::string::npos);
}

TEST_CASE("missing files and malformed JSON exit 1") {
    CHECK(run_cli("check /nonexistent/file.json").exit_code == 1);
    fs::path p = write_text("malformed", "{ not json");
    CHECK(run_cli("check " + p.string()).exit_code == 1);
}

TEST_CASE("cohomology tables") {
    RunResult r = run_cli("cohomology " + write_entry("kodaira_thurston").string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("b1 = 3") != std::string::npos);
    CHECK(r.out.find("Hodge numbers") != std::string::npos);

    RunResult dr = run_cli("cohomology --derham " + write_entry("iwasawa").string());
    CHECK(dr.exit_code == 0);
    CHECK(dr.out.find("b3 = 10") != std::string::npos);
    CHECK(dr.out.find("Hodge") == std::string::npos);
}

TEST_CASE("verdicts text output") {
    RunResult kt = run_cli("verdicts " + write_entry("kodaira_thurston").string());
    CHECK(kt.exit_code == 0);
    CHECK(kt.out.find("de Rham DGA: NOT formal") != std::string::npos);
    CHECK(kt.out.find("Dolbeault DGA: NOT formal") != std::string::npos);
    CHECK(kt.out.find("(0,*)-Dolbeault DGA: formal") != std::string::npos);

    RunResult iw = run_cli("verdicts " + write_entry("iwasawa").string());
    CHECK(iw.out.find("(0,*)-Dolbeault DGA: NOT formal") != std::string::npos);

    RunResult t = run_cli("verdicts " + write_entry("torus_c2").string());
    CHECK(t.out.find("de Rham DGA: formal") != std::string::npos);
}

TEST_CASE("verdicts --json is byte-identical across runs") {
    fs::path p = write_entry("iwasawa");
    RunResult a = run_cli("verdicts " + p.string() + " --json");
    RunResult b = run_cli("verdicts " + p.string() + " --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"zero_star_formal\"") != std::string::npos);
}

TEST_CASE("massey, pairing and ddbar subcommands") {
    fs::path kt = write_entry("kodaira_thurston");
    RunResult m = run_cli("massey " + kt.string() + " --complex derham --max-degree 4");
    CHECK(m.exit_code == 0);
    CHECK(m.out.find("non-vanishing") != std::string::npos);

    RunResult z = run_cli("massey " + write_entry("iwasawa").string() +
                          " --complex zero-star --max-degree 3");
    CHECK(z.exit_code == 0);
    CHECK(z.out.find("[-1 W13]") != std::string::npos);

    RunResult p = run_cli("pairing " + kt.string());
    CHECK(p.exit_code == 0);
    CHECK(p.out.find("DEGENERATE") == std::string::npos);

    RunResult d = run_cli("ddbar " + kt.string());
    CHECK(d.exit_code == 0);
    CHECK(d.out.find("overall: fails") != std::string::npos);
    CHECK(d.out.find("witness at (p,q)=(1,1)") != std::string::npos);

    RunResult dt = run_cli("ddbar " + write_entry("torus_c1").string());
    CHECK(dt.out.find("overall: holds") != std::string::npos);
}

TEST_CASE("a non-integrable structure blocks the Dolbeault side only") {
    // h3 + R with J pairing e1<->e3, e2<->e4 is not integrable
    fs::path p = write_text("crossed", R"({"name":"crossed","dim":4,
      "brackets":[{"x":1,"y":2,"value":{"3":"1"}}],
      "complex_structure":{"kind":"endomorphism",
        "matrix":[["0","0","-1","0"],["0","0","0","-1"],
                   ["1","0","0","0"],["0","1","0","0"]]}})");

    RunResult derham = run_cli("cohomology --derham " + p.string());
    CHECK(derham.exit_code == 0);
    CHECK(derham.out.find("b1 = 3") != std::string::npos);

    RunResult dolb = run_cli("cohomology --dolbeault " + p.string());
    CHECK(dolb.exit_code == 1);
    CHECK(dolb.out.find("not integrable") != std::string::npos);

    RunResult check = run_cli("check " + p.string());
    CHECK(check.exit_code == 1);
    CHECK(check.out.find("not integrable") != std::string::npos);
}

TEST_CASE("coframe input file works end to end") {
    fs::path p = write_text("iwasawa_coframe", R"({
      "name": "iwasawa_coframe",
      "dim": 6,
      "brackets": [],
      "complex_structure": {
        "kind": "coframe",
        "equations": [[], [], [{"coeff": "-1", "monomial": "w12"}]]
      }
    })");
    RunResult r = run_cli("check " + p.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("bi-invariant: yes") != std::string::npos);
}
