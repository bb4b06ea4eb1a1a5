#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nilcohom/catalog.hpp"
#include "nilcohom/cohomology.hpp"
#include "nilcohom/complex_structure.hpp"
#include "nilcohom/formality.hpp"
#include "nilcohom/input.hpp"
#include "nilcohom/report.hpp"

using namespace nilcohom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInternal = 2;

Model load_model(const std::string& path) { return build_model(load_document(path)); }

int run(int argc, char** argv) {
    CLI::App app{"Exact Chevalley-Eilenberg and Dolbeault cohomology of nilpotent Lie "
                 "algebras with invariant complex structure"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the machine-readable JSON report");

    std::string file;
    auto with_json = [&as_json](CLI::App* sub) {
        sub->add_flag("--json", as_json, "emit the machine-readable JSON report");
        return sub;
    };

    auto* check = with_json(app.add_subcommand("check", "validate an input file and classify it"));
    check->add_option("file", file, "input JSON document")->required();

    auto* cohomology = with_json(
        app.add_subcommand("cohomology", "print cohomology tables (default: both)"));
    cohomology->add_option("file", file, "input JSON document")->required();
    bool only_derham = false, only_dolbeault = false;
    cohomology->add_flag("--derham", only_derham, "de Rham (Chevalley-Eilenberg) table only");
    cohomology->add_flag("--dolbeault", only_dolbeault, "Dolbeault table only");

    auto* verdicts = with_json(
        app.add_subcommand("verdicts", "formality verdicts with witnesses"));
    verdicts->add_option("file", file, "input JSON document")->required();

    auto* massey = with_json(app.add_subcommand(
        "massey", "search for non-vanishing triple Massey products"));
    massey->add_option("file", file, "input JSON document")->required();
    std::string complex_name = "derham";
    massey->add_option("--complex", complex_name, "derham | dolbeault | zero-star")
        ->check(CLI::IsMember({"derham", "dolbeault", "zero-star"}));
    int max_degree = 4;
    massey->add_option("--max-degree", max_degree, "bound on the total input degree");

    auto* pairing = with_json(
        app.add_subcommand("pairing", "Poincare pairing ranks per bidegree"));
    pairing->add_option("file", file, "input JSON document")->required();

    auto* ddbar = with_json(
        app.add_subcommand("ddbar", "finite-dimensional del-delbar lemma check"));
    ddbar->add_option("file", file, "input JSON document")->required();

    auto* catalog = app.add_subcommand("catalog", "list or dump built-in examples");
    std::string entry_name;
    catalog->add_option("name", entry_name, "entry name (omit to list)");
    bool emit_input = false;
    catalog->add_flag("--emit-input", emit_input, "print the entry as a loadable input document");

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) {
        Model model = load_model(file);
        ClassificationReport cls = classify(model.g, model.cs);
        std::cout << (as_json ? render_check_json(model, cls) : render_check_text(model, cls));
        return kExitOk;
    }
    if (cohomology->parsed()) {
        Model model = load_model(file);
        bool derham = only_derham || !only_dolbeault;
        bool dolbeault = only_dolbeault || !only_derham;
        std::cout << (as_json ? render_cohomology_json(model, derham, dolbeault)
                              : render_cohomology_text(model, derham, dolbeault));
        return kExitOk;
    }
    if (verdicts->parsed()) {
        Model model = load_model(file);
        VerdictReport report = formality_verdicts(model.g, model.cs);
        std::cout << (as_json ? render_verdicts_json(model, report)
                              : render_verdicts_text(model, report));
        return kExitOk;
    }
    if (massey->parsed()) {
        Model model = load_model(file);
        GradedCohomology table =
            complex_name == "derham"     ? GradedCohomology::derham(model.g)
            : complex_name == "dolbeault" ? GradedCohomology::dolbeault(model.g, model.cs)
                                          : GradedCohomology::zero_star(model.g, model.cs);
        auto hits = massey_search(table, max_degree);
        std::cout << (as_json ? render_massey_json(model, complex_name, max_degree, hits)
                              : render_massey_text(model, complex_name, max_degree, hits));
        return kExitOk;
    }
    if (pairing->parsed()) {
        Model model = load_model(file);
        std::cout << (as_json ? render_pairing_json(model) : render_pairing_text(model));
        return kExitOk;
    }
    if (ddbar->parsed()) {
        Model model = load_model(file);
        DdbarReport report = check_ddbar_lemma(model.g, model.cs);
        std::cout << (as_json ? render_ddbar_json(model, report)
                              : render_ddbar_text(model, report));
        return kExitOk;
    }
    if (catalog->parsed()) {
        if (entry_name.empty()) {
            for (const auto& n : catalog_names()) std::cout << n << "\n";
            return kExitOk;
        }
        CatalogEntry entry = catalog_entry(entry_name);
        if (emit_input) {
            std::cout << document_to_json(entry.input);
            return kExitOk;
        }
        std::cout << "name: " << entry.name << "\n";
        std::cout << "input document:\n" << document_to_json(entry.input);
        std::cout << "expected betti:";
        for (int b : entry.expected.betti) std::cout << " " << b;
        std::cout << "\nexpected hodge numbers:";
        for (const auto& [pq, h] : entry.expected.hodge)
            std::cout << " h^{" << pq.first << "," << pq.second << "}=" << h;
        std::cout << "\nexpected: abelian_cs=" << (entry.expected.abelian_cs ? "yes" : "no")
                  << " bi_invariant=" << (entry.expected.bi_invariant ? "yes" : "no")
                  << " nilpotency_class=" << entry.expected.nilpotency_class << "\n";
        std::cout << "expected verdicts: derham="
                  << (entry.expected.derham_formal ? "formal" : "not-formal")
                  << " dolbeault=" << (entry.expected.dolbeault_formal ? "formal" : "not-formal")
                  << " zero-star="
                  << (entry.expected.zero_star_formal ? "formal" : "not-formal") << "\n";
        return kExitOk;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
