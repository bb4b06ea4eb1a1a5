#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilcohom/catalog.hpp"
#include "nilcohom/cohomology.hpp"
#include "nilcohom/complex_structure.hpp"
#include "nilcohom/formality.hpp"
#include "nilcohom/input.hpp"
#include "nilcohom/report.hpp"
#include "nilcohom/scalar.hpp"

namespace py = pybind11;
using namespace nilcohom;

namespace {

Model model_from_json(const std::string& text) {
    return build_model(parse_document(text, "<python>"));
}

std::string check_json(const std::string& text) {
    Model model = model_from_json(text);
    return render_check_json(model, classify(model.g, model.cs));
}

std::string cohomology_json(const std::string& text, bool derham, bool dolbeault) {
    Model model = model_from_json(text);
    return render_cohomology_json(model, derham, dolbeault);
}

std::string verdicts_json(const std::string& text) {
    Model model = model_from_json(text);
    return render_verdicts_json(model, formality_verdicts(model.g, model.cs));
}

std::string massey_json(const std::string& text, const std::string& complex_name,
                        int max_degree) {
    Model model = model_from_json(text);
    GradedCohomology table =
        complex_name == "derham"      ? GradedCohomology::derham(model.g)
        : complex_name == "dolbeault" ? GradedCohomology::dolbeault(model.g, model.cs)
        : complex_name == "zero-star" ? GradedCohomology::zero_star(model.g, model.cs)
                                      : throw ValidationError(
                                            "complex must be derham, dolbeault or zero-star",
                                            "complex");
    return render_massey_json(model, complex_name, max_degree,
                              massey_search(table, max_degree));
}

std::string pairing_json(const std::string& text) {
    return render_pairing_json(model_from_json(text));
}

std::string ddbar_json(const std::string& text) {
    Model model = model_from_json(text);
    return render_ddbar_json(model, check_ddbar_lemma(model.g, model.cs));
}

std::vector<int> betti(const std::string& text) {
    Model model = model_from_json(text);
    return betti_numbers(model.g);
}

std::vector<std::vector<int>> hodge(const std::string& text) {
    Model model = model_from_json(text);
    return hodge_numbers(model.g, model.cs);
}

std::string scalar_roundtrip(const std::string& text) {
    return format_scalar(parse_scalar(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Chevalley-Eilenberg and Dolbeault cohomology of nilpotent Lie "
              "algebras with invariant complex structure";

    py::register_exception<Error>(m, "InputError", PyExc_ValueError);

    m.def("catalog_names", &catalog_names, "Names of the built-in examples");
    m.def(
        "catalog_input_json",
        [](const std::string& name) { return document_to_json(catalog_entry(name).input); },
        py::arg("name"), "Input document of a catalog entry, as JSON text");

    m.def("check_json", &check_json, py::arg("document"),
          "Validate and classify; returns the JSON report");
    m.def("cohomology_json", &cohomology_json, py::arg("document"),
          py::arg("derham") = true, py::arg("dolbeault") = true,
          "Cohomology tables as a JSON report");
    m.def("verdicts_json", &verdicts_json, py::arg("document"),
          "Formality verdicts with Massey witnesses, as JSON");
    m.def("massey_json", &massey_json, py::arg("document"), py::arg("complex") = "derham",
          py::arg("max_degree") = 4, "Non-vanishing triple Massey products, as JSON");
    m.def("pairing_json", &pairing_json, py::arg("document"),
          "Poincare pairing matrices per bidegree, as JSON");
    m.def("ddbar_json", &ddbar_json, py::arg("document"),
          "del-delbar lemma check, as JSON");

    m.def("betti", &betti, py::arg("document"), "de Rham Betti numbers");
    m.def("hodge", &hodge, py::arg("document"),
          "Hodge numbers h^{p,q} as an (m+1)x(m+1) list of lists");

    m.def("scalar_roundtrip", &scalar_roundtrip, py::arg("text"),
          "Parse a scalar under the wire grammar and format it canonically");
}
