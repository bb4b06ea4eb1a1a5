#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcohom/catalog.hpp"
#include "nilcohom/cohomology.hpp"
#include "nilcohom/formality.hpp"
#include "nilcohom/input.hpp"
#include "nilcohom/report.hpp"

using namespace nilcohom;

TEST_CASE("catalog lists its entries and rejects unknown names") {
    CHECK(catalog_names() ==
          std::vector<std::string>{"torus_c1", "torus_c2", "kodaira_thurston", "iwasawa"});
    CHECK_THROWS_AS(catalog_entry("heisenberg7"), UnknownEntry);
}

TEST_CASE("catalog self-test: expected values regenerate exactly") {
    for (const auto& name : catalog_names()) {
        CatalogEntry entry = catalog_entry(name);
        Model model = build_model(entry.input);

        GradedCohomology dr = GradedCohomology::derham(model.g);
        std::vector<int> betti;
        for (int k = 0; k <= model.g.dim(); ++k) betti.push_back(dr.dim({k, 0}));
        CHECK(betti == entry.expected.betti);

        GradedCohomology dolb = GradedCohomology::dolbeault(model.g, model.cs);
        for (const auto& [pq, h] : entry.expected.hodge)
            CHECK(dolb.dim({pq.first, pq.second}) == h);

        ClassificationReport cls = classify(model.g, model.cs);
        CHECK(cls.integrable == entry.expected.integrable);
        CHECK(cls.abelian_cs == entry.expected.abelian_cs);
        CHECK(cls.bi_invariant == entry.expected.bi_invariant);
        CHECK(cls.nilpotency_class == entry.expected.nilpotency_class);

        VerdictReport v = formality_verdicts(model.g, model.cs);
        CHECK(v.derham_formal.formal == entry.expected.derham_formal);
        CHECK(v.dolbeault_formal.formal == entry.expected.dolbeault_formal);
        CHECK(v.zero_star_formal.formal == entry.expected.zero_star_formal);

        CHECK(check_ddbar_lemma(model.g, model.cs).overall == entry.expected.ddbar_overall);
    }
}

TEST_CASE("document parsing and validation errors") {
    CHECK_THROWS_AS(parse_document("{ not json", "test"), ParseError);
    CHECK_THROWS_AS(parse_document("[]", "test"), ValidationError);

    // x = y in a bracket
    CHECK_THROWS_AS(parse_document(R"({"name":"t","dim":3,
        "brackets":[{"x":2,"y":2,"value":{"3":"1"}}],
        "complex_structure":{"kind":"endomorphism","matrix":[]}})",
                                   "test"),
                    ValidationError);

    // native float scalars are rejected to keep exactness
    CHECK_THROWS_AS(parse_document(R"({"name":"t","dim":2,
        "brackets":[{"x":1,"y":2,"value":{"2":0.5}}],
        "complex_structure":{"kind":"endomorphism","matrix":[["0","-1"],["1","0"]]}})",
                                   "test"),
                    ValidationError);

    // malformed scalar string surfaces with its field
    InputDocument bad = parse_document(R"({"name":"t","dim":2,"brackets":[],
        "complex_structure":{"kind":"endomorphism","matrix":[["0","x"],["1","0"]]}})",
                                       "test");
    CHECK_THROWS_AS(build_model(bad), ValidationError);

    // J entries must be real rationals
    InputDocument imag = parse_document(R"({"name":"t","dim":2,"brackets":[],
        "complex_structure":{"kind":"endomorphism","matrix":[["0","1i"],["1","0"]]}})",
                                        "test");
    CHECK_THROWS_AS(build_model(imag), ValidationError);
}

TEST_CASE("build_model rejects Jacobi violations and non-nilpotent algebras") {
    InputDocument jac = parse_document(R"({"name":"bad","dim":3,
        "brackets":[{"x":1,"y":2,"value":{"3":"1"}},{"x":1,"y":3,"value":{"1":"1"}}],
        "complex_structure":{"kind":"endomorphism","matrix":[["0","-1","0"],["1","0","0"],["0","0","0"]]}})",
                                       "test");
    CHECK_THROWS_AS(build_model(jac), JacobiViolation);

    InputDocument sol = parse_document(R"({"name":"aff","dim":2,
        "brackets":[{"x":1,"y":2,"value":{"2":"1"}}],
        "complex_structure":{"kind":"endomorphism","matrix":[["0","-1"],["1","0"]]}})",
                                       "test");
    CHECK_THROWS_AS(build_model(sol), NotNilpotent);
}

TEST_CASE("documents survive the serialization round trip") {
    for (const auto& name : catalog_names()) {
        CatalogEntry entry = catalog_entry(name);
        InputDocument reparsed = parse_document(document_to_json(entry.input), "roundtrip");
        CHECK(reparsed.name == entry.input.name);
        CHECK(reparsed.dim == entry.input.dim);
        Model a = build_model(entry.input);
        Model b = build_model(reparsed);
        CHECK(a.g.constants() == b.g.constants());
        CHECK(a.cs.J() == b.cs.J());
    }
}

TEST_CASE("coframe input for the Iwasawa structure equations") {
    InputDocument doc;
    doc.name = "iwasawa_coframe";
    doc.dim = 6;
    doc.cs_kind = CsKind::Coframe;
    doc.equations = {{}, {}, {{"-1", "w12"}}};

    Model model = build_model(doc);
    // conversion reproduces the complex Heisenberg structure constants
    Model reference = build_model(catalog_entry("iwasawa").input);
    CHECK(model.g.constants() == reference.g.constants());

    ClassificationReport cls = classify(model.g, model.cs);
    CHECK(cls.bi_invariant);
    CHECK_FALSE(cls.abelian_cs);
}

TEST_CASE("coframe input for Kodaira-Thurston") {
    InputDocument doc;
    doc.name = "kt_coframe";
    doc.dim = 4;
    doc.cs_kind = CsKind::Coframe;
    doc.equations = {{}, {{"-1/2i", "w1W1"}}};  // d w2 = -(i/2) w1 ^ Wbar1

    Model model = build_model(doc);
    Model reference = build_model(catalog_entry("kodaira_thurston").input);
    CHECK(model.g.constants() == reference.g.constants());
}

TEST_CASE("coframe input with several complex-coefficient terms") {
    // the product of two Heisenberg algebras: d w3 = -(i/2) w1^Wbar1 + (1/2) w2^Wbar2
    InputDocument doc;
    doc.name = "double_heisenberg";
    doc.dim = 6;
    doc.cs_kind = CsKind::Coframe;
    doc.equations = {{}, {}, {{"-1/2i", "w1W1"}, {"1/2", "w2W2"}}};

    Model model = build_model(doc);
    StructureConstants expected{{{1, 2}, {{5, GaussianRational(1)}}},
                                {{3, 4}, {{6, GaussianRational(1)}}}};
    CHECK(model.g.constants() == expected);
    CHECK(classify(model.g, model.cs).abelian_cs);
}

TEST_CASE("inconsistent coframe equations are rejected") {
    // d w1 = w2^Wbar2, d w2 = w1^Wbar1 has d^2 != 0: Jacobi violation
    InputDocument doc;
    doc.name = "bad_coframe";
    doc.dim = 4;
    doc.cs_kind = CsKind::Coframe;
    doc.equations = {{{"1", "w2W2"}}, {{"1", "w1W1"}}};
    CHECK_THROWS_AS(build_model(doc), JacobiViolation);

    // d w1 = -w12 is a Lie algebra, but a solvable non-nilpotent one
    InputDocument sol;
    sol.name = "affine_coframe";
    sol.dim = 4;
    sol.cs_kind = CsKind::Coframe;
    sol.equations = {{{"-1", "w12"}}, {}};
    CHECK_THROWS_AS(build_model(sol), NotNilpotent);

    // monomial parse errors surface as validation errors
    InputDocument mono;
    mono.name = "bad_mono";
    mono.dim = 4;
    mono.cs_kind = CsKind::Coframe;
    mono.equations = {{}, {{"1", "w21"}}};
    CHECK_THROWS_AS(build_model(mono), ValidationError);
}

TEST_CASE("monomial parser") {
    CHECK(parse_mono("w12", 3) == Mono(0b011));
    CHECK(parse_mono("w1W2", 3) == (Mono(1) | Mono(1) << 4));
    CHECK(parse_mono("W12", 3) == (Mono(0b011) << 3));
    CHECK(parse_mono("w1^W1", 3) == (Mono(1) | Mono(1) << 3));
    CHECK_THROWS_AS(parse_mono("w21", 3), ParseError);
    CHECK_THROWS_AS(parse_mono("w4", 3), ParseError);
    CHECK_THROWS_AS(parse_mono("W1w1", 3), ParseError);
    CHECK_THROWS_AS(parse_mono("e12", 3), ParseError);
    CHECK_THROWS_AS(parse_mono("", 3), ParseError);
}

TEST_CASE("JSON reports are byte-identical across renders") {
    for (const auto& name : catalog_names()) {
        Model model = build_model(catalog_entry(name).input);
        VerdictReport v1 = formality_verdicts(model.g, model.cs);
        VerdictReport v2 = formality_verdicts(model.g, model.cs);
        CHECK(render_verdicts_json(model, v1) == render_verdicts_json(model, v2));
        CHECK(render_cohomology_json(model, true, true) ==
              render_cohomology_json(model, true, true));
        CHECK(render_pairing_json(model) == render_pairing_json(model));
    }
}
