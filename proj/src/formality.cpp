#include "nilcohom/formality.hpp"

#include <stdexcept>

#include "nilcohom/complex_structure.hpp"
#include "nilcohom/lie_algebra.hpp"

namespace nilcohom {

namespace {

MasseyResult massey_core(const GradedCohomology& table, const CohomologyClass& a,
                         const CohomologyClass& b, const CohomologyClass& c,
                         const Form* given_x, const Form* given_y) {
    if (a.table_id != table.id() || b.table_id != table.id() || c.table_id != table.id())
        throw TableMismatch();

    MasseyResult out;
    out.dga = table.dga_kind();
    out.a = a;
    out.b = b;
    out.c = c;

    CohomologyClass ab = table.cup(a, b);
    CohomologyClass bc = table.cup(b, c);
    if (!ab.is_zero() || !bc.is_zero()) {
        out.defined = false;
        return out;
    }
    out.defined = true;

    Grade gx = a.grade + b.grade;
    Grade gy = b.grade + c.grade;
    Form wab = wedge(a.rep, b.rep);
    Form wbc = wedge(b.rep, c.rep);

    Form x(table.n(), table.basis_kind());
    Form y(table.n(), table.basis_kind());
    if (given_x) {
        if (!(table.differential().apply(*given_x) == wab))
            throw std::logic_error("supplied primitive x does not satisfy D x = a^b");
        x = *given_x;
    } else {
        auto solved = table.primitive(gx, wab);
        if (!solved) throw std::logic_error("no primitive for a^b although [a][b] = 0");
        x = *solved;
    }
    if (given_y) {
        if (!(table.differential().apply(*given_y) == wbc))
            throw std::logic_error("supplied primitive y does not satisfy D y = b^c");
        y = *given_y;
    } else {
        auto solved = table.primitive(gy, wbc);
        if (!solved) throw std::logic_error("no primitive for b^c although [b][c] = 0");
        y = *solved;
    }
    out.primitive_x = x;
    out.primitive_y = y;

    int deg_a = total_degree(a.grade);
    Form rep_form = wedge(x, c.rep);
    Form ay = wedge(a.rep, y);
    if (deg_a % 2 == 0)
        rep_form -= ay;
    else
        rep_form += ay;

    Grade target = a.grade + b.grade + c.grade - table.shift();
    if (!table.is_closed(target, rep_form))
        throw std::logic_error("Massey representative is not closed");
    out.representative = table.class_of(rep_form, target);

    // indeterminacy: [a]·H^{|b|+|c|-1} + H^{|a|+|b|-1}·[c]
    int h_target = table.dim(target);
    RowSpan span(h_target);
    auto push = [&](const CohomologyClass& cls) {
        if (cls.is_zero() || cls.coords.empty()) return;
        if (span.add(cls.coords)) out.indeterminacy_basis.push_back(cls);
    };
    Grade left = b.grade + c.grade - table.shift();
    if (table.has(left))
        for (int i = 0; i < table.dim(left); ++i)
            push(table.cup(a, table.basis_class(left, i)));
    Grade right = a.grade + b.grade - table.shift();
    if (table.has(right))
        for (int i = 0; i < table.dim(right); ++i)
            push(table.cup(table.basis_class(right, i), c));

    out.vanishes = out.representative.is_zero() ||
                   (!out.representative.coords.empty() &&
                    span.contains(out.representative.coords));
    return out;
}

}  // namespace

MasseyResult triple_massey(const GradedCohomology& table, const CohomologyClass& a,
                           const CohomologyClass& b, const CohomologyClass& c) {
    return massey_core(table, a, b, c, nullptr, nullptr);
}

MasseyResult triple_massey_with_primitives(const GradedCohomology& table,
                                           const CohomologyClass& a,
                                           const CohomologyClass& b,
                                           const CohomologyClass& c, const Form& x,
                                           const Form& y) {
    return massey_core(table, a, b, c, &x, &y);
}

std::vector<MasseyResult> massey_search(const GradedCohomology& table,
                                        int max_total_degree) {
    std::vector<MasseyResult> hits;
    // triples with the unit class are never defined; start at degree 1
    std::vector<CohomologyClass> classes;
    for (Grade g : table.grades()) {
        if (total_degree(g) < 1) continue;
        for (int i = 0; i < table.dim(g); ++i) classes.push_back(table.basis_class(g, i));
    }
    for (const auto& a : classes)
        for (const auto& b : classes) {
            if (total_degree(a.grade) + total_degree(b.grade) + 1 > max_total_degree)
                continue;
            for (const auto& c : classes) {
                if (total_degree(a.grade) + total_degree(b.grade) +
                        total_degree(c.grade) > max_total_degree)
                    continue;
                MasseyResult r = triple_massey(table, a, b, c);
                if (r.defined && !r.vanishes) hits.push_back(std::move(r));
            }
        }
    return hits;
}

VerdictReport formality_verdicts(const LieAlgebra& g, const ComplexStructure& cs,
                                 int massey_search_bound) {
    lower_central_series(g);                       // NotNilpotent propagates
    ClassificationReport cls = classify(g, cs);    // NotIntegrable propagates
    bool abelian = g.is_abelian();

    VerdictReport report;
    report.massey_search_bound = massey_search_bound;

    report.derham_formal.formal = abelian;
    report.derham_formal.reason =
        abelian ? "g is abelian (torus case): the Chevalley-Eilenberg differential "
                  "vanishes, so the algebra equals its cohomology"
                : "g is a non-abelian nilpotent Lie algebra: its Chevalley-Eilenberg "
                  "algebra is never formal (Hasegawa); nilmanifolds are formal only "
                  "for tori";

    report.dolbeault_formal.formal = abelian;
    report.dolbeault_formal.reason =
        abelian ? "g is abelian (complex torus case): the Dolbeault differential "
                  "vanishes, so the algebra equals its cohomology"
                : "g is a non-abelian nilpotent Lie algebra: the Dolbeault algebra of "
                  "a complex nilmanifold is never formal unless it is a torus (the "
                  "Chevalley-Eilenberg algebra is non-formal by Hasegawa and Poincare "
                  "duality makes the inclusion a domination)";

    report.zero_star_formal.formal = cls.abelian_cs;
    report.zero_star_formal.reason =
        cls.abelian_cs
            ? "the complex structure is abelian, i.e. g^{0,1} is abelian: the "
              "(0,*)-Dolbeault algebra is the Chevalley-Eilenberg algebra of g^{0,1} "
              "and has zero differential"
            : "g^{0,1} is non-abelian: the (0,*)-Dolbeault algebra is the "
              "Chevalley-Eilenberg algebra of the nilpotent Lie algebra g^{0,1}, "
              "which is formal iff abelian (Hasegawa, via Serre duality and "
              "domination)";

    GradedCohomology derham = GradedCohomology::derham(g);
    GradedCohomology dolbeault = GradedCohomology::dolbeault(g, cs);
    GradedCohomology zero_star = GradedCohomology::zero_star(g, cs);
    for (auto& r : massey_search(derham, massey_search_bound))
        report.witnesses.push_back(std::move(r));
    for (auto& r : massey_search(dolbeault, massey_search_bound))
        report.witnesses.push_back(std::move(r));
    for (auto& r : massey_search(zero_star, massey_search_bound))
        report.witnesses.push_back(std::move(r));
    return report;
}

}  // namespace nilcohom
