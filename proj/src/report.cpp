#include <sstream>

#include <json.hpp>

#include "nilcohom/cohomology.hpp"
#include "nilcohom/complex_structure.hpp"
#include "nilcohom/formality.hpp"
#include "nilcohom/input.hpp"
#include "nilcohom/report.hpp"

namespace nilcohom {

using json = nlohmann::ordered_json;

namespace {

json class_json(const CohomologyClass& cls, DgaKind kind) {
    json j;
    if (kind == DgaKind::DeRham)
        j["degree"] = cls.grade.first;
    else
        j["degree"] = {cls.grade.first, cls.grade.second};
    j["class_id"] = cls.class_id;
    j["representative"] = format_form(cls.rep);
    json coords = json::array();
    for (const auto& c : cls.coords) coords.push_back(format_scalar(c));
    j["coords"] = std::move(coords);
    return j;
}

json massey_json(const MasseyResult& r) {
    json j;
    switch (r.dga) {
        case DgaKind::DeRham: j["complex"] = "derham"; break;
        case DgaKind::Dolbeault: j["complex"] = "dolbeault"; break;
        case DgaKind::ZeroStar: j["complex"] = "zero-star"; break;
    }
    j["inputs"] = {class_json(r.a, r.dga), class_json(r.b, r.dga), class_json(r.c, r.dga)};
    j["defined"] = r.defined;
    if (r.defined) {
        j["representative"] = class_json(r.representative, r.dga);
        json ind = json::array();
        for (const auto& cls : r.indeterminacy_basis) ind.push_back(class_json(cls, r.dga));
        j["indeterminacy_basis"] = std::move(ind);
        j["vanishes"] = r.vanishes;
    }
    return j;
}

std::string massey_inputs_text(const MasseyResult& r) {
    std::ostringstream os;
    os << "<[" << format_form(r.a.rep) << "], [" << format_form(r.b.rep) << "], ["
       << format_form(r.c.rep) << "]>";
    return os.str();
}

json dims_json(const GradedCohomology& table) {
    if (table.dga_kind() == DgaKind::DeRham) {
        json dims = json::array();
        for (int k = 0; k <= table.n(); ++k) dims.push_back(table.dim({k, 0}));
        return dims;
    }
    json dims = json::array();
    for (int p = 0; p <= table.m(); ++p) {
        json row = json::array();
        for (int q = 0; q <= table.m(); ++q) row.push_back(table.dim({p, q}));
        dims.push_back(std::move(row));
    }
    return dims;
}

json reps_json(const GradedCohomology& table) {
    auto slot = [&](Grade g) {
        json arr = json::array();
        for (const Form& f : table.representatives(g)) arr.push_back(format_form(f));
        return arr;
    };
    if (table.dga_kind() == DgaKind::DeRham) {
        json out = json::array();
        for (int k = 0; k <= table.n(); ++k) out.push_back(slot({k, 0}));
        return out;
    }
    json out = json::array();
    for (int p = 0; p <= table.m(); ++p) {
        json row = json::array();
        for (int q = 0; q <= table.m(); ++q) row.push_back(slot({p, q}));
        out.push_back(std::move(row));
    }
    return out;
}

json table_json(const std::string& label, const GradedCohomology& table) {
    json j;
    j["label"] = label;
    j["dims"] = dims_json(table);
    j["representatives"] = reps_json(table);
    return j;
}

json classification_json(const ClassificationReport& cls) {
    json j;
    j["integrable"] = cls.integrable;
    j["abelian_cs"] = cls.abelian_cs;
    j["bi_invariant"] = cls.bi_invariant;
    j["rational"] = cls.rational;
    j["nilpotency_class"] = cls.nilpotency_class;
    j["lcs_dims"] = cls.lcs_dims;
    return j;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_check_text(const Model& model, const ClassificationReport& cls) {
    std::ostringstream os;
    os << "name: " << model.name << "\n";
    os << "dim: " << model.g.dim() << "\n";
    os << "jacobi: ok\n";
    os << "nilpotent: yes (class " << cls.nilpotency_class << ", lower central series dims";
    for (int d : cls.lcs_dims) os << " " << d;
    os << ")\n";
    os << "integrable: " << yesno(cls.integrable) << "\n";
    os << "abelian complex structure: " << yesno(cls.abelian_cs) << "\n";
    os << "bi-invariant: " << yesno(cls.bi_invariant) << "\n";
    os << "rational (relative to the input basis): " << yesno(cls.rational) << "\n";
    return os.str();
}

std::string render_check_json(const Model& model, const ClassificationReport& cls) {
    json j;
    j["name"] = model.name;
    j["dim"] = model.g.dim();
    j["classification"] = classification_json(cls);
    return j.dump(2) + "\n";
}

std::string render_cohomology_text(const Model& model, bool derham, bool dolbeault) {
    std::ostringstream os;
    os << "name: " << model.name << "\n";
    if (derham) {
        GradedCohomology t = GradedCohomology::derham(model.g);
        os << "de Rham (Chevalley-Eilenberg) Betti numbers:\n";
        for (int k = 0; k <= t.n(); ++k)
            os << "  b" << k << " = " << t.dim({k, 0}) << "\n";
        os << "representatives:\n";
        for (int k = 0; k <= t.n(); ++k) {
            os << "  H^" << k << ":";
            for (const Form& f : t.representatives({k, 0})) os << "  [" << format_form(f) << "]";
            os << "\n";
        }
    }
    if (dolbeault) {
        GradedCohomology t = GradedCohomology::dolbeault(model.g, model.cs);
        int m = t.m();
        os << "Dolbeault Hodge numbers h^{p,q} (p rows, q columns):\n";
        for (int p = 0; p <= m; ++p) {
            os << "  ";
            for (int q = 0; q <= m; ++q) os << t.dim({p, q}) << (q == m ? "" : " ");
            os << "\n";
        }
        os << "representatives:\n";
        for (int p = 0; p <= m; ++p)
            for (int q = 0; q <= m; ++q) {
                os << "  H^{" << p << "," << q << "}:";
                for (const Form& f : t.representatives({p, q}))
                    os << "  [" << format_form(f) << "]";
                os << "\n";
            }
    }
    return os.str();
}

std::string render_cohomology_json(const Model& model, bool derham, bool dolbeault) {
    json j;
    j["name"] = model.name;
    if (derham)
        j["derham"] = table_json("derham", GradedCohomology::derham(model.g));
    if (dolbeault)
        j["dolbeault"] =
            table_json("dolbeault", GradedCohomology::dolbeault(model.g, model.cs));
    return j.dump(2) + "\n";
}

std::string render_verdicts_text(const Model& model, const VerdictReport& verdicts) {
    std::ostringstream os;
    os << "name: " << model.name << "\n";
    auto line = [&](const char* label, const Verdict& v) {
        os << label << ": " << (v.formal ? "formal" : "NOT formal") << "\n    " << v.reason
           << "\n";
    };
    line("de Rham DGA", verdicts.derham_formal);
    line("Dolbeault DGA", verdicts.dolbeault_formal);
    line("(0,*)-Dolbeault DGA", verdicts.zero_star_formal);
    os << "Massey witnesses (search bound " << verdicts.massey_search_bound
       << " on total input degree): " << verdicts.witnesses.size() << "\n";
    for (const auto& w : verdicts.witnesses) {
        const char* tag = w.dga == DgaKind::DeRham      ? "derham"
                          : w.dga == DgaKind::Dolbeault ? "dolbeault"
                                                        : "zero-star";
        os << "  " << tag << ": " << massey_inputs_text(w) << " -> ["
           << format_form(w.representative.rep) << "], non-vanishing\n";
    }
    os << "note: verdicts are decided by the abelianness criteria; an empty witness list "
          "does not imply formality, and products beyond triple Massey are not computed\n";
    return os.str();
}

std::string render_verdicts_json(const Model& model, const VerdictReport& verdicts) {
    json j;
    j["name"] = model.name;
    auto v = [](const Verdict& v) {
        json o;
        o["formal"] = v.formal;
        o["reason"] = v.reason;
        return o;
    };
    j["derham_formal"] = v(verdicts.derham_formal);
    j["dolbeault_formal"] = v(verdicts.dolbeault_formal);
    j["zero_star_formal"] = v(verdicts.zero_star_formal);
    j["massey_search_bound"] = verdicts.massey_search_bound;
    json w = json::array();
    for (const auto& r : verdicts.witnesses) w.push_back(massey_json(r));
    j["witnesses"] = std::move(w);
    j["notes"] = {"verdicts are decided by the abelianness criteria, not by the witness search",
                  "an empty witness list does not imply formality",
                  "quadruple and higher Massey products are out of scope"};
    return j.dump(2) + "\n";
}

std::string render_massey_text(const Model& model, const std::string& complex_name,
                               int max_degree, const std::vector<MasseyResult>& hits) {
    std::ostringstream os;
    os << "name: " << model.name << "\n";
    os << "complex: " << complex_name << ", max total degree " << max_degree << "\n";
    os << "defined non-vanishing triple Massey products: " << hits.size() << "\n";
    for (const auto& r : hits) {
        os << "  " << massey_inputs_text(r) << "\n";
        os << "    representative: [" << format_form(r.representative.rep) << "]\n";
        os << "    indeterminacy basis:";
        if (r.indeterminacy_basis.empty()) os << " (zero)";
        for (const auto& cls : r.indeterminacy_basis) os << " [" << format_form(cls.rep) << "]";
        os << "\n";
    }
    os << "note: an empty list does not imply formality\n";
    return os.str();
}

std::string render_massey_json(const Model& model, const std::string& complex_name,
                               int max_degree, const std::vector<MasseyResult>& hits) {
    json j;
    j["name"] = model.name;
    j["complex"] = complex_name;
    j["max_total_degree"] = max_degree;
    json arr = json::array();
    for (const auto& r : hits) arr.push_back(massey_json(r));
    j["witnesses"] = std::move(arr);
    j["notes"] = {"an empty witness list does not imply formality"};
    return j.dump(2) + "\n";
}

namespace {

json pairing_json_one(const PairingReport& rep) {
    json j;
    j["p"] = rep.p;
    j["q"] = rep.q;
    json rows = json::array();
    for (int r = 0; r < rep.matrix.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < rep.matrix.cols(); ++c)
            row.push_back(format_scalar(rep.matrix.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    j["nondegenerate"] = rep.nondegenerate;
    j["top_dim"] = rep.top_dim;
    return j;
}

}  // namespace

std::string render_pairing_text(const Model& model) {
    GradedCohomology dolb = GradedCohomology::dolbeault(model.g, model.cs);
    GradedCohomology zs = GradedCohomology::zero_star(model.g, model.cs);
    int m = dolb.m();
    std::ostringstream os;
    os << "name: " << model.name << "\n";
    os << "Poincare pairing H^{p,q} x H^{" << m << "-p," << m << "-q} -> H^{" << m << ","
       << m << "} (top dim " << dolb.dim({m, m}) << "):\n";
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            PairingReport rep = poincare_pairing(dolb, p, q);
            os << "  (p,q)=(" << p << "," << q << "): " << rep.matrix.rows() << "x"
               << rep.matrix.cols() << ", rank " << rep.matrix.rank() << ", "
               << (rep.nondegenerate ? "nondegenerate" : "DEGENERATE") << "\n";
        }
    os << "(0,*) row pairing H^{0,q} x H^{0," << m << "-q} -> H^{0," << m << "} (top dim "
       << zs.dim({0, m}) << "):\n";
    for (int q = 0; q <= m; ++q) {
        PairingReport rep = poincare_pairing(zs, 0, q);
        os << "  q=" << q << ": " << rep.matrix.rows() << "x" << rep.matrix.cols()
           << ", rank " << rep.matrix.rank() << ", "
           << (rep.nondegenerate ? "nondegenerate" : "DEGENERATE") << "\n";
    }
    return os.str();
}

std::string render_pairing_json(const Model& model) {
    GradedCohomology dolb = GradedCohomology::dolbeault(model.g, model.cs);
    GradedCohomology zs = GradedCohomology::zero_star(model.g, model.cs);
    int m = dolb.m();
    json j;
    j["name"] = model.name;
    j["top_dim"] = dolb.dim({m, m});
    json arr = json::array();
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) arr.push_back(pairing_json_one(poincare_pairing(dolb, p, q)));
    j["pairings"] = std::move(arr);
    json zarr = json::array();
    for (int q = 0; q <= m; ++q) zarr.push_back(pairing_json_one(poincare_pairing(zs, 0, q)));
    j["zero_star_pairings"] = std::move(zarr);
    return j.dump(2) + "\n";
}

std::string render_ddbar_text(const Model& model, const DdbarReport& report) {
    std::ostringstream os;
    os << "name: " << model.name << "\n";
    os << "del-delbar lemma per bidegree (p rows, q columns):\n";
    for (int p = 0; p <= report.m; ++p) {
        os << "  ";
        for (int q = 0; q <= report.m; ++q)
            os << (report.holds[p][q] ? "ok" : "FAIL") << (q == report.m ? "" : " ");
        os << "\n";
    }
    os << "overall: " << (report.overall ? "holds" : "fails") << "\n";
    if (report.witness) {
        os << "witness at (p,q)=(" << report.witness->p << "," << report.witness->q
           << "): " << report.witness->form << " is " << report.witness->condition << "\n";
    }
    return os.str();
}

std::string render_ddbar_json(const Model& model, const DdbarReport& report) {
    json j;
    j["name"] = model.name;
    json rows = json::array();
    for (int p = 0; p <= report.m; ++p) {
        json row = json::array();
        for (int q = 0; q <= report.m; ++q) row.push_back(bool(report.holds[p][q]));
        rows.push_back(std::move(row));
    }
    j["holds"] = std::move(rows);
    j["overall"] = report.overall;
    if (report.witness) {
        json w;
        w["p"] = report.witness->p;
        w["q"] = report.witness->q;
        w["form"] = report.witness->form;
        w["condition"] = report.witness->condition;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j.dump(2) + "\n";
}

}  // namespace nilcohom
