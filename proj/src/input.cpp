#include "nilcohom/input.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nilcohom/differential.hpp"
#include "nilcohom/report.hpp"

namespace nilcohom {

using json = nlohmann::ordered_json;

namespace {

std::string scalar_string(const json& j, const std::string& path) {
    if (!j.is_string())
        throw ValidationError("scalar values must be strings under the scalar grammar, "
                              "never native numbers",
                              path);
    return j.get<std::string>();
}

int int_field(const json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ValidationError("missing or non-integer field", path + "/" + key);
    return j[key].get<int>();
}

Rational real_scalar(const std::string& text, const std::string& path) {
    GaussianRational z = [&] {
        try {
            return parse_scalar(text);
        } catch (const ParseError& e) {
            throw ValidationError(e.what(), path);
        }
    }();
    if (!z.is_real())
        throw ValidationError("entry must be a real rational, got '" + text + "'", path);
    return z.re();
}

}  // namespace

InputDocument parse_document(const std::string& json_text, const std::string& origin) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), origin + " (byte " + std::to_string(e.byte) + ")");
    }
    if (!j.is_object()) throw ValidationError("top level must be an object", origin);

    InputDocument doc;
    if (!j.contains("name") || !j["name"].is_string())
        throw ValidationError("missing string field", "/name");
    doc.name = j["name"].get<std::string>();
    doc.dim = int_field(j, "dim", "");
    if (doc.dim < 1) throw ValidationError("dim must be >= 1", "/dim");

    if (!j.contains("brackets") || !j["brackets"].is_array())
        throw ValidationError("missing array field", "/brackets");
    int bi = 0;
    for (const auto& b : j["brackets"]) {
        std::string path = "/brackets/" + std::to_string(bi++);
        BracketEntry entry;
        entry.x = int_field(b, "x", path);
        entry.y = int_field(b, "y", path);
        if (entry.x == entry.y)
            throw ValidationError("bracket with x = y", path);
        if (entry.x > entry.y)
            throw ValidationError("bracket entries must have x < y", path);
        if (entry.x < 1 || entry.y > doc.dim)
            throw ValidationError("bracket index out of range", path);
        if (!b.contains("value") || !b["value"].is_object())
            throw ValidationError("missing object field", path + "/value");
        for (const auto& [key, val] : b["value"].items()) {
            int k = 0;
            try {
                size_t used = 0;
                k = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ValidationError("value key must be a basis index", path + "/value/" + key);
            }
            if (k < 1 || k > doc.dim)
                throw ValidationError("value index out of range", path + "/value/" + key);
            entry.value.emplace_back(k, scalar_string(val, path + "/value/" + key));
        }
        doc.brackets.push_back(std::move(entry));
    }

    if (!j.contains("complex_structure") || !j["complex_structure"].is_object())
        throw ValidationError("missing object field", "/complex_structure");
    const json& cs = j["complex_structure"];
    if (!cs.contains("kind") || !cs["kind"].is_string())
        throw ValidationError("missing string field", "/complex_structure/kind");
    std::string kind = cs["kind"].get<std::string>();

    if (kind == "endomorphism") {
        doc.cs_kind = CsKind::Endomorphism;
        if (!cs.contains("matrix") || !cs["matrix"].is_array())
            throw ValidationError("missing array field", "/complex_structure/matrix");
        int ri = 0;
        for (const auto& row : cs["matrix"]) {
            std::string path = "/complex_structure/matrix/" + std::to_string(ri++);
            if (!row.is_array() || int(row.size()) != doc.dim)
                throw ValidationError("matrix row must have dim entries", path);
            std::vector<std::string> r;
            for (const auto& cell : row) r.push_back(scalar_string(cell, path));
            doc.matrix.push_back(std::move(r));
        }
        if (int(doc.matrix.size()) != doc.dim)
            throw ValidationError("matrix must have dim rows", "/complex_structure/matrix");
    } else if (kind == "coframe") {
        doc.cs_kind = CsKind::Coframe;
        if (doc.dim % 2 != 0)
            throw ValidationError("coframe input needs even dim", "/dim");
        if (!cs.contains("equations") || !cs["equations"].is_array())
            throw ValidationError("missing array field", "/complex_structure/equations");
        if (int(cs["equations"].size()) != doc.dim / 2)
            throw ValidationError("need one equation list per generator (dim/2)",
                                  "/complex_structure/equations");
        int ei = 0;
        for (const auto& eq : cs["equations"]) {
            std::string path = "/complex_structure/equations/" + std::to_string(ei++);
            if (!eq.is_array())
                throw ValidationError("equation must be an array of terms", path);
            std::vector<CoframeTerm> terms;
            int ti = 0;
            for (const auto& t : eq) {
                std::string tpath = path + "/" + std::to_string(ti++);
                if (!t.is_object() || !t.contains("coeff") || !t.contains("monomial"))
                    throw ValidationError("term needs coeff and monomial", tpath);
                terms.push_back({scalar_string(t["coeff"], tpath + "/coeff"),
                                 scalar_string(t["monomial"], tpath + "/monomial")});
            }
            doc.equations.push_back(std::move(terms));
        }
    } else {
        throw ValidationError("kind must be 'endomorphism' or 'coframe'",
                              "/complex_structure/kind");
    }
    return doc;
}

InputDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path);
}

std::string document_to_json(const InputDocument& doc) {
    json j;
    j["name"] = doc.name;
    j["dim"] = doc.dim;
    j["brackets"] = json::array();
    for (const auto& b : doc.brackets) {
        json e;
        e["x"] = b.x;
        e["y"] = b.y;
        json v = json::object();
        for (const auto& [k, s] : b.value) v[std::to_string(k)] = s;
        e["value"] = std::move(v);
        j["brackets"].push_back(std::move(e));
    }
    json cs;
    if (doc.cs_kind == CsKind::Endomorphism) {
        cs["kind"] = "endomorphism";
        cs["matrix"] = doc.matrix;
    } else {
        cs["kind"] = "coframe";
        json eqs = json::array();
        for (const auto& eq : doc.equations) {
            json terms = json::array();
            for (const auto& t : eq)
                terms.push_back({{"coeff", t.coeff}, {"monomial", t.monomial}});
            eqs.push_back(std::move(terms));
        }
        cs["equations"] = std::move(eqs);
    }
    j["complex_structure"] = std::move(cs);
    return j.dump(2) + "\n";
}

Mono parse_mono(const std::string& text, int m) {
    if (text.empty()) throw ParseError("empty monomial", "monomial");
    Mono s = 0;
    int last_in_kind = 0;
    bool barred = false, seen_barred = false, have_kind = false;
    size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == '^') {
            ++pos;
            continue;
        }
        if (c == 'w' || c == 'W') {
            bool next_barred = c == 'W';
            if (seen_barred && !next_barred)
                throw ParseError("unbarred generator after a barred one in '" + text + "'",
                                 "monomial");
            if (!have_kind || next_barred != barred) last_in_kind = 0;
            barred = next_barred;
            seen_barred |= next_barred;
            have_kind = true;
            ++pos;
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected index digits after '" + std::string(1, c) +
                                     "' in '" + text + "'",
                                 "monomial");
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (!have_kind)
                throw ParseError("monomial must start with 'w' or 'W'", "monomial");
            int idx = c - '0';
            if (idx < 1 || idx > m)
                throw ParseError("index " + std::to_string(idx) + " out of range 1.." +
                                     std::to_string(m) + " in '" + text + "'",
                                 "monomial");
            if (idx <= last_in_kind)
                throw ParseError("indices must be strictly increasing in '" + text + "'",
                                 "monomial");
            last_in_kind = idx;
            s |= Mono(1) << (barred ? m + idx - 1 : idx - 1);
            ++pos;
            continue;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + text + "'",
                         "monomial");
    }
    if (s == 0) throw ParseError("empty monomial '" + text + "'", "monomial");
    return s;
}

namespace {

StructureConstants brackets_to_constants(const InputDocument& doc) {
    StructureConstants c;
    for (const auto& b : doc.brackets) {
        std::map<int, GaussianRational> entry;
        for (const auto& [k, s] : b.value) {
            GaussianRational z;
            try {
                z = parse_scalar(s);
            } catch (const ParseError& e) {
                throw ValidationError(e.what(), "brackets value for [e" + std::to_string(b.x) +
                                                    ",e" + std::to_string(b.y) + "]");
            }
            if (!z.is_zero()) entry[k] = z;
        }
        if (entry.empty()) continue;
        auto [it, fresh] = c.emplace(std::make_pair(b.x, b.y), std::move(entry));
        if (!fresh)
            throw ValidationError("duplicate bracket entry [e" + std::to_string(b.x) + ",e" +
                                      std::to_string(b.y) + "]",
                                  "/brackets");
    }
    return c;
}

// block-diagonal standard structure J e_{2a-1} = e_{2a}
std::vector<std::vector<Rational>> standard_block_J(int n) {
    std::vector<std::vector<Rational>> J(n, std::vector<Rational>(n, Rational(0)));
    for (int a = 0; a < n / 2; ++a) {
        J[2 * a + 1][2 * a] = 1;   // column 2a: J e_{2a+1} = e_{2a+2}
        J[2 * a][2 * a + 1] = -1;  // column 2a+1: J e_{2a+2} = -e_{2a+1}
    }
    return J;
}

Model build_from_coframe(const InputDocument& doc) {
    int n = doc.dim;
    int m = n / 2;

    // d omega^a from the equations, as bigraded forms
    std::vector<Form> d_omega;
    for (int a = 0; a < m; ++a) {
        Form f(n, BasisKind::Bigraded);
        for (const auto& term : doc.equations[a]) {
            std::string where =
                "/complex_structure/equations/" + std::to_string(a);
            GaussianRational coeff;
            try {
                coeff = parse_scalar(term.coeff);
            } catch (const ParseError& e) {
                throw ValidationError(e.what(), where);
            }
            Mono s;
            try {
                s = parse_mono(term.monomial, m);
            } catch (const ParseError& e) {
                throw ValidationError(e.what(), where);
            }
            if (mono_degree(s) != 2)
                throw ValidationError("coframe equation terms must be degree-2 monomials",
                                      where);
            f += Form::monomial(n, BasisKind::Bigraded, s, coeff);
        }
        d_omega.push_back(std::move(f));
    }

    // omega^a = e^{2a-1} + i e^{2a}; conjugates for the barred generators
    std::vector<Form> omega_to_real;
    for (int a = 0; a < m; ++a) {
        Form f(n, BasisKind::Real);
        f += Form::monomial(n, BasisKind::Real, Mono(1) << (2 * a), GaussianRational(1));
        f += Form::monomial(n, BasisKind::Real, Mono(1) << (2 * a + 1), GaussianRational::i());
        omega_to_real.push_back(std::move(f));
    }
    for (int a = 0; a < m; ++a) omega_to_real.push_back(omega_to_real[a].conj());

    // d e^{2a-1} = (d omega^a + conj)/2, d e^{2a} = (d omega^a - conj)/(2i),
    // pushed down to the real coframe
    GaussianRational half(Rational(1, 2));
    GaussianRational half_over_i = GaussianRational(Rational(0), Rational(-1, 2));  // 1/(2i)
    StructureConstants constants;
    for (int a = 0; a < m; ++a) {
        Form conj_da = d_omega[a].conj();
        Form de_odd = half * (d_omega[a] + conj_da);
        Form de_even = half_over_i * (d_omega[a] - conj_da);
        for (int which = 0; which < 2; ++which) {
            int k = 2 * a + which;  // 0-based real index
            Form real_form = substitute(which == 0 ? de_odd : de_even, omega_to_real, n,
                                        BasisKind::Real);
            for (const auto& [s, coeff] : real_form.terms()) {
                if (!coeff.is_real())
                    throw std::logic_error("coframe conversion produced complex structure "
                                           "constants");
                int i = std::countr_zero(s);
                int jj = std::countr_zero(s & (s - 1));
                constants[{i + 1, jj + 1}][k + 1] = -coeff;  // d e^k = -sum c^k_ij e^ij
            }
        }
    }

    LieAlgebra g = LieAlgebra::validate(n, constants);
    ComplexStructure cs = ComplexStructure::from_endomorphism(standard_block_J(n));

    // round-trip: the split of the converted algebra must reproduce the input
    HodgeSplit split = hodge_split(g, cs);
    for (int a = 0; a < m; ++a) {
        Form rederived = split.del.generator_image(a) + split.delbar.generator_image(a);
        if (!(rederived == d_omega[a]))
            throw ValidationError(
                "coframe round-trip mismatch for generator w" + std::to_string(a + 1) +
                    ": input d = " + format_form(d_omega[a]) +
                    ", re-derived d = " + format_form(rederived),
                "/complex_structure/equations");
    }
    return Model{doc.name, std::move(g), std::move(cs)};
}

}  // namespace

Model build_model(const InputDocument& doc) {
    if (doc.cs_kind == CsKind::Coframe) {
        Model model = build_from_coframe(doc);
        if (!doc.brackets.empty()) {
            // brackets are redundant in coframe mode; if present they must agree
            StructureConstants given = brackets_to_constants(doc);
            if (given != model.g.constants())
                throw ValidationError("brackets disagree with the coframe equations",
                                      "/brackets");
        }
        lower_central_series(model.g);  // upstream nilpotency rejection
        return model;
    }

    StructureConstants constants = brackets_to_constants(doc);
    LieAlgebra g = LieAlgebra::validate(doc.dim, constants);
    lower_central_series(g);  // upstream nilpotency rejection

    std::vector<std::vector<Rational>> J;
    for (int r = 0; r < doc.dim; ++r) {
        std::vector<Rational> row;
        for (int c = 0; c < doc.dim; ++c)
            row.push_back(real_scalar(doc.matrix[r][c],
                                      "/complex_structure/matrix/" + std::to_string(r) + "/" +
                                          std::to_string(c)));
        J.push_back(std::move(row));
    }
    ComplexStructure cs = ComplexStructure::from_endomorphism(std::move(J));
    if (cs.n() != g.dim())
        throw ValidationError("complex structure size does not match dim",
                              "/complex_structure/matrix");
    return Model{doc.name, std::move(g), std::move(cs)};
}

}  // namespace nilcohom
