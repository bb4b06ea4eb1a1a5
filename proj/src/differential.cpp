#include "nilcohom/differential.hpp"

#include <stdexcept>

#include "nilcohom/report.hpp"

namespace nilcohom {

Form Differential::apply(const Form& f) const {
    Form out(n_, kind_);
    for (const auto& [s, c] : f.terms()) {
        int pos = 0;
        for (Mono t = s; t; t &= t - 1, ++pos) {
            int gen = std::countr_zero(t);
            const Form& dg = images_[gen];
            if (dg.is_zero()) continue;
            Mono prefix = s & ((Mono(1) << gen) - 1);
            Mono suffix = s & ~((Mono(1) << (gen + 1)) - 1);
            Form term = wedge(Form::monomial(n_, kind_, prefix, c),
                              wedge(dg, Form::monomial(n_, kind_, suffix, GaussianRational(1))));
            if (pos & 1) term = -term;
            out += term;
        }
    }
    return out;
}

bool Differential::squares_to_zero() const {
    for (int t = 0; t < n_; ++t)
        if (!apply(images_[t]).is_zero()) return false;
    return true;
}

Differential ce_differential(const LieAlgebra& g) {
    int n = g.dim();
    std::vector<Form> images(n, Form(n, BasisKind::Real));
    for (const auto& [key, value] : g.constants()) {
        auto [i, j] = key;
        Mono s = (Mono(1) << (i - 1)) | (Mono(1) << (j - 1));
        for (const auto& [k, coeff] : value) {
            Form term = Form::monomial(n, BasisKind::Real, s, -coeff);
            images[k - 1] += term;
        }
    }
    Differential d(n, BasisKind::Real, std::move(images));
    if (!d.squares_to_zero())
        throw std::logic_error("d^2 != 0 for a validated Lie algebra");
    return d;
}

namespace {

// d of every bigraded coframe generator, before splitting by shift.
std::vector<Form> bigraded_d_images(const LieAlgebra& g, const ComplexStructure& cs) {
    int n = g.dim();
    int m = cs.m();

    // Q rows: omega^1..omega^m then conjugates, as covectors over e^1..e^n
    Matrix Q(n, n);
    for (int a = 0; a < m; ++a)
        for (int c = 0; c < n; ++c) {
            Q.at(a, c) = cs.coframe10().at(a, c);
            Q.at(m + a, c) = cs.coframe01().at(a, c);
        }
    Matrix Qinv = Q.inverse();

    // e^i as a bigraded 1-form: row i of Q^-1
    std::vector<Form> e_images;
    for (int i = 0; i < n; ++i) {
        Form img(n, BasisKind::Bigraded);
        for (int jj = 0; jj < n; ++jj)
            img += Form::monomial(n, BasisKind::Bigraded, Mono(1) << jj, Qinv.at(i, jj));
        e_images.push_back(std::move(img));
    }

    Differential d = ce_differential(g);
    std::vector<Form> out;
    for (int j = 0; j < n; ++j) {
        Form df_real(n, BasisKind::Real);
        for (int k = 0; k < n; ++k) {
            if (Q.at(j, k).is_zero()) continue;
            df_real += Q.at(j, k) * d.generator_image(k);
        }
        out.push_back(substitute(df_real, e_images, n, BasisKind::Bigraded));
    }
    return out;
}

}  // namespace

Differential complexified_ce(const LieAlgebra& g, const ComplexStructure& cs) {
    return Differential(g.dim(), BasisKind::Bigraded, bigraded_d_images(g, cs));
}

HodgeSplit hodge_split(const LieAlgebra& g, const ComplexStructure& cs) {
    if (g.dim() != cs.n())
        throw ValidationError("complex structure dimension does not match algebra",
                              "complex_structure");
    int n = g.dim();
    int m = cs.m();
    std::vector<Form> d_images = bigraded_d_images(g, cs);

    std::vector<Form> del_images, delbar_images, dc_images;
    for (int j = 0; j < n; ++j) {
        bool barred = j >= m;
        Form bad = bidegree_project(d_images[j], barred ? 2 : 0, barred ? 0 : 2);
        if (!bad.is_zero()) {
            std::string gen = barred ? "Wbar" + std::to_string(j - m + 1)
                                     : "w" + std::to_string(j + 1);
            throw NotIntegrable("d " + gen + " has a " + (barred ? "(2,0)" : "(0,2)") +
                                " component " + format_form(bad));
        }
        Form del_part = bidegree_project(d_images[j], barred ? 1 : 2, barred ? 1 : 0);
        Form delbar_part = bidegree_project(d_images[j], barred ? 0 : 1, barred ? 2 : 1);
        Form dc_part = GaussianRational::i() * (delbar_part - del_part);
        del_images.push_back(std::move(del_part));
        delbar_images.push_back(std::move(delbar_part));
        dc_images.push_back(std::move(dc_part));
    }

    HodgeSplit split{
        Differential(n, BasisKind::Bigraded, std::move(del_images), {{1, 0}}),
        Differential(n, BasisKind::Bigraded, std::move(delbar_images), {{0, 1}}),
        Differential(n, BasisKind::Bigraded, std::move(dc_images), std::nullopt)};

    if (!split.del.squares_to_zero() || !split.delbar.squares_to_zero())
        throw std::logic_error("Hodge components do not square to zero");
    for (int j = 0; j < n; ++j) {
        Form anti = split.del.apply(split.delbar.generator_image(j)) +
                    split.delbar.apply(split.del.generator_image(j));
        if (!anti.is_zero())
            throw std::logic_error("del and delbar do not anticommute");
    }
    return split;
}

Form complex_structure_action(const Form& f, bool inverse) {
    if (f.kind() != BasisKind::Bigraded)
        throw WrongBasis("complex structure action needs the bigraded basis");
    Form out(f.n(), BasisKind::Bigraded);
    for (const auto& [s, c] : f.terms()) {
        auto [p, q] = f.bidegree_of(s);
        int e = ((q - p) % 4 + 4) % 4;  // i^(q-p)
        if (inverse) e = (4 - e) % 4;
        GaussianRational factor;
        switch (e) {
            case 0: factor = GaussianRational(1); break;
            case 1: factor = GaussianRational::i(); break;
            case 2: factor = GaussianRational(-1); break;
            default: factor = -GaussianRational::i(); break;
        }
        out.set(s, factor * c);
    }
    return out;
}

}  // namespace nilcohom
