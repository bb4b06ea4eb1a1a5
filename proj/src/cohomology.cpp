#include "nilcohom/cohomology.hpp"

#include <atomic>
#include <stdexcept>

#include "nilcohom/report.hpp"

namespace nilcohom {

namespace {

std::atomic<long> next_table_id{1};

struct SliceCohomologyData {
    RowSpan image{0};
    std::vector<Vec> rep_coords;
};

// Representatives: reduced-echelon kernel vectors of D_out, reduced modulo
// the echelon image basis, keeping those independent in the quotient.
SliceCohomologyData slice_cohomology(int ambient, const Matrix& D_out,
                                     const std::vector<Vec>& image_generators) {
    SliceCohomologyData data{RowSpan(ambient), {}};
    for (const Vec& v : image_generators) data.image.add(v);
    RowSpan total = data.image;
    for (const Vec& z : D_out.kernel_basis())
        if (total.add(z)) data.rep_coords.push_back(data.image.reduce(z));
    return data;
}

}  // namespace

PlainCohomology complex_cohomology(const CochainComplex& cx) {
    int len = int(cx.dims.size());
    for (int k = 0; k + 1 < len && k + 1 < int(cx.D.size()); ++k) {
        if (cx.D[k].rows() == 0 || cx.D[k + 1].cols() == 0) continue;
        if (!(cx.D[k + 1] * cx.D[k]).is_zero()) throw NotAComplex(k);
    }
    PlainCohomology out;
    for (int k = 0; k < len; ++k) {
        Matrix D_out = (k < int(cx.D.size())) ? cx.D[k] : Matrix(0, cx.dims[k]);
        std::vector<Vec> image_cols;
        if (k > 0 && k - 1 < int(cx.D.size()))
            for (int c = 0; c < cx.D[k - 1].cols(); ++c)
                image_cols.push_back(cx.D[k - 1].column(c));
        auto data = slice_cohomology(cx.dims[k], D_out, image_cols);
        out.dims.push_back(int(data.rep_coords.size()));
        out.representatives.push_back(std::move(data.rep_coords));
    }
    return out;
}

Matrix operator_matrix(const Differential& D, const std::vector<Mono>& from_basis,
                       const std::vector<Mono>& to_basis, int n, BasisKind kind) {
    std::map<Mono, int, MonoLess> to_index;
    for (int i = 0; i < int(to_basis.size()); ++i) to_index[to_basis[i]] = i;
    Matrix mat(int(to_basis.size()), int(from_basis.size()));
    for (int c = 0; c < int(from_basis.size()); ++c) {
        Form img = D.apply(Form::monomial(n, kind, from_basis[c], GaussianRational(1)));
        for (const auto& [s, coeff] : img.terms()) {
            auto it = to_index.find(s);
            if (it == to_index.end())
                throw std::logic_error("differential image leaves the graded slice");
            mat.at(it->second, c) = coeff;
        }
    }
    return mat;
}

GradedCohomology::GradedCohomology(DgaKind kind, BasisKind basis_kind, int n, Grade shift,
                                   Grade top, std::vector<Grade> order, Differential diff)
    : dga_kind_(kind), basis_kind_(basis_kind), n_(n), shift_(shift), top_(top),
      grade_order_(std::move(order)), diff_(std::move(diff)),
      id_(next_table_id.fetch_add(1)) {
    build();
}

GradedCohomology GradedCohomology::derham(const LieAlgebra& g) {
    if (g.dim() > kDimensionCap) throw DimensionCap(g.dim(), kDimensionCap);
    std::vector<Grade> order;
    for (int k = 0; k <= g.dim(); ++k) order.push_back({k, 0});
    return GradedCohomology(DgaKind::DeRham, BasisKind::Real, g.dim(), {1, 0},
                            {g.dim(), 0}, std::move(order), ce_differential(g));
}

GradedCohomology GradedCohomology::dolbeault(const LieAlgebra& g, const ComplexStructure& cs) {
    if (g.dim() > kDimensionCap) throw DimensionCap(g.dim(), kDimensionCap);
    int m = cs.m();
    std::vector<Grade> order;
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) order.push_back({p, q});
    return GradedCohomology(DgaKind::Dolbeault, BasisKind::Bigraded, g.dim(), {0, 1},
                            {m, m}, std::move(order), hodge_split(g, cs).delbar);
}

GradedCohomology GradedCohomology::zero_star(const LieAlgebra& g, const ComplexStructure& cs) {
    if (g.dim() > kDimensionCap) throw DimensionCap(g.dim(), kDimensionCap);
    int m = cs.m();
    std::vector<Grade> order;
    for (int q = 0; q <= m; ++q) order.push_back({0, q});
    return GradedCohomology(DgaKind::ZeroStar, BasisKind::Bigraded, g.dim(), {0, 1},
                            {0, m}, std::move(order), hodge_split(g, cs).delbar);
}

void GradedCohomology::build() {
    int m = n_ / 2;
    // monomial bases and slice-to-slice matrices
    for (Grade g : grade_order_) {
        Slice s;
        s.basis = basis_kind_ == BasisKind::Real
                      ? monomials_of_degree(n_, g.first)
                      : monomials_of_bidegree(m, g.first, g.second);
        for (int i = 0; i < int(s.basis.size()); ++i) s.index[s.basis[i]] = i;
        slices_[g] = std::move(s);
    }
    for (Grade g : grade_order_) {
        Slice& s = slices_[g];
        Grade next = g + shift_;
        std::vector<Mono> next_basis =
            has(next) ? slices_[next].basis : std::vector<Mono>{};
        s.D_out = operator_matrix(*diff_, s.basis, next_basis, n_, basis_kind_);
    }
    // validate the complex before reading off cohomology
    for (Grade g : grade_order_) {
        Grade next = g + shift_;
        if (!has(next)) continue;
        if (!(slices_[next].D_out * slices_[g].D_out).is_zero())
            throw NotAComplex(total_degree(g));
    }
    for (Grade g : grade_order_) {
        Slice& s = slices_[g];
        std::vector<Vec> image_cols;
        Grade prev = g - shift_;
        if (has(prev)) {
            const Matrix& D_in = slices_[prev].D_out;
            for (int c = 0; c < D_in.cols(); ++c) image_cols.push_back(D_in.column(c));
        }
        auto data = slice_cohomology(int(s.basis.size()), s.D_out, image_cols);
        s.image = std::move(data.image);
        s.rep_coords = std::move(data.rep_coords);
        s.h = int(s.rep_coords.size());
        for (const Vec& rc : s.rep_coords) s.reps.push_back(slice_form(g, rc));

        std::vector<Vec> cols;
        for (const Vec& r : s.image.rows()) cols.push_back(r);
        for (const Vec& r : s.rep_coords) cols.push_back(r);
        s.coord_matrix = Matrix::from_columns(cols, int(s.basis.size()));
    }
}

const GradedCohomology::Slice& GradedCohomology::slice(Grade g) const {
    auto it = slices_.find(g);
    if (it == slices_.end()) throw std::logic_error("grade outside the table");
    return it->second;
}

int GradedCohomology::dim(Grade g) const {
    auto it = slices_.find(g);
    return it == slices_.end() ? 0 : it->second.h;
}

const std::vector<Form>& GradedCohomology::representatives(Grade g) const {
    return slice(g).reps;
}

Vec GradedCohomology::slice_coords(Grade g, const Form& f) const {
    const Slice& s = slice(g);
    Vec v(s.basis.size());
    for (const auto& [mono, c] : f.terms()) {
        auto it = s.index.find(mono);
        if (it == s.index.end())
            throw std::logic_error("form does not lie in the graded slice");
        v[it->second] = c;
    }
    return v;
}

Form GradedCohomology::slice_form(Grade g, const Vec& coords) const {
    const Slice& s = slice(g);
    Form f(n_, basis_kind_);
    for (int i = 0; i < int(coords.size()); ++i)
        if (!coords[i].is_zero()) f.set(s.basis[i], coords[i]);
    return f;
}

const std::vector<Mono>& GradedCohomology::slice_basis(Grade g) const {
    return slice(g).basis;
}

bool GradedCohomology::is_closed(Grade g, const Form& f) const {
    (void)g;
    return diff_->apply(f).is_zero();
}

CohomologyClass GradedCohomology::basis_class(Grade g, int idx) const {
    const Slice& s = slice(g);
    CohomologyClass cls;
    cls.grade = g;
    cls.rep = s.reps.at(idx);
    cls.coords = Vec(s.h);
    cls.coords[idx] = GaussianRational(1);
    cls.class_id = idx;
    cls.table_id = id_;
    return cls;
}

CohomologyClass GradedCohomology::class_of(const Form& f, Grade g) const {
    CohomologyClass cls;
    cls.grade = g;
    cls.rep = f;
    cls.table_id = id_;
    if (!has(g)) {
        if (!f.is_zero()) throw std::logic_error("nonzero form in an absent grade");
        return cls;  // zero class, empty coordinates
    }
    const Slice& s = slice(g);
    if (!diff_->apply(f).is_zero())
        throw std::logic_error("class_of: form is not closed");
    Vec v = slice_coords(g, f);
    Vec x;
    if (s.coord_matrix.cols() == 0) {
        x = Vec();
    } else {
        auto sol = s.coord_matrix.solve(v);
        if (!sol) throw std::logic_error("closed form not in ker(D)");
        x = *sol;
    }
    cls.coords = Vec(s.h);
    int offset = int(s.image.rows().size());
    for (int i = 0; i < s.h; ++i) cls.coords[i] = x[offset + i];
    // identify basis classes
    int hits = 0, hit_idx = -1;
    for (int i = 0; i < s.h; ++i) {
        if (cls.coords[i].is_zero()) continue;
        ++hits;
        hit_idx = i;
    }
    if (hits == 1 && cls.coords[hit_idx] == GaussianRational(1)) cls.class_id = hit_idx;
    return cls;
}

CohomologyClass GradedCohomology::cup(const CohomologyClass& a, const CohomologyClass& b) const {
    if (a.table_id != id_ || b.table_id != id_) throw TableMismatch();
    return class_of(wedge(a.rep, b.rep), a.grade + b.grade);
}

std::optional<Form> GradedCohomology::primitive(Grade target, const Form& f) const {
    Grade source = target - shift_;
    if (!has(target) || !has(source)) {
        if (f.is_zero()) return Form(n_, basis_kind_);
        return std::nullopt;
    }
    const Slice& src = slice(source);
    auto x = src.D_out.solve(slice_coords(target, f));
    if (!x) return std::nullopt;
    return slice_form(source, *x);
}

std::vector<int> betti_numbers(const LieAlgebra& g) {
    GradedCohomology t = GradedCohomology::derham(g);
    std::vector<int> out;
    for (int k = 0; k <= g.dim(); ++k) out.push_back(t.dim({k, 0}));
    return out;
}

std::vector<std::vector<int>> hodge_numbers(const LieAlgebra& g,
                                            const ComplexStructure& cs) {
    GradedCohomology t = GradedCohomology::dolbeault(g, cs);
    std::vector<std::vector<int>> out;
    for (int p = 0; p <= t.m(); ++p) {
        std::vector<int> row;
        for (int q = 0; q <= t.m(); ++q) row.push_back(t.dim({p, q}));
        out.push_back(std::move(row));
    }
    return out;
}

PairingReport poincare_pairing(const GradedCohomology& table, int p, int q) {
    Grade top = table.top_grade();
    Grade g{p, q};
    Grade comp = top - g;
    PairingReport rep;
    rep.p = p;
    rep.q = q;
    rep.top_dim = table.dim(top);
    if (rep.top_dim != 1) throw TopNotOneDimensional(rep.top_dim);

    int h1 = table.dim(g), h2 = table.dim(comp);
    rep.matrix = Matrix(h1, h2);
    for (int r = 0; r < h1; ++r)
        for (int c = 0; c < h2; ++c) {
            CohomologyClass prod =
                table.cup(table.basis_class(g, r), table.basis_class(comp, c));
            rep.matrix.at(r, c) = prod.coords.empty() ? GaussianRational(0) : prod.coords[0];
        }
    rep.nondegenerate = (h1 == h2) && rep.matrix.rank() == h1;
    return rep;
}

DdbarReport check_ddbar_lemma(const LieAlgebra& g, const ComplexStructure& cs) {
    if (g.dim() > kDimensionCap) throw DimensionCap(g.dim(), kDimensionCap);
    HodgeSplit split = hodge_split(g, cs);
    int n = g.dim(), m = cs.m();

    auto basis = [&](int p, int q) { return monomials_of_bidegree(m, p, q); };
    auto mat = [&](const Differential& D, int p1, int q1, int p2, int q2) {
        return operator_matrix(D, basis(p1, q1), basis(p2, q2), n, BasisKind::Bigraded);
    };

    DdbarReport report;
    report.m = m;
    report.holds.assign(m + 1, std::vector<bool>(m + 1, true));

    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            int dim_pq = int(basis(p, q).size());

            // im(del delbar) from (p-1, q-1)
            RowSpan ddbar_image(dim_pq);
            if (p >= 1 && q >= 1) {
                Matrix step1 = mat(split.delbar, p - 1, q - 1, p - 1, q);
                Matrix step2 = mat(split.del, p - 1, q, p, q);
                Matrix composed = step2 * step1;
                for (int c = 0; c < composed.cols(); ++c)
                    ddbar_image.add(composed.column(c));
            }

            auto check = [&](const Differential& exact_by, int sp, int sq,
                             const Differential& closed_under, int tp, int tq,
                             const char* label) -> std::optional<Vec> {
                // intersection of im(exact_by) with ker(closed_under)
                RowSpan image(dim_pq);
                if (sp >= 0 && sq >= 0) {
                    Matrix in = mat(exact_by, sp, sq, p, q);
                    for (int c = 0; c < in.cols(); ++c) image.add(in.column(c));
                }
                if (image.dim() == 0) return std::nullopt;
                Matrix out = mat(closed_under, p, q, tp, tq);
                Matrix C = Matrix::from_columns(image.rows(), dim_pq);
                Matrix composed = out * C;
                for (const Vec& k : composed.kernel_basis()) {
                    Vec member = C.apply(k);
                    if (!ddbar_image.contains(member)) {
                        if (!report.witness) {
                            Form w(n, BasisKind::Bigraded);
                            const auto& bs = basis(p, q);
                            for (int i = 0; i < dim_pq; ++i)
                                if (!member[i].is_zero()) w.set(bs[i], member[i]);
                            report.witness = {p, q, format_form(w), label};
                        }
                        return member;
                    }
                }
                return std::nullopt;
            };

            bool fail1 = check(split.delbar, p, q - 1, split.del, p + 1, q,
                               "delbar-exact and del-closed, not in im(del delbar)")
                             .has_value();
            bool fail2 = check(split.del, p - 1, q, split.delbar, p, q + 1,
                               "del-exact and delbar-closed, not in im(del delbar)")
                             .has_value();
            if (fail1 || fail2) {
                report.holds[p][q] = false;
                report.overall = false;
            }
        }
    return report;
}

}  // namespace nilcohom
