#include "nilcohom/complex_structure.hpp"

#include <sstream>
#include <stdexcept>

namespace nilcohom {

namespace {

// Reduced echelon basis (leading coefficients 1) of ker(A - i*id) for a
// rational matrix A, as rows of an m x n matrix over Q(i).
Matrix plus_i_eigenspace(const std::vector<std::vector<Rational>>& A) {
    int n = int(A.size());
    Matrix shifted(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            shifted.at(r, c) = GaussianRational(A[r][c]);
            if (r == c) shifted.at(r, c) -= GaussianRational::i();
        }
    RowSpan span(n);
    for (const Vec& v : shifted.kernel_basis()) span.add(v);
    return Matrix::from_rows(span.rows());
}

Matrix conjugate_rows(const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c).conj();
    return out;
}

std::string format_vector(const Vec& v, const std::vector<std::string>& labels) {
    std::ostringstream os;
    bool first = true;
    for (size_t c = 0; c < v.size(); ++c) {
        if (v[c].is_zero()) continue;
        if (!first) os << " + ";
        os << format_scalar(v[c]) << "*" << labels[c];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

ComplexStructure ComplexStructure::from_endomorphism(std::vector<std::vector<Rational>> J) {
    int n = int(J.size());
    if (n == 0) throw ValidationError("empty matrix", "complex_structure.matrix");
    if (n % 2 != 0) throw OddDimension(n);
    for (const auto& row : J)
        if (int(row.size()) != n)
            throw ValidationError("matrix is not square", "complex_structure.matrix");

    // J^2 = -id, checked exactly
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Rational acc = 0;
            for (int k = 0; k < n; ++k) acc += J[r][k] * J[k][c];
            Rational expected = (r == c) ? Rational(-1) : Rational(0);
            if (acc != expected)
                throw ValidationError("J^2 != -identity at entry (" + std::to_string(r + 1) +
                                          "," + std::to_string(c + 1) + ")",
                                      "complex_structure.matrix");
        }

    ComplexStructure cs;
    cs.n_ = n;
    cs.vec10_ = plus_i_eigenspace(J);
    cs.vec01_ = conjugate_rows(cs.vec10_);

    std::vector<std::vector<Rational>> Jt(n, std::vector<Rational>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) Jt[c][r] = J[r][c];
    cs.cof10_ = plus_i_eigenspace(Jt);
    cs.cof01_ = conjugate_rows(cs.cof10_);
    cs.J_ = std::move(J);

    if (cs.vec10_.rows() != n / 2 || cs.cof10_.rows() != n / 2)
        throw std::logic_error("eigenspace of J has wrong dimension");
    return cs;
}

bool check_integrability(const LieAlgebra& g, const ComplexStructure& cs) {
    if (g.dim() % 2 != 0) throw OddDimension(g.dim());
    if (g.dim() != cs.n())
        throw ValidationError("complex structure dimension does not match algebra",
                              "complex_structure");
    int m = cs.m();
    RowSpan span10(g.dim());
    for (int a = 0; a < m; ++a) span10.add(cs.vectors10().row(a));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            Vec br = g.bracket(cs.vectors10().row(a), cs.vectors10().row(b));
            if (!span10.contains(br)) return false;
        }
    return true;
}

ClassificationReport classify(const LieAlgebra& g, const ComplexStructure& cs) {
    int m = cs.m();
    ClassificationReport rep;
    rep.integrable = check_integrability(g, cs);
    if (!rep.integrable) {
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                Vec br = g.bracket(cs.vectors10().row(a), cs.vectors10().row(b));
                RowSpan span10(g.dim());
                for (int r = 0; r < m; ++r) span10.add(cs.vectors10().row(r));
                if (!span10.contains(br))
                    throw NotIntegrable("[X" + std::to_string(a + 1) + ", X" +
                                        std::to_string(b + 1) + "] = " +
                                        format_vector(br, g.labels()) +
                                        " is not in g^{1,0}");
            }
    }

    rep.abelian_cs = true;
    for (int a = 0; a < m && rep.abelian_cs; ++a)
        for (int b = a + 1; b < m && rep.abelian_cs; ++b)
            rep.abelian_cs =
                is_zero_vec(g.bracket(cs.vectors10().row(a), cs.vectors10().row(b)));

    rep.bi_invariant = true;
    for (int a = 0; a < m && rep.bi_invariant; ++a)
        for (int b = 0; b < m && rep.bi_invariant; ++b)
            rep.bi_invariant =
                is_zero_vec(g.bracket(cs.vectors01().row(a), cs.vectors10().row(b)));

    rep.rational = cs.is_rational();

    LowerCentralSeries lcs = lower_central_series(g);
    rep.nilpotency_class = lcs.nilpotency_class;
    rep.lcs_dims = std::move(lcs.dims);
    return rep;
}

LieAlgebra dolbeault_bracket(const LieAlgebra& g, const ComplexStructure& cs) {
    if (!check_integrability(g, cs))
        classify(g, cs);  // raises NotIntegrable with a witness
    int n = g.dim();
    int m = cs.m();

    // columns: g10 basis then g01 basis; coordinates in this frame give the
    // (1,0)/(0,1) projections
    std::vector<Vec> cols;
    for (int a = 0; a < m; ++a) cols.push_back(cs.vectors10().row(a));
    for (int a = 0; a < m; ++a) cols.push_back(cs.vectors01().row(a));
    Matrix frame = Matrix::from_columns(cols, n);

    auto coords = [&](const Vec& v) {
        auto x = frame.solve(v);
        if (!x) throw std::logic_error("vector not in g10 + g01");
        return *x;
    };

    StructureConstants c;
    auto set = [&](int x, int y, const Vec& coeffs) {
        std::map<int, GaussianRational> entry;
        for (int k = 0; k < n; ++k)
            if (!coeffs[k].is_zero()) entry[k + 1] = coeffs[k];
        if (!entry.empty()) c[{x, y}] = std::move(entry);
    };

    // mixed brackets [X_a, Xbar_b]: keep only the (1,0) component
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Vec br = g.bracket(cs.vectors10().row(a), cs.vectors01().row(b));
            Vec x = coords(br);
            Vec proj(n);
            for (int k = 0; k < m; ++k) proj[k] = x[k];
            set(a + 1, m + b + 1, proj);
        }

    // [Xbar_a, Xbar_b]: the honest bracket, lands in g01 by integrability
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            Vec br = g.bracket(cs.vectors01().row(a), cs.vectors01().row(b));
            set(m + a + 1, m + b + 1, coords(br));
        }

    std::vector<std::string> labels;
    for (int a = 1; a <= m; ++a) labels.push_back("x" + std::to_string(a));
    for (int a = 1; a <= m; ++a) labels.push_back("xb" + std::to_string(a));

    LieAlgebra out = LieAlgebra::validate(n, c, std::move(labels));
    lower_central_series(out);  // nilpotency re-validated, throws otherwise
    return out;
}

}  // namespace nilcohom
