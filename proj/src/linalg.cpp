#include "nilcohom/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilcohom {

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const GaussianRational& x) { return x.is_zero(); });
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
    Matrix m(rows, int(cols.size()));
    for (int c = 0; c < int(cols.size()); ++c)
        for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(int(rows.size()), int(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

Vec Matrix::row(int r) const {
    Vec v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Vec Matrix::column(int c) const {
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::logic_error("matrix shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const GaussianRational& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) {
                if (b.at(k, c).is_zero()) continue;
                m.at(r, c) += ark * b.at(k, c);
            }
        }
    return m;
}

Vec Matrix::apply(const Vec& x) const {
    if (int(x.size()) != cols_) throw std::logic_error("matrix apply shape mismatch");
    Vec y(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !x[c].is_zero()) y[r] += at(r, c) * x[c];
    return y;
}

std::vector<int> Matrix::rref() {
    std::vector<int> pivots;
    int lead_row = 0;
    for (int col = 0; col < cols_ && lead_row < rows_; ++col) {
        int pivot = -1;
        for (int r = lead_row; r < rows_; ++r)
            if (!at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead_row)
            for (int c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(lead_row, c));
        GaussianRational inv = at(lead_row, col).inv();
        for (int c = col; c < cols_; ++c) at(lead_row, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == lead_row || at(r, col).is_zero()) continue;
            GaussianRational f = at(r, col);
            for (int c = col; c < cols_; ++c) at(r, c) -= f * at(lead_row, c);
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return pivots;
}

int Matrix::rank() const {
    Matrix copy = *this;
    return int(copy.rref().size());
}

std::vector<Vec> Matrix::kernel_basis() const {
    Matrix r = *this;
    std::vector<int> pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<Vec> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols_);
        v[free] = GaussianRational(1);
        for (int i = 0; i < int(pivots.size()); ++i)
            v[pivots[i]] = -r.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
    if (int(b.size()) != rows_) throw std::logic_error("solve shape mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = b[r];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    Vec x(cols_);
    for (int i = 0; i < int(pivots.size()); ++i) x[pivots[i]] = aug.at(i, cols_);
    return x;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::logic_error("inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = GaussianRational(1);
    }
    std::vector<int> pivots = aug.rref();
    if (int(pivots.size()) != rows_ || pivots.back() != rows_ - 1)
        throw std::logic_error("matrix is singular");
    Matrix inv(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(),
                       [](const GaussianRational& x) { return x.is_zero(); });
}

bool RowSpan::add(const Vec& v) {
    Vec r = reduce(v);
    int pivot = -1;
    for (int c = 0; c < ambient_; ++c)
        if (!r[c].is_zero()) {
            pivot = c;
            break;
        }
    if (pivot < 0) return false;

    GaussianRational inv = r[pivot].inv();
    for (auto& x : r) x *= inv;
    // keep existing rows reduced against the new one
    for (size_t i = 0; i < rows_.size(); ++i) {
        GaussianRational f = rows_[i][pivot];
        if (f.is_zero()) continue;
        for (int c = 0; c < ambient_; ++c) rows_[i][c] -= f * r[c];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    size_t idx = size_t(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
}

Vec RowSpan::reduce(const Vec& v) const {
    Vec r = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        GaussianRational f = r[pivots_[i]];
        if (f.is_zero()) continue;
        for (int c = 0; c < ambient_; ++c) r[c] -= f * rows_[i][c];
    }
    return r;
}

}  // namespace nilcohom
