#pragma once

#include <optional>
#include <vector>

#include "nilcohom/scalar.hpp"

namespace nilcohom {

using Vec = std::vector<GaussianRational>;

bool is_zero_vec(const Vec& v);

/// Dense matrix over Q(i). Row-major. All elimination is exact with
/// lexicographic pivot choice (first usable column, first usable row), so
/// ranks, kernels and solutions are reproducible across runs and platforms.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix from_columns(const std::vector<Vec>& cols, int rows);
    static Matrix from_rows(const std::vector<Vec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const GaussianRational& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    Vec row(int r) const;
    Vec column(int c) const;

    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Vec apply(const Vec& x) const;  // matrix * column vector

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    std::vector<int> rref();

    int rank() const;

    /// Kernel basis in echelon convention: one vector per free column, with a
    /// 1 at that free column and 0 at every other free column.
    std::vector<Vec> kernel_basis() const;

    /// First solution of A x = b in pivot order (free variables set to 0),
    /// or nullopt when the system is inconsistent.
    std::optional<Vec> solve(const Vec& b) const;

    Matrix inverse() const;  // throws std::logic_error when singular

    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<GaussianRational> a_;
};

/// Incrementally maintained reduced row echelon basis of a subspace of
/// Q(i)^n. Used for image spans, quotient reductions and membership tests.
class RowSpan {
public:
    explicit RowSpan(int ambient) : ambient_(ambient) {}

    /// Reduces v against the span and inserts the normalized residue when it
    /// is nonzero. Returns true when the span grew.
    bool add(const Vec& v);

    /// Canonical residue of v modulo the span (zero iff v lies in it).
    Vec reduce(const Vec& v) const;

    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

    int dim() const { return int(rows_.size()); }
    int ambient() const { return ambient_; }
    const std::vector<Vec>& rows() const { return rows_; }

private:
    int ambient_;
    std::vector<Vec> rows_;    // RREF rows, pivots strictly increasing
    std::vector<int> pivots_;  // pivot column of each row
};

}  // namespace nilcohom
