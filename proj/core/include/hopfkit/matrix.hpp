#pragma once

#include <optional>
#include <vector>

#include "hopfkit/cyclo.hpp"

namespace hopfkit {

using Vec = std::vector<Cyc>;

Vec zero_vec(const FieldPtr& f, size_t n);
Vec unit_vec(const FieldPtr& f, size_t n, size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Cyc& c, const Vec& v);

/// Dense matrix over the session cyclotomic field, row major.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, size_t rows, size_t cols);

    static Matrix identity(const FieldPtr& f, size_t n);
    static Matrix from_rows(const FieldPtr& f, size_t cols, const std::vector<Vec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Cyc& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Cyc& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Vec row(size_t i) const;
    Vec col(size_t j) const;
    void set_row(size_t i, const Vec& v);
    void set_col(size_t j, const Vec& v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Vec apply(const Vec& v) const;  // this * v
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    /// Kronecker product with flat index convention (i*other_dim + j).
    static Matrix kron(const Matrix& a, const Matrix& b);

    /// Reduced row echelon form; zero rows dropped.  Rank = result.rows().
    Matrix rref() const;
    /// Basis of the right kernel, one row per basis vector (in RREF).
    Matrix kernel() const;
    /// Trace of a square matrix.
    Cyc trace() const;
    /// One solution of this * x = b, if any.
    std::optional<Vec> solve(const Vec& b) const;
    /// Inverse of a square matrix, if invertible.
    std::optional<Matrix> inverse() const;

private:
    FieldPtr field_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Cyc> a_;
};

}  // namespace hopfkit
