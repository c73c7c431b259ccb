#include "hopfkit/matrix.hpp"

#include <algorithm>

namespace hopfkit {

Vec zero_vec(const FieldPtr& f, size_t n) { return Vec(n, Cyc::zero(f)); }

Vec unit_vec(const FieldPtr& f, size_t n, size_t i) {
    Vec v = zero_vec(f, n);
    v[i] = Cyc::one(f);
    return v;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Cyc& c) { return c.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector add");
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sub");
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Cyc& c, const Vec& v) {
    Vec r(v);
    for (auto& x : r) x *= c;
    return r;
}

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, Cyc::zero(field_)) {}

Matrix Matrix::identity(const FieldPtr& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyc::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldPtr& f, size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Vec Matrix::row(size_t i) const {
    Vec v(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    return v;
}

Vec Matrix::col(size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

void Matrix::set_row(size_t i, const Vec& v) {
    if (v.size() != cols_) throw DimensionMismatch("set_row");
    std::copy(v.begin(), v.end(), a_.begin() + i * cols_);
}

void Matrix::set_col(size_t j, const Vec& v) {
    if (v.size() != rows_) throw DimensionMismatch("set_col");
    for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix multiply");
    Matrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const Cyc& x = at(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Cyc& y = o.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) += x * y;
            }
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add");
    Matrix r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub");
    Matrix r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix apply");
    Vec r = zero_vec(field_, rows_);
    for (size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (size_t i = 0; i < rows_; ++i) {
            const Cyc& x = at(i, j);
            if (!x.is_zero()) r[i] += x * v[j];
        }
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return a_ == o.a_;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Cyc& c) { return c.is_zero(); });
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.field(), a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) {
            const Cyc& x = a.at(i, j);
            if (x.is_zero()) continue;
            for (size_t p = 0; p < b.rows_; ++p)
                for (size_t q = 0; q < b.cols_; ++q) {
                    const Cyc& y = b.at(p, q);
                    if (!y.is_zero()) r.at(i * b.rows_ + p, j * b.cols_ + q) = x * y;
                }
        }
    return r;
}

Matrix Matrix::rref() const {
    std::vector<Vec> rows;
    rows.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) rows.push_back(row(i));
    size_t pivot_row = 0;
    std::vector<size_t> pivot_cols;
    for (size_t col = 0; col < cols_ && pivot_row < rows.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        Cyc inv = rows[pivot_row][col].inverse();
        for (auto& x : rows[pivot_row]) x *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot_row || rows[i][col].is_zero()) continue;
            Cyc f = rows[i][col];
            for (size_t j = col; j < cols_; ++j) rows[i][j] -= f * rows[pivot_row][j];
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    Matrix r(field_, pivot_row, cols_);
    for (size_t i = 0; i < pivot_row; ++i) r.set_row(i, rows[i]);
    return r;
}

Matrix Matrix::kernel() const {
    Matrix e = rref();
    // Identify pivot columns.
    std::vector<long> pivot_of_col(cols_, -1);
    std::vector<size_t> free_cols;
    {
        size_t r = 0;
        for (size_t c = 0; c < cols_; ++c) {
            if (r < e.rows() && !e.at(r, c).is_zero()) {
                pivot_of_col[c] = static_cast<long>(r);
                ++r;
            } else {
                free_cols.push_back(c);
            }
        }
    }
    Matrix k(field_, free_cols.size(), cols_);
    for (size_t t = 0; t < free_cols.size(); ++t) {
        size_t fc = free_cols[t];
        k.at(t, fc) = Cyc::one(field_);
        for (size_t c = 0; c < cols_; ++c) {
            if (pivot_of_col[c] >= 0) {
                k.at(t, c) = -e.at(static_cast<size_t>(pivot_of_col[c]), fc);
            }
        }
    }
    return k.rref();
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
    if (b.size() != rows_) throw DimensionMismatch("solve rhs length");
    Matrix aug(field_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    Matrix e = aug.rref();
    Vec x = zero_vec(field_, cols_);
    for (size_t i = 0; i < e.rows(); ++i) {
        size_t p = 0;
        while (p <= cols_ && e.at(i, p).is_zero()) ++p;
        if (p == cols_) return std::nullopt;  // 0 = 1 row: inconsistent
        x[p] = e.at(i, cols_);
    }
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    Matrix inv(field_, rows_, cols_);
    for (size_t j = 0; j < cols_; ++j) {
        auto x = solve(unit_vec(field_, rows_, j));
        if (!x) return std::nullopt;
        inv.set_col(j, *x);
    }
    // solve() returns some solution; require it to really be two-sided.
    if (*this * inv != identity(field_, rows_)) return std::nullopt;
    return inv;
}

Cyc Matrix::trace() const {
    if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
    Cyc t = Cyc::zero(field_);
    for (size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

}  // namespace hopfkit
