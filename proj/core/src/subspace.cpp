#include "hopfkit/subspace.hpp"

namespace hopfkit {

Subspace Subspace::span(const FieldPtr& f, size_t ambient, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient) throw DimensionMismatch("generating vector length != ambient dim");
    Subspace s;
    s.field_ = f;
    s.ambient_ = ambient;
    s.basis_ = Matrix::from_rows(f, ambient, vectors).rref();
    return s;
}

Subspace Subspace::zero(const FieldPtr& f, size_t ambient) { return span(f, ambient, {}); }

Subspace Subspace::full(const FieldPtr& f, size_t ambient) {
    Subspace s;
    s.field_ = f;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(f, ambient);
    return s;
}

Subspace Subspace::from_rref(Matrix echelon_basis) {
    Subspace s;
    s.field_ = echelon_basis.field();
    s.ambient_ = echelon_basis.cols();
    s.basis_ = std::move(echelon_basis);
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("membership query");
    Vec r = v;
    size_t col = 0;
    for (size_t i = 0; i < basis_.rows(); ++i) {
        // pivot of row i = first nonzero column at or after col
        while (col < ambient_ && basis_.at(i, col).is_zero()) ++col;
        if (col >= ambient_) break;
        if (!r[col].is_zero()) {
            Cyc f = r[col];
            for (size_t j = col; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
        }
        ++col;
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspace containment");
    for (size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("coordinates query");
    Vec r = v;
    Vec coords = zero_vec(field_, dim());
    size_t col = 0;
    for (size_t i = 0; i < basis_.rows(); ++i) {
        while (col < ambient_ && basis_.at(i, col).is_zero()) ++col;
        if (col >= ambient_) break;
        if (!r[col].is_zero()) {
            coords[i] = r[col];
            Cyc f = r[col];
            for (size_t j = col; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
        }
        ++col;
    }
    if (!is_zero_vec(r)) return std::nullopt;
    return coords;
}

Subspace Subspace::operator+(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspace sum");
    std::vector<Vec> rows;
    for (size_t i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
    for (size_t i = 0; i < other.dim(); ++i) rows.push_back(other.basis_.row(i));
    return span(field_ ? field_ : other.field_, ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspace intersection");
    // x = a*U = b*V; solve [U^T | -V^T] (a|b)^T = 0.
    size_t du = dim(), dv = other.dim();
    Matrix m(field_, ambient_, du + dv);
    for (size_t i = 0; i < du; ++i)
        for (size_t j = 0; j < ambient_; ++j) m.at(j, i) = basis_.at(i, j);
    for (size_t i = 0; i < dv; ++i)
        for (size_t j = 0; j < ambient_; ++j) m.at(j, du + i) = -other.basis_.at(i, j);
    Matrix k = m.kernel();
    std::vector<Vec> gens;
    for (size_t t = 0; t < k.rows(); ++t) {
        Vec x = zero_vec(field_, ambient_);
        for (size_t i = 0; i < du; ++i) {
            const Cyc& a = k.at(t, i);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < ambient_; ++j) x[j] += a * basis_.at(i, j);
        }
        gens.push_back(std::move(x));
    }
    return span(field_, ambient_, gens);
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
}

bool Subspace::operator<(const Subspace& other) const {
    if (dim() != other.dim()) return dim() < other.dim();
    for (size_t i = 0; i < dim(); ++i) {
        Vec a = basis_.row(i), b = other.basis_.row(i);
        for (size_t j = 0; j < ambient_; ++j) {
            if (a[j] != b[j]) return a[j] < b[j];
        }
    }
    return false;
}

}  // namespace hopfkit
