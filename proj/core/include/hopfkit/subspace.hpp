#pragma once

#include <optional>

#include "hopfkit/matrix.hpp"

namespace hopfkit {

/// A subspace of k^n in canonical reduced-echelon form.  Two equal subspaces
/// have bit-identical representations.
class Subspace {
public:
    Subspace() = default;
    static Subspace span(const FieldPtr& f, size_t ambient, const std::vector<Vec>& vectors);
    static Subspace zero(const FieldPtr& f, size_t ambient);
    static Subspace full(const FieldPtr& f, size_t ambient);
    static Subspace from_rref(Matrix echelon_basis);  // trusted: rows already canonical

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const FieldPtr& field() const { return field_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the echelon basis, if v lies in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const;
    /// Residual of v after reduction against the basis.
    Vec reduce(const Vec& v) const;

    Subspace operator+(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& other) const;
    bool operator!=(const Subspace& other) const { return !(*this == other); }
    /// Deterministic total order for report output.
    bool operator<(const Subspace& other) const;

private:
    FieldPtr field_;
    size_t ambient_ = 0;
    Matrix basis_;  // RREF, rows = dim
};

}  // namespace hopfkit
