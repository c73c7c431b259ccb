#include "hopfkit/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace hopfkit {

Vec HopfAlgebra::multiply(const Vec& a, const Vec& b) const {
    if (a.size() != n || b.size() != n) throw DimensionMismatch("algebra multiply");
    Vec r = zero_vec(field, n);
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            Cyc c = a[i] * b[j];
            for (size_t t = 0; t < n; ++t) {
                const Cyc& m = mult.at(t, i * n + j);
                if (!m.is_zero()) r[t].add_mul(c, m);
            }
        }
    }
    return r;
}

Cyc HopfAlgebra::counit_of(const Vec& a) const {
    Cyc r = Cyc::zero(field);
    for (size_t i = 0; i < n; ++i)
        if (!a[i].is_zero()) r += a[i] * counit[i];
    return r;
}

Vec HopfAlgebra::antipode_of(const Vec& a) const { return antipode.apply(a); }

Vec HopfAlgebra::coproduct(const Vec& a) const {
    Vec r = zero_vec(field, n * n);
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t t = 0; t < n * n; ++t) {
            const Cyc& d = comult.at(t, i);
            if (!d.is_zero()) r[t].add_mul(a[i], d);
        }
    }
    return r;
}

std::vector<std::vector<std::pair<size_t, const Cyc*>>> HopfAlgebra::sparse_mult_columns() const {
    std::vector<std::vector<std::pair<size_t, const Cyc*>>> cols(n * n);
    for (size_t c = 0; c < n * n; ++c)
        for (size_t r = 0; r < n; ++r) {
            const Cyc& m = mult.at(r, c);
            if (!m.is_zero()) cols[c].emplace_back(r, &m);
        }
    return cols;
}

Vec HopfAlgebra::tensor_multiply(const Vec& a, const Vec& b) const {
    return tensor_multiply(a, b, sparse_mult_columns());
}

Vec HopfAlgebra::tensor_multiply(
    const Vec& a, const Vec& b,
    const std::vector<std::vector<std::pair<size_t, const Cyc*>>>& cols) const {
    if (a.size() != n * n || b.size() != n * n) throw DimensionMismatch("tensor multiply");
    Vec r = zero_vec(field, n * n);
    std::vector<size_t> a_support, b_support;
    for (size_t p = 0; p < n * n; ++p) {
        if (!a[p].is_zero()) a_support.push_back(p);
        if (!b[p].is_zero()) b_support.push_back(p);
    }
    for (size_t p : a_support) {
        size_t p1 = p / n, p2 = p % n;
        for (size_t q : b_support) {
            size_t q1 = q / n, q2 = q % n;
            Cyc c = a[p] * b[q];
            // (e_p1 ⊗ e_p2)(e_q1 ⊗ e_q2) = (e_p1 e_q1) ⊗ (e_p2 e_q2)
            for (const auto& [s, m1] : cols[p1 * n + q1]) {
                Cyc cm1 = c * *m1;
                for (const auto& [t, m2] : cols[p2 * n + q2]) r[s * n + t].add_mul(cm1, *m2);
            }
        }
    }
    return r;
}

Vec HopfAlgebra::tensor3_multiply(const Vec& a, const Vec& b) const {
    size_t n3 = n * n * n;
    if (a.size() != n3 || b.size() != n3) throw DimensionMismatch("tensor3 multiply");
    auto cols = sparse_mult_columns();
    Vec r = zero_vec(field, n3);
    std::vector<size_t> a_support, b_support;
    for (size_t p = 0; p < n3; ++p) {
        if (!a[p].is_zero()) a_support.push_back(p);
        if (!b[p].is_zero()) b_support.push_back(p);
    }
    for (size_t p : a_support) {
        size_t p1 = p / (n * n), p2 = (p / n) % n, p3 = p % n;
        for (size_t q : b_support) {
            size_t q1 = q / (n * n), q2 = (q / n) % n, q3 = q % n;
            Cyc c = a[p] * b[q];
            for (const auto& [s, m1] : cols[p1 * n + q1]) {
                Cyc cm1 = c * *m1;
                for (const auto& [t, m2] : cols[p2 * n + q2]) {
                    Cyc cm2 = cm1 * *m2;
                    for (const auto& [w, m3] : cols[p3 * n + q3])
                        r[(s * n + t) * n + w].add_mul(cm2, *m3);
                }
            }
        }
    }
    return r;
}

std::string HopfAlgebra::format_element(const Vec& v) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < n; ++i) {
        if (v[i].is_zero()) continue;
        std::string c = v[i].str();
        if (!first) os << " + ";
        if (c == "1")
            os << label(i);
        else if (c == "-1")
            os << "-" << label(i);
        else if (c.find(' ') != std::string::npos)
            os << "(" << c << ")*" << label(i);
        else
            os << c << "*" << label(i);
        first = false;
    }
    if (first) return "0";
    return os.str();
}

namespace {

Vec basis_product(const HopfAlgebra& K, size_t i, size_t j) { return K.mult.col(i * K.n + j); }

}  // namespace

std::vector<std::string> verify_hopf_axioms(const HopfAlgebra& K) {
    std::vector<std::string> violations;
    size_t n = K.n;
    if (K.mult.rows() != n || K.mult.cols() != n * n || K.comult.rows() != n * n ||
        K.comult.cols() != n || K.antipode.rows() != n || K.antipode.cols() != n ||
        K.unit.size() != n || K.counit.size() != n)
        throw DimensionMismatch("malformed structure tensors");
    auto note = [&](const std::string& name) {
        if (std::find(violations.begin(), violations.end(), name) == violations.end())
            violations.push_back(name);
    };

    // Associativity and unit laws.
    for (size_t i = 0; i < n && std::find(violations.begin(), violations.end(), "associativity") == violations.end(); ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec ij = basis_product(K, i, j);
            bool bad = false;
            for (size_t k = 0; k < n; ++k) {
                Vec left = K.multiply(ij, unit_vec(K.field, n, k));
                Vec right = K.multiply(unit_vec(K.field, n, i), basis_product(K, j, k));
                if (left != right) {
                    note("associativity");
                    bad = true;
                    break;
                }
            }
            if (bad) break;
        }
    for (size_t i = 0; i < n; ++i) {
        Vec e = unit_vec(K.field, n, i);
        if (K.multiply(K.unit, e) != e) note("unit-left");
        if (K.multiply(e, K.unit) != e) note("unit-right");
    }

    // Coassociativity: (Delta ⊗ id)Delta = (id ⊗ Delta)Delta on basis elements.
    for (size_t i = 0; i < n; ++i) {
        Vec d = K.comult.col(i);
        Vec left = zero_vec(K.field, n * n * n), right = zero_vec(K.field, n * n * n);
        for (size_t p = 0; p < n * n; ++p) {
            if (d[p].is_zero()) continue;
            size_t a = p / n, b = p % n;
            Vec da = K.comult.col(a);
            for (size_t q = 0; q < n * n; ++q)
                if (!da[q].is_zero()) left[q * n + b].add_mul(d[p], da[q]);
            Vec db = K.comult.col(b);
            for (size_t q = 0; q < n * n; ++q)
                if (!db[q].is_zero()) right[a * n * n + q].add_mul(d[p], db[q]);
        }
        if (left != right) {
            note("coassociativity");
            break;
        }
    }
    // Counit laws.
    for (size_t i = 0; i < n; ++i) {
        Vec d = K.comult.col(i);
        Vec l = zero_vec(K.field, n), r = zero_vec(K.field, n);
        for (size_t p = 0; p < n * n; ++p) {
            if (d[p].is_zero()) continue;
            size_t a = p / n, b = p % n;
            l[b].add_mul(d[p], K.counit[a]);
            r[a].add_mul(d[p], K.counit[b]);
        }
        Vec e = unit_vec(K.field, n, i);
        if (l != e) note("counit-left");
        if (r != e) note("counit-right");
    }

    // Bialgebra compatibility.
    {
        Vec d1 = K.coproduct(K.unit);
        Vec unit_tensor = zero_vec(K.field, n * n);
        for (size_t i = 0; i < n; ++i) {
            if (K.unit[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                if (!K.unit[j].is_zero()) unit_tensor[i * n + j] += K.unit[i] * K.unit[j];
        }
        if (d1 != unit_tensor) note("comult-unital");
        if (!(K.counit_of(K.unit) == Cyc::one(K.field))) note("counit-unital");
    }
    auto mult_cols = K.sparse_mult_columns();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            Vec prod = basis_product(K, i, j);
            if (K.coproduct(prod) != K.tensor_multiply(K.comult.col(i), K.comult.col(j), mult_cols)) {
                note("comult-multiplicative");
            }
            if (!(K.counit_of(prod) == K.counit[i] * K.counit[j])) note("counit-multiplicative");
        }
        if (std::find(violations.begin(), violations.end(), "comult-multiplicative") != violations.end() &&
            std::find(violations.begin(), violations.end(), "counit-multiplicative") != violations.end())
            break;
    }

    // Antipode axiom.
    for (size_t i = 0; i < n; ++i) {
        Vec d = K.comult.col(i);
        Vec l = zero_vec(K.field, n), r = zero_vec(K.field, n);
        for (size_t p = 0; p < n * n; ++p) {
            if (d[p].is_zero()) continue;
            size_t a = p / n, b = p % n;
            Vec sa = K.antipode.col(a);
            Vec left_term = K.multiply(sa, unit_vec(K.field, n, b));
            for (size_t t = 0; t < n; ++t) l[t].add_mul(d[p], left_term[t]);
            Vec sb = K.antipode.col(b);
            Vec right_term = K.multiply(unit_vec(K.field, n, a), sb);
            for (size_t t = 0; t < n; ++t) r[t].add_mul(d[p], right_term[t]);
        }
        Vec target = scale(K.counit[i], K.unit);
        if (l != target) note("antipode-left");
        if (r != target) note("antipode-right");
    }
    return violations;
}

HopfAlgebra dual_hopf(const HopfAlgebra& K) {
    auto violations = verify_hopf_axioms(K);
    if (!violations.empty()) throw InvalidHopf("dual of invalid input: " + violations.front());
    HopfAlgebra D;
    D.field = K.field;
    D.n = K.n;
    // Product of dual basis functionals: (f_i f_j)(e_a) = Delta(e_a)[(i,j)].
    D.mult = Matrix(K.field, K.n, K.n * K.n);
    for (size_t i = 0; i < K.n; ++i)
        for (size_t j = 0; j < K.n; ++j)
            for (size_t a = 0; a < K.n; ++a) D.mult.at(a, i * K.n + j) = K.comult.at(i * K.n + j, a);
    D.unit = K.counit;
    // Delta(f_a)[(i,j)] = f_a(e_i e_j) = mult[(a),(i,j)].
    D.comult = Matrix(K.field, K.n * K.n, K.n);
    for (size_t a = 0; a < K.n; ++a)
        for (size_t i = 0; i < K.n; ++i)
            for (size_t j = 0; j < K.n; ++j) D.comult.at(i * K.n + j, a) = K.mult.at(a, i * K.n + j);
    D.counit = K.unit;
    D.antipode = K.antipode.transpose();
    D.labels.reserve(K.n);
    for (const auto& l : K.labels) D.labels.push_back(l + "*");
    return D;
}

bool is_commutative(const HopfAlgebra& K) {
    for (size_t i = 0; i < K.n; ++i)
        for (size_t j = i + 1; j < K.n; ++j)
            if (basis_product(K, i, j) != basis_product(K, j, i)) return false;
    return true;
}

bool is_cocommutative(const HopfAlgebra& K) {
    for (size_t i = 0; i < K.n; ++i)
        for (size_t a = 0; a < K.n; ++a)
            for (size_t b = a + 1; b < K.n; ++b)
                if (K.comult.at(a * K.n + b, i) != K.comult.at(b * K.n + a, i)) return false;
    return true;
}

Vec FDAlgebra::multiply(const Vec& a, const Vec& b) const {
    if (a.size() != n || b.size() != n) throw DimensionMismatch("algebra multiply");
    Vec r = zero_vec(field, n);
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            Cyc c = a[i] * b[j];
            for (size_t t = 0; t < n; ++t) {
                const Cyc& m = mult.at(t, i * n + j);
                if (!m.is_zero()) r[t].add_mul(c, m);
            }
        }
    }
    return r;
}

bool is_semisimple_algebra(const FDAlgebra& B) {
    // Gram matrix of the trace form: G_ij = trace(left-mult by b_i b_j).
    // trace(L_{e_t}) = sum_s mult[s, t*n+s].
    Vec trace_of_basis = zero_vec(B.field, B.n);
    for (size_t t = 0; t < B.n; ++t)
        for (size_t s = 0; s < B.n; ++s) trace_of_basis[t] += B.mult.at(s, t * B.n + s);
    Matrix gram(B.field, B.n, B.n);
    for (size_t i = 0; i < B.n; ++i)
        for (size_t j = 0; j < B.n; ++j) {
            Vec prod = B.mult.col(i * B.n + j);
            Cyc g = Cyc::zero(B.field);
            for (size_t t = 0; t < B.n; ++t)
                if (!prod[t].is_zero()) g += prod[t] * trace_of_basis[t];
            gram.at(i, j) = g;
        }
    return gram.rref().rows() == B.n;
}

bool is_semisimple_algebra(const HopfAlgebra& K) {
    FDAlgebra B{K.field, K.n, K.mult, K.unit, K.labels};
    return is_semisimple_algebra(B);
}

FDAlgebra restrict_algebra(const HopfAlgebra& K, const Subspace& B) {
    size_t d = B.dim();
    FDAlgebra R;
    R.field = K.field;
    R.n = d;
    R.mult = Matrix(K.field, d, d * d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            Vec prod = K.multiply(B.basis().row(i), B.basis().row(j));
            auto coords = B.coordinates(prod);
            if (!coords) throw ValidationError("subspace is not multiplicatively closed");
            R.mult.set_col(i * d + j, *coords);
        }
    auto unit_coords = B.coordinates(K.unit);
    if (!unit_coords) throw ValidationError("subspace does not contain the unit");
    R.unit = *unit_coords;
    for (size_t i = 0; i < d; ++i) R.labels.push_back(K.format_element(B.basis().row(i)));
    return R;
}

Subspace subalgebra_closure(const HopfAlgebra& K, const Subspace& seed) {
    std::vector<Vec> gens;
    gens.push_back(K.unit);
    for (size_t i = 0; i < seed.dim(); ++i) gens.push_back(seed.basis().row(i));
    Subspace u = Subspace::span(K.field, K.n, gens);
    while (true) {
        std::vector<Vec> next;
        for (size_t i = 0; i < u.dim(); ++i) next.push_back(u.basis().row(i));
        for (size_t i = 0; i < u.dim(); ++i)
            for (size_t j = 0; j < u.dim(); ++j)
                next.push_back(K.multiply(u.basis().row(i), u.basis().row(j)));
        Subspace v = Subspace::span(K.field, K.n, next);
        if (v.dim() == u.dim()) return u;
        u = v;
    }
}

bool is_subcoalgebra(const HopfAlgebra& K, const Subspace& C) {
    // Delta(C) ⊆ C⊗K and Delta(C) ⊆ K⊗C, hence Delta(C) ⊆ C⊗C.
    for (size_t i = 0; i < C.dim(); ++i) {
        Vec d = K.coproduct(C.basis().row(i));
        for (size_t b = 0; b < K.n; ++b) {  // first-leg slices
            Vec slice = zero_vec(K.field, K.n);
            for (size_t a = 0; a < K.n; ++a) slice[a] = d[a * K.n + b];
            if (!C.contains(slice)) return false;
        }
        for (size_t a = 0; a < K.n; ++a) {  // second-leg slices
            Vec slice(d.begin() + a * K.n, d.begin() + (a + 1) * K.n);
            if (!C.contains(slice)) return false;
        }
    }
    return true;
}

Subspace generated_hopf_subalgebra(const HopfAlgebra& K, const Subspace& C) {
    if (!is_subcoalgebra(K, C)) throw NotASubcoalgebra("Delta(C) not contained in C⊗C");
    Subspace u = C;
    while (true) {
        std::vector<Vec> gens;
        for (size_t i = 0; i < u.dim(); ++i) {
            gens.push_back(u.basis().row(i));
            gens.push_back(K.antipode_of(u.basis().row(i)));
        }
        Subspace v = subalgebra_closure(K, Subspace::span(K.field, K.n, gens));
        if (v.dim() == u.dim()) {
            // Re-verify the three closure conditions.
            if (!is_subcoalgebra(K, v)) throw Error("generated subalgebra lost the coalgebra property");
            return v;
        }
        u = v;
    }
}

CoidealCertificate is_coideal_subalgebra(const HopfAlgebra& K, const Subspace& B, CoidealSide side) {
    CoidealCertificate cert;
    if (!B.contains(K.unit)) {
        cert.failed_condition = "unit";
        cert.witness = K.unit;
        return cert;
    }
    for (size_t i = 0; i < B.dim(); ++i)
        for (size_t j = 0; j < B.dim(); ++j) {
            Vec prod = K.multiply(B.basis().row(i), B.basis().row(j));
            if (!B.contains(prod)) {
                cert.failed_condition = "subalgebra";
                cert.witness = prod;
                return cert;
            }
        }
    for (size_t i = 0; i < B.dim(); ++i) {
        Vec d = K.coproduct(B.basis().row(i));
        if (side == CoidealSide::Right) {
            // Delta(b) ∈ B⊗K: every second-leg slice (fixed second index) must lie in B.
            for (size_t b = 0; b < K.n; ++b) {
                Vec slice = zero_vec(K.field, K.n);
                for (size_t a = 0; a < K.n; ++a) slice[a] = d[a * K.n + b];
                if (!B.contains(slice)) {
                    cert.failed_condition = "coideal";
                    cert.witness = slice;
                    return cert;
                }
            }
        } else {
            for (size_t a = 0; a < K.n; ++a) {
                Vec slice(d.begin() + a * K.n, d.begin() + (a + 1) * K.n);
                if (!B.contains(slice)) {
                    cert.failed_condition = "coideal";
                    cert.witness = slice;
                    return cert;
                }
            }
        }
    }
    cert.ok = true;
    return cert;
}

GroupRecognition recognize_group_algebra(const HopfAlgebra& K) {
    GroupRecognition r;
    r.grouplike_elements = grouplikes(K);
    if (r.grouplike_elements.size() != K.n) return r;
    // Grouplikes are linearly independent, so they form a basis; read the table.
    r.table.assign(K.n, std::vector<size_t>(K.n, 0));
    for (size_t i = 0; i < K.n; ++i)
        for (size_t j = 0; j < K.n; ++j) {
            Vec prod = K.multiply(r.grouplike_elements[i], r.grouplike_elements[j]);
            bool found = false;
            for (size_t t = 0; t < K.n; ++t) {
                if (prod == r.grouplike_elements[t]) {
                    r.table[i][j] = t;
                    found = true;
                    break;
                }
            }
            if (!found) return r;  // not closed: not a group algebra
        }
    r.is_group_algebra = true;
    return r;
}

}  // namespace hopfkit
