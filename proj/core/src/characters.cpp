#include <algorithm>

#include "hopfkit/hopf.hpp"

// Characters of a finite-dimensional algebra over the session field.
// Strategy: kill the ideal generated by commutators, then split the resulting
// commutative algebra recursively along roots of minimal polynomials of
// multiplication operators.  Root search is restricted to rational candidates
// times session roots of unity; anything else raises UnsplittableOverField.

namespace hopfkit {

namespace {

struct QuotientAlgebra {
    FDAlgebra alg;
    Matrix projection;  // alg.n x original_n, composed projection from the original algebra
};

Matrix left_mult_matrix(const FDAlgebra& A, const Vec& x) {
    Matrix m(A.field, A.n, A.n);
    for (size_t j = 0; j < A.n; ++j) m.set_col(j, A.multiply(x, unit_vec(A.field, A.n, j)));
    return m;
}

/// Quotient of A by the subspace ideal I (assumed a two-sided ideal).
QuotientAlgebra quotient(const FDAlgebra& A, const Subspace& ideal, const Matrix& prev_projection) {
    // Complement basis = coordinates not occupied by ideal pivots.
    std::vector<size_t> free_idx;
    {
        std::vector<bool> is_pivot(A.n, false);
        size_t col = 0;
        for (size_t i = 0; i < ideal.dim(); ++i) {
            while (col < A.n && ideal.basis().at(i, col).is_zero()) ++col;
            if (col < A.n) is_pivot[col++] = true;
        }
        for (size_t c = 0; c < A.n; ++c)
            if (!is_pivot[c]) free_idx.push_back(c);
    }
    size_t q = free_idx.size();
    auto project = [&](const Vec& v) {
        Vec reduced = ideal.reduce(v);
        Vec out = zero_vec(A.field, q);
        for (size_t t = 0; t < q; ++t) out[t] = reduced[free_idx[t]];
        return out;
    };
    QuotientAlgebra Q;
    Q.alg.field = A.field;
    Q.alg.n = q;
    Q.alg.mult = Matrix(A.field, q, q * q);
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < q; ++j) {
            Vec prod = A.multiply(unit_vec(A.field, A.n, free_idx[i]), unit_vec(A.field, A.n, free_idx[j]));
            Q.alg.mult.set_col(i * q + j, project(prod));
        }
    Q.alg.unit = project(A.unit);
    Matrix proj(A.field, q, A.n);
    for (size_t c = 0; c < A.n; ++c) proj.set_col(c, project(unit_vec(A.field, A.n, c)));
    Q.projection = proj * prev_projection;
    return Q;
}

/// Minimal polynomial of a square matrix, monic, low degree first.
std::vector<Cyc> minimal_polynomial(const Matrix& m) {
    const FieldPtr& f = m.field();
    size_t n = m.rows();
    std::vector<Vec> powers;  // vec(M^k)
    Matrix p = Matrix::identity(f, n);
    for (size_t k = 0;; ++k) {
        Vec flat;
        flat.reserve(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) flat.push_back(p.at(i, j));
        powers.push_back(flat);
        // Look for a dependency sum c_t M^t = 0 with c_k = 1.
        Matrix stacked(f, powers.size(), n * n);
        for (size_t t = 0; t < powers.size(); ++t) stacked.set_row(t, powers[t]);
        Matrix kern = stacked.transpose().kernel();
        if (kern.rows() > 0) {
            // Any kernel row gives a dependency; normalize to monic of minimal degree.
            Vec dep = kern.row(0);
            size_t top = dep.size();
            while (top > 0 && dep[top - 1].is_zero()) --top;
            std::vector<Cyc> poly(dep.begin(), dep.begin() + top);
            Cyc lead = poly.back();
            for (auto& c : poly) c = c / lead;
            return poly;
        }
        p = p * m;
        if (k > n) throw Error("minimal polynomial search overran the dimension bound");
    }
}

Cyc eval_poly(const std::vector<Cyc>& p, const Cyc& x) {
    Cyc r = Cyc::zero(x.field());
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

std::vector<Cyc> deflate(const std::vector<Cyc>& p, const Cyc& root) {
    // p / (t - root), exact.
    std::vector<Cyc> q(p.size() - 1, Cyc::zero(root.field()));
    Cyc carry = p.back();
    for (size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * root;
    }
    if (!carry.is_zero()) throw Error("deflation by a non-root");
    return q;
}

std::vector<Rational> rational_root_candidates(const std::vector<Cyc>& p) {
    // Rational-root-theorem candidates when all coefficients are rational and
    // small enough to factor by trial division.
    std::vector<Rational> out = {Rational(0)};
    bool all_rat = std::all_of(p.begin(), p.end(), [](const Cyc& c) { return c.is_rational(); });
    if (!all_rat) {
        out.push_back(Rational(1));
        out.push_back(Rational(-1));
        return out;
    }
    // Scale to an integer polynomial.
    Int common_den = 1;
    for (const auto& c : p) {
        Rational r = c.rational_value();
        common_den = boost::multiprecision::lcm(common_den, Int(denominator(r)));
    }
    std::vector<Int> ip;
    for (const auto& c : p) {
        Rational r = c.rational_value() * Rational(common_den);
        ip.push_back(numerator(r));
    }
    size_t lo = 0;
    while (lo < ip.size() && ip[lo] == 0) ++lo;  // factor out t^lo; 0 already a candidate
    if (lo >= ip.size()) return out;
    Int a0 = boost::multiprecision::abs(ip[lo]);
    Int ak = boost::multiprecision::abs(ip.back());
    auto divisors = [](const Int& v) {
        std::vector<Int> ds;
        if (v > 1000000) {
            ds.push_back(1);
            return ds;
        }
        long n = v.convert_to<long>();
        for (long d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                ds.push_back(d);
                ds.push_back(n / d);
            }
        return ds;
    };
    for (const Int& num : divisors(a0))
        for (const Int& den : divisors(ak)) {
            Rational r(num, den);
            out.push_back(r);
            out.push_back(-r);
        }
    return out;
}

/// All roots of p over the session field, with multiplicity.
/// Throws UnsplittableOverField when p does not split.
std::vector<Cyc> split_roots(std::vector<Cyc> p, const FieldPtr& f) {
    std::vector<Cyc> roots;
    auto candidates = rational_root_candidates(p);
    while (p.size() > 1) {
        bool found = false;
        for (const Rational& r : candidates) {
            for (int j = 0; j < f->conductor() && !found; ++j) {
                Cyc cand = Cyc::from_rational(f, r) * Cyc::zeta_power(f, j);
                if (eval_poly(p, cand).is_zero()) {
                    roots.push_back(cand);
                    p = deflate(p, cand);
                    found = true;
                }
            }
            if (found) break;
        }
        if (!found) {
            std::string msg = "degree " + std::to_string(p.size() - 1);
            throw UnsplittableOverField(msg);
        }
        candidates = rational_root_candidates(p);
    }
    return roots;
}

void characters_commutative(const QuotientAlgebra& Q, std::vector<Vec>& out, size_t original_n) {
    const FDAlgebra& A = Q.alg;
    if (A.n == 0) return;  // zero algebra: no characters
    // Find a basis element whose multiplication operator is not scalar.
    for (size_t b = 0; b < A.n; ++b) {
        Matrix mb = left_mult_matrix(A, unit_vec(A.field, A.n, b));
        // Scalar iff mb == lambda * identity for the lambda making unit consistent.
        bool scalar = true;
        {
            auto poly = minimal_polynomial(mb);
            if (poly.size() > 2) scalar = false;
        }
        if (scalar) continue;
        auto poly = minimal_polynomial(mb);
        std::vector<Cyc> roots = split_roots(poly, A.field);
        std::vector<Cyc> distinct;
        for (const auto& r : roots)
            if (std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(r);
        for (const Cyc& lambda : distinct) {
            // Ideal generated by (e_b - lambda): column space of its multiplication operator.
            Vec gen = unit_vec(A.field, A.n, b);
            Vec lu = scale(lambda, A.unit);
            for (size_t t = 0; t < A.n; ++t) gen[t] -= lu[t];
            Matrix mg = left_mult_matrix(A, gen);
            std::vector<Vec> cols;
            for (size_t c = 0; c < A.n; ++c) cols.push_back(mg.col(c));
            Subspace ideal = Subspace::span(A.field, A.n, cols);
            if (ideal.dim() == A.n) continue;  // no quotient in this branch
            characters_commutative(quotient(A, ideal, Q.projection), out, original_n);
        }
        return;
    }
    // Every multiplication operator is scalar: the algebra is one-dimensional
    // spanned by its unit (after killing nilpotents via earlier quotients) and
    // carries exactly one character a ↦ coefficient along the unit.
    // chi on the original algebra: chi(v) = c where projection(v) = c * projection(unit).
    // Find an index where the projected unit is nonzero.
    size_t idx = 0;
    while (idx < A.n && A.unit[idx].is_zero()) ++idx;
    if (idx == A.n) return;  // unit projects to zero: no character
    Cyc norm = A.unit[idx].inverse();
    Vec chi = zero_vec(A.field, original_n);
    for (size_t c = 0; c < original_n; ++c) chi[c] = Q.projection.at(idx, c) * norm;
    out.push_back(chi);
}

}  // namespace

std::vector<Vec> algebra_characters(const FDAlgebra& B) {
    // Ideal generated by all commutators.
    std::vector<Vec> comms;
    for (size_t i = 0; i < B.n; ++i)
        for (size_t j = i + 1; j < B.n; ++j) {
            Vec c = sub(B.multiply(unit_vec(B.field, B.n, i), unit_vec(B.field, B.n, j)),
                        B.multiply(unit_vec(B.field, B.n, j), unit_vec(B.field, B.n, i)));
            if (!is_zero_vec(c)) comms.push_back(c);
        }
    Subspace ideal = Subspace::span(B.field, B.n, comms);
    while (true) {
        std::vector<Vec> next;
        for (size_t i = 0; i < ideal.dim(); ++i) {
            Vec x = ideal.basis().row(i);
            next.push_back(x);
            for (size_t t = 0; t < B.n; ++t) {
                next.push_back(B.multiply(unit_vec(B.field, B.n, t), x));
                next.push_back(B.multiply(x, unit_vec(B.field, B.n, t)));
            }
        }
        Subspace grown = Subspace::span(B.field, B.n, next);
        if (grown.dim() == ideal.dim()) break;
        ideal = grown;
    }
    QuotientAlgebra root = quotient(B, ideal, Matrix::identity(B.field, B.n));
    std::vector<Vec> chars;
    characters_commutative(root, chars, B.n);
    // Deduplicate and order deterministically.
    std::sort(chars.begin(), chars.end(), [](const Vec& a, const Vec& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
    return chars;
}

std::vector<Vec> grouplikes(const HopfAlgebra& K) {
    // Grouplikes of K are the algebra characters of K* (dual pairing on the
    // fixed basis).  The product of dual basis functionals reads off Delta.
    FDAlgebra B;
    B.field = K.field;
    B.n = K.n;
    B.mult = Matrix(K.field, K.n, K.n * K.n);
    for (size_t i = 0; i < K.n; ++i)
        for (size_t j = 0; j < K.n; ++j)
            for (size_t a = 0; a < K.n; ++a) B.mult.at(a, i * K.n + j) = K.comult.at(i * K.n + j, a);
    B.unit = K.counit;
    std::vector<Vec> out;
    for (const Vec& g : algebra_characters(B)) {
        // chi(f_i) = g_i gives the coordinate vector of the grouplike; verify.
        if (K.coproduct(g) != [&] {
                Vec t = zero_vec(K.field, K.n * K.n);
                for (size_t a = 0; a < K.n; ++a) {
                    if (g[a].is_zero()) continue;
                    for (size_t b = 0; b < K.n; ++b)
                        if (!g[b].is_zero()) t[a * K.n + b] = g[a] * g[b];
                }
                return t;
            }())
            continue;
        if (!(K.counit_of(g) == Cyc::one(K.field))) continue;
        out.push_back(g);
    }
    return out;
}

}  // namespace hopfkit
