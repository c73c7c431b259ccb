#include "hopfkit/twist.hpp"

namespace hopfkit {

namespace {

/// (ε⊗id) and (id⊗ε) applied to a flat n² tensor.
Vec counit_left(const HopfAlgebra& k, const Vec& t) {
    Vec r = zero_vec(k.field, k.n);
    for (size_t a = 0; a < k.n; ++a)
        for (size_t b = 0; b < k.n; ++b) r[b] += k.counit[a] * t[a * k.n + b];
    return r;
}

Vec counit_right(const HopfAlgebra& k, const Vec& t) {
    Vec r = zero_vec(k.field, k.n);
    for (size_t a = 0; a < k.n; ++a)
        for (size_t b = 0; b < k.n; ++b) r[a] += k.counit[b] * t[a * k.n + b];
    return r;
}

/// J ⊗ 1 and 1 ⊗ J as flat n³ tensors.
Vec tensor_with_unit_right(const HopfAlgebra& k, const Vec& t) {
    size_t n = k.n;
    Vec r = zero_vec(k.field, n * n * n);
    for (size_t p = 0; p < n * n; ++p) {
        if (t[p].is_zero()) continue;
        for (size_t c = 0; c < n; ++c)
            if (!k.unit[c].is_zero()) r[p * n + c] += t[p] * k.unit[c];
    }
    return r;
}

Vec tensor_with_unit_left(const HopfAlgebra& k, const Vec& t) {
    size_t n = k.n;
    Vec r = zero_vec(k.field, n * n * n);
    for (size_t p = 0; p < n * n; ++p) {
        if (t[p].is_zero()) continue;
        for (size_t a = 0; a < n; ++a)
            if (!k.unit[a].is_zero()) r[a * n * n + p] += t[p] * k.unit[a];
    }
    return r;
}

/// (Δ⊗id)(t) and (id⊗Δ)(t) for a flat n² tensor.
Vec comult_left(const HopfAlgebra& k, const Vec& t) {
    size_t n = k.n;
    Vec r = zero_vec(k.field, n * n * n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            const Cyc& c = t[a * n + b];
            if (c.is_zero()) continue;
            for (size_t p = 0; p < n * n; ++p) {
                const Cyc& d = k.comult.at(p, a);
                if (!d.is_zero()) r[p * n + b] += c * d;
            }
        }
    return r;
}

Vec comult_right(const HopfAlgebra& k, const Vec& t) {
    size_t n = k.n;
    Vec r = zero_vec(k.field, n * n * n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            const Cyc& c = t[a * n + b];
            if (c.is_zero()) continue;
            for (size_t p = 0; p < n * n; ++p) {
                const Cyc& d = k.comult.at(p, b);
                if (!d.is_zero()) r[a * n * n + p] += c * d;
            }
        }
    return r;
}

Vec unit_tensor_unit(const HopfAlgebra& k) {
    Vec r = zero_vec(k.field, k.n * k.n);
    for (size_t a = 0; a < k.n; ++a)
        for (size_t b = 0; b < k.n; ++b) r[a * k.n + b] = k.unit[a] * k.unit[b];
    return r;
}

/// m(id⊗S)(t) or m(S⊗id)(t) for a flat n² tensor.
Vec contract(const HopfAlgebra& k, const Vec& t, bool antipode_on_right) {
    Vec r = zero_vec(k.field, k.n);
    for (size_t a = 0; a < k.n; ++a)
        for (size_t b = 0; b < k.n; ++b) {
            const Cyc& c = t[a * k.n + b];
            if (c.is_zero()) continue;
            Vec left = antipode_on_right ? unit_vec(k.field, k.n, a) : k.antipode.col(a);
            Vec right = antipode_on_right ? k.antipode.col(b) : unit_vec(k.field, k.n, b);
            r = add(r, scale(c, k.multiply(left, right)));
        }
    return r;
}

/// Matrix of left multiplication by u.
Matrix left_mult_matrix(const HopfAlgebra& k, const Vec& u) {
    Matrix m(k.field, k.n, k.n);
    for (size_t j = 0; j < k.n; ++j) m.set_col(j, k.multiply(u, unit_vec(k.field, k.n, j)));
    return m;
}

/// Antipode axiom for a candidate S-matrix against a given coproduct.
bool antipode_axioms_hold(const HopfAlgebra& k, const Matrix& comult, const Matrix& s) {
    for (size_t i = 0; i < k.n; ++i) {
        Vec lhs = zero_vec(k.field, k.n), rhs = zero_vec(k.field, k.n);
        for (size_t p = 0; p < k.n * k.n; ++p) {
            const Cyc& c = comult.at(p, i);
            if (c.is_zero()) continue;
            size_t a = p / k.n, b = p % k.n;
            lhs = add(lhs, scale(c, k.multiply(s.col(a), unit_vec(k.field, k.n, b))));
            rhs = add(rhs, scale(c, k.multiply(unit_vec(k.field, k.n, a), s.col(b))));
        }
        Vec want = scale(k.counit[i], k.unit);
        if (lhs != want || rhs != want) return false;
    }
    return true;
}

}  // namespace

TwistSpec build_twist(int d, const GroupSpec& g, const std::vector<size_t>& embedding,
                      const FieldPtr& field) {
    if (d < 2) throw ValidationError("twist requires d >= 2");
    size_t dd = static_cast<size_t>(d) * d;
    if (embedding.size() != dd) throw ValidationError("embedding must list d^2 images");
    // Injective homomorphism Z_d ⊕ Z_d -> G.
    for (size_t i = 0; i < dd; ++i)
        for (size_t j = i + 1; j < dd; ++j)
            if (embedding[i] == embedding[j]) throw ValidationError("embedding is not injective");
    if (embedding[0] != g.identity()) throw ValidationError("embedding must send (0,0) to e");
    for (size_t x1 = 0; x1 < static_cast<size_t>(d); ++x1)
        for (size_t y1 = 0; y1 < static_cast<size_t>(d); ++y1)
            for (size_t x2 = 0; x2 < static_cast<size_t>(d); ++x2)
                for (size_t y2 = 0; y2 < static_cast<size_t>(d); ++y2) {
                    size_t prod = g.table[embedding[x1 * d + y1]][embedding[x2 * d + y2]];
                    if (prod != embedding[((x1 + x2) % d) * d + (y1 + y2) % d])
                        throw ValidationError("embedding is not a homomorphism");
                }

    HopfAlgebra kg = group_algebra(g, field);
    size_t n = kg.n;
    Cyc zeta = root_of_unity(field, d);
    Cyc inv_dd = Cyc::from_rational(field, make_rational(1, Int(dd)));

    TwistSpec spec;
    spec.d = d;
    spec.field = field;
    spec.n = n;
    spec.embedding = embedding;

    spec.cocycle = Matrix(field, dd, dd);
    for (size_t l1 = 0; l1 < dd; ++l1)
        for (size_t l2 = 0; l2 < dd; ++l2)
            spec.cocycle.at(l1, l2) = zeta.pow(static_cast<long>((l1 / d) * (l2 % d)));

    // Primitive idempotents of kL inside kG: e_(m,n) = (1/d²) Σ_l φ_(m,n)(l)⁻¹ l.
    std::vector<Vec> idem(dd, zero_vec(field, n));
    for (size_t m = 0; m < static_cast<size_t>(d); ++m)
        for (size_t nn = 0; nn < static_cast<size_t>(d); ++nn)
            for (size_t x = 0; x < static_cast<size_t>(d); ++x)
                for (size_t y = 0; y < static_cast<size_t>(d); ++y)
                    idem[m * d + nn][embedding[x * d + y]] +=
                        inv_dd * zeta.pow(-static_cast<long>(m * x + nn * y));

    spec.j = zero_vec(field, n * n);
    spec.j_inv = zero_vec(field, n * n);
    for (size_t phi = 0; phi < dd; ++phi)
        for (size_t psi = 0; psi < dd; ++psi) {
            // Dual cocycle on characters: σ̂((m,n),(m',n')) = ζ^{m·n'}.
            Cyc s = zeta.pow(static_cast<long>((phi / d) * (psi % d)));
            Cyc s_inv = s.inverse();
            for (size_t a = 0; a < n; ++a) {
                if (idem[phi][a].is_zero()) continue;
                for (size_t b = 0; b < n; ++b) {
                    if (idem[psi][b].is_zero()) continue;
                    Cyc prod = idem[phi][a] * idem[psi][b];
                    spec.j[a * n + b] += s * prod;
                    spec.j_inv[a * n + b] += s_inv * prod;
                }
            }
        }

    // The unnormalized sum Σ ζ^{xy'} (x,y)⊗(x',y'), kept for inspection.
    spec.literal_j = zero_vec(field, n * n);
    for (size_t l1 = 0; l1 < dd; ++l1)
        for (size_t l2 = 0; l2 < dd; ++l2)
            spec.literal_j[embedding[l1] * n + embedding[l2]] += spec.cocycle.at(l1, l2);

    // Counit normalization.
    if (counit_left(kg, spec.j) != kg.unit || counit_right(kg, spec.j) != kg.unit)
        throw NotATwist("counit normalization fails");
    // Invertibility.
    if (kg.tensor_multiply(spec.j, spec.j_inv) != unit_tensor_unit(kg) ||
        kg.tensor_multiply(spec.j_inv, spec.j) != unit_tensor_unit(kg))
        throw NotATwist("J is not invertible with the claimed inverse");
    // Twist equation (J⊗1)·((Δ⊗id)J) = (1⊗J)·((id⊗Δ)J).
    Vec lhs = kg.tensor3_multiply(tensor_with_unit_right(kg, spec.j), comult_left(kg, spec.j));
    Vec rhs = kg.tensor3_multiply(tensor_with_unit_left(kg, spec.j), comult_right(kg, spec.j));
    if (lhs != rhs) throw NotATwist("twist equation fails");
    return spec;
}

HopfAlgebra twist_hopf(const HopfAlgebra& kg, const TwistSpec& spec) {
    if (auto v = verify_hopf_axioms(kg); !v.empty())
        throw InvalidHopf("twist_hopf input fails: " + v.front());
    if (kg.n != spec.n || kg.field->conductor() != spec.field->conductor())
        throw DimensionMismatch("twist does not match the Hopf algebra");

    HopfAlgebra out = kg;
    out.comult = Matrix(kg.field, kg.n * kg.n, kg.n);
    for (size_t i = 0; i < kg.n; ++i)
        out.comult.set_col(
            i, kg.tensor_multiply(kg.tensor_multiply(spec.j_inv, kg.comult.col(i)), spec.j));

    // Twisted antipode: S_J = U·S(·)·U⁻¹ for a gauge element built from J.
    // The convention-dependent choice of U is resolved by exact verification.
    std::vector<Vec> gauges = {contract(kg, spec.j, true), contract(kg, spec.j, false),
                               contract(kg, spec.j_inv, true), contract(kg, spec.j_inv, false)};
    for (const Vec& u : gauges) {
        Matrix mu = left_mult_matrix(kg, u);
        auto u_inv = mu.solve(kg.unit);
        if (!u_inv) continue;
        for (bool conjugate_forward : {true, false}) {
            Matrix s(kg.field, kg.n, kg.n);
            for (size_t i = 0; i < kg.n; ++i) {
                Vec si = kg.antipode.col(i);
                si = conjugate_forward ? kg.multiply(kg.multiply(u, si), *u_inv)
                                       : kg.multiply(kg.multiply(*u_inv, si), u);
                s.set_col(i, si);
            }
            if (antipode_axioms_hold(kg, out.comult, s)) {
                out.antipode = s;
                if (auto v = verify_hopf_axioms(out); !v.empty())
                    throw NotATwist("twisted algebra fails axiom " + v.front());
                return out;
            }
        }
    }
    throw NotATwist("no gauge element yields a valid twisted antipode");
}

}  // namespace hopfkit
