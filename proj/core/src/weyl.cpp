#include "hopfkit/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace hopfkit {

WeylAlgebra::WeylAlgebra(size_t pairs, FieldPtr f) : n(pairs), field(std::move(f)) {
    if (n < 1 || n > 3) throw ValidationError("Weyl algebra supports 1 <= n <= 3 generator pairs");
}

std::string WeylAlgebra::generator_label(size_t g) const {
    if (g >= 2 * n) throw ValidationError("Weyl generator index out of range");
    return (g < n ? "u" : "v") + std::to_string(g % n + 1);
}

namespace {

void weyl_insert(WeylElement& x, const Monomial& m, const Cyc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = x.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) x.erase(it);
    }
}

/// Left-multiplication by a single generator, in normal form:
/// u_j shifts the exponent; v_j u^a v^b = u^a v^{b+e_j} + a_j u^{a-e_j} v^b.
WeylElement gen_mul(const WeylAlgebra& W, size_t g, const WeylElement& x) {
    WeylElement out;
    for (const auto& [m, c] : x) {
        if (g < W.n) {
            Monomial shifted = m;
            ++shifted[g];
            weyl_insert(out, shifted, c);
        } else {
            size_t j = g - W.n;
            Monomial shifted = m;
            ++shifted[g];
            weyl_insert(out, shifted, c);
            if (m[j] > 0) {
                Monomial lowered = m;
                --lowered[j];
                weyl_insert(out, lowered, c * Cyc::from_int(W.field, m[j]));
            }
        }
    }
    return out;
}

std::vector<Monomial> weyl_monomials_up_to(const WeylAlgebra& W, int degree) {
    std::vector<Monomial> out;
    Monomial m(2 * W.n, 0);
    auto rec = [&](auto&& self, size_t pos, int remaining) -> void {
        if (pos == m.size()) {
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            m[pos] = static_cast<unsigned>(e);
            self(self, pos + 1, remaining - e);
        }
        m[pos] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        unsigned da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da < db;
        return a > b;
    });
    return out;
}

/// Caches e_c · monomial for the multiplicative extension of an F_1-linear
/// action, recursing on the first generator of the monomial.
struct ActContext {
    const WeylAction& act;
    std::map<std::pair<size_t, Monomial>, WeylElement> memo;

    /// e_a · g as an element of F_1, read off the action matrix.
    WeylElement image_of_generator(size_t a, size_t g) const {
        const Matrix& M = act.matrices[a];
        WeylElement out;
        Monomial constant(2 * act.weyl.n, 0);
        weyl_insert(out, constant, M.at(0, g + 1));
        for (size_t r = 0; r < 2 * act.weyl.n; ++r) {
            Monomial e(2 * act.weyl.n, 0);
            e[r] = 1;
            weyl_insert(out, e, M.at(r + 1, g + 1));
        }
        return out;
    }

    const WeylElement& basis_act(size_t c, const Monomial& m) {
        auto key = std::make_pair(c, m);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        WeylElement out;
        if (monomial_degree(m) == 0) {
            weyl_insert(out, m, act.hopf.counit[c]);
        } else {
            size_t g = 0;
            while (m[g] == 0) ++g;
            Monomial rest = m;
            --rest[g];
            size_t nh = act.hopf.n;
            for (size_t a = 0; a < nh; ++a)
                for (size_t b = 0; b < nh; ++b) {
                    const Cyc& coeff = act.hopf.comult.at(a * nh + b, c);
                    if (coeff.is_zero()) continue;
                    WeylElement term =
                        weyl_mul(act.weyl, image_of_generator(a, g), basis_act(b, rest));
                    for (const auto& [tm, tc] : term) weyl_insert(out, tm, coeff * tc);
                }
        }
        return memo.emplace(key, std::move(out)).first->second;
    }

    WeylElement apply(const Vec& h, const WeylElement& x) {
        WeylElement out;
        for (size_t c = 0; c < act.hopf.n; ++c) {
            if (h[c].is_zero()) continue;
            for (const auto& [m, mc] : x)
                for (const auto& [tm, tc] : basis_act(c, m)) weyl_insert(out, tm, h[c] * mc * tc);
        }
        return out;
    }
};

}  // namespace

WeylElement weyl_one(const WeylAlgebra& W) {
    return {{Monomial(2 * W.n, 0), Cyc::one(W.field)}};
}

WeylElement weyl_generator(const WeylAlgebra& W, size_t g) {
    if (g >= 2 * W.n) throw ValidationError("Weyl generator index out of range");
    Monomial m(2 * W.n, 0);
    m[g] = 1;
    return {{m, Cyc::one(W.field)}};
}

WeylElement weyl_add(const WeylElement& a, const WeylElement& b) {
    WeylElement out = a;
    for (const auto& [m, c] : b) weyl_insert(out, m, c);
    return out;
}

WeylElement weyl_scale(const Cyc& c, const WeylElement& a) {
    WeylElement out;
    for (const auto& [m, x] : a) weyl_insert(out, m, c * x);
    return out;
}

WeylElement weyl_mul(const WeylAlgebra& W, const WeylElement& a, const WeylElement& b) {
    WeylElement out;
    for (const auto& [m, c] : a) {
        // (u^a v^b)·x = u-multiplications applied after the v-multiplications.
        WeylElement t = b;
        for (size_t j = 0; j < W.n; ++j)
            for (unsigned e = 0; e < m[W.n + j]; ++e) t = gen_mul(W, W.v(j), t);
        for (size_t j = 0; j < W.n; ++j)
            for (unsigned e = 0; e < m[j]; ++e) t = gen_mul(W, W.u(j), t);
        for (const auto& [tm, tc] : t) weyl_insert(out, tm, c * tc);
    }
    return out;
}

WeylElement weyl_normal_form(const WeylAlgebra& W, const std::vector<WeylTerm>& expr) {
    WeylElement out;
    for (const WeylTerm& term : expr) {
        WeylElement t = weyl_one(W);
        for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) {
            if (*it >= 2 * W.n) throw ValidationError("Weyl generator index out of range");
            t = gen_mul(W, *it, t);
        }
        for (const auto& [m, c] : t) weyl_insert(out, m, term.coeff * c);
    }
    return out;
}

std::string weyl_str(const WeylAlgebra& W, const WeylElement& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t g = 0; g < 2 * W.n; ++g)
            for (unsigned e = 0; e < m[g]; ++e) os << "*" << W.generator_label(g);
    }
    return os.str();
}

unsigned filtration_degree(const WeylElement& x) {
    unsigned d = 0;
    for (const auto& [m, c] : x) d = std::max(d, monomial_degree(m));
    return d;
}

WeylAction weyl_action(const WeylAlgebra& W, const HopfAlgebra& H, std::vector<Matrix> images,
                       int degree) {
    if (!verify_hopf_axioms(H).empty()) throw UnverifiedSource("Hopf axioms fail for the acting algebra");
    if (images.size() != H.n) throw DimensionMismatch("one action matrix per Hopf basis element");
    size_t f1 = 2 * W.n + 1;
    for (const Matrix& M : images)
        if (M.rows() != f1 || M.cols() != f1)
            throw DimensionMismatch("action matrices must act on span{1, u_i, v_i}");

    WeylAction act{W, H, std::move(images)};
    ActContext ctx{act, {}};

    // h·1 = ε(h)·1.
    for (size_t c = 0; c < H.n; ++c) {
        Vec col0(f1, Cyc::zero(W.field));
        for (size_t r = 0; r < f1; ++r) col0[r] = act.matrices[c].at(r, 0);
        Vec expected = zero_vec(W.field, f1);
        expected[0] = H.counit[c];
        if (col0 != expected)
            throw ValidationError("action does not fix the identity: basis element " + H.label(c));
    }

    // Each Weyl relation is respected: apply h to both sides of the relation,
    // expanding products via the coproduct.
    auto two_factor = [&](size_t c, size_t g1, size_t g2) {
        WeylElement out;
        for (size_t a = 0; a < H.n; ++a)
            for (size_t b = 0; b < H.n; ++b) {
                const Cyc& coeff = H.comult.at(a * H.n + b, c);
                if (coeff.is_zero()) continue;
                WeylElement term =
                    weyl_mul(W, ctx.image_of_generator(a, g1), ctx.image_of_generator(b, g2));
                for (const auto& [m, x] : term) weyl_insert(out, m, coeff * x);
            }
        return out;
    };
    for (size_t c = 0; c < H.n; ++c)
        for (size_t i = 0; i < 2 * W.n; ++i)
            for (size_t j = 0; j < 2 * W.n; ++j) {
                if (i <= j) continue;  // relations reorder g_i g_j with i > j
                WeylElement lhs = two_factor(c, i, j);
                WeylElement rhs = two_factor(c, j, i);
                if (i >= W.n && j < W.n && i - W.n == j)  // [v_j, u_j] = 1
                    rhs = weyl_add(rhs, weyl_scale(H.counit[c], weyl_one(W)));
                if (lhs != rhs)
                    throw RelationNotPreserved("basis element " + H.label(c) + " on [" +
                                               W.generator_label(i) + ", " + W.generator_label(j) +
                                               "]");
            }

    // Product rule h·(xy) = Σ (h₁·x)(h₂·y) on monomial pairs, and the module
    // axiom (gh)·m = g·(h·m), exactly to the requested degree.
    std::vector<Monomial> mons = weyl_monomials_up_to(W, degree);
    for (size_t c = 0; c < H.n; ++c)
        for (const Monomial& m1 : mons)
            for (const Monomial& m2 : mons) {
                if (monomial_degree(m1) == 0 || monomial_degree(m2) == 0) continue;
                if (monomial_degree(m1) + monomial_degree(m2) > static_cast<unsigned>(degree))
                    continue;
                WeylElement product = weyl_mul(W, {{m1, Cyc::one(W.field)}}, {{m2, Cyc::one(W.field)}});
                Vec ec = unit_vec(W.field, H.n, c);
                WeylElement lhs = ctx.apply(ec, product);
                WeylElement rhs;
                for (size_t a = 0; a < H.n; ++a)
                    for (size_t b = 0; b < H.n; ++b) {
                        const Cyc& coeff = H.comult.at(a * H.n + b, c);
                        if (coeff.is_zero()) continue;
                        WeylElement term = weyl_mul(W, ctx.basis_act(a, m1), ctx.basis_act(b, m2));
                        for (const auto& [m, x] : term) weyl_insert(rhs, m, coeff * x);
                    }
                if (lhs != rhs)
                    throw ValidationError("product rule fails for basis element " + H.label(c));
            }
    for (size_t c = 0; c < H.n; ++c)
        for (size_t d = 0; d < H.n; ++d) {
            Vec prod = H.multiply(unit_vec(W.field, H.n, c), unit_vec(W.field, H.n, d));
            for (const Monomial& m : mons) {
                WeylElement lhs = ctx.apply(prod, {{m, Cyc::one(W.field)}});
                WeylElement rhs = ctx.apply(unit_vec(W.field, H.n, c), ctx.basis_act(d, m));
                if (lhs != rhs)
                    throw ValidationError("module axiom fails for " + H.label(c) + "·" + H.label(d));
            }
        }
    return act;
}

WeylElement weyl_act(const WeylAction& act, const Vec& h, const WeylElement& x) {
    ActContext ctx{act, {}};
    return ctx.apply(h, x);
}

GrTransport associated_graded_transport(const WeylAction& act, int degree) {
    const WeylAlgebra& W = act.weyl;
    const HopfAlgebra& H = act.hopf;
    ActContext ctx{act, {}};

    // The action must preserve every F_m; check up to the working degree.
    std::vector<Monomial> mons = weyl_monomials_up_to(W, degree);
    for (size_t c = 0; c < H.n; ++c)
        for (const Monomial& m : mons)
            if (filtration_degree(ctx.basis_act(c, m)) > monomial_degree(m))
                throw FiltrationNotPreserved("basis element " + H.label(c) + " raises the degree of " +
                                             weyl_str(W, {{m, Cyc::one(W.field)}}));

    GrTransport out;
    std::vector<std::string> gens;
    for (size_t g = 0; g < 2 * W.n; ++g) gens.push_back(W.generator_label(g));
    out.gr_algebra = PresentedAlgebra::free_commutative(W.field, gens, degree);

    // Leading symbols: drop the constant terms of the generator images.
    std::vector<Matrix> gr(act.matrices);
    for (size_t c = 0; c < H.n; ++c) {
        for (size_t j = 0; j < 2 * W.n + 1; ++j) gr[c].at(0, j) = Cyc::zero(W.field);
        gr[c].at(0, 0) = H.counit[c];
    }
    out.gr_action = Action{H, std::move(gr)};
    out.gr_report = verify_module_algebra(out.gr_algebra, out.gr_action, degree);

    // Taking symbols commutes with the action on every homogeneous component.
    out.symbols_equivariant = true;
    for (size_t c = 0; c < H.n && out.symbols_equivariant; ++c)
        for (const Monomial& m : mons) {
            unsigned d = monomial_degree(m);
            Poly symbol;
            for (const auto& [tm, tc] : ctx.basis_act(c, m))
                if (monomial_degree(tm) == d) symbol.emplace(tm, tc);
            Poly graded = act_on_monomial(out.gr_algebra, out.gr_action,
                                          unit_vec(W.field, H.n, c), m);
            if (!poly_is_zero(poly_add(symbol, poly_scale(Cyc::from_int(W.field, -1), graded)))) {
                out.symbols_equivariant = false;
                break;
            }
        }
    return out;
}

namespace {

/// Inner faithfulness of a matrix action through the dual: the span of the
/// matrix-coefficient functionals is a subcoalgebra of H*, and the action is
/// inner faithful iff it generates all of H* as a Hopf algebra.
bool matrices_inner_faithful(const HopfAlgebra& H, const std::vector<Matrix>& matrices) {
    HopfAlgebra K = dual_hopf(H);
    size_t rows = matrices.front().rows();
    std::vector<Vec> functionals;
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < rows; ++c) {
            Vec f = zero_vec(H.field, H.n);
            for (size_t i = 0; i < H.n; ++i) f[i] = matrices[i].at(r, c);
            functionals.push_back(f);
        }
    Subspace C = Subspace::span(H.field, H.n, functionals);
    return generated_hopf_subalgebra(K, C).dim() == K.n;
}

}  // namespace

WeylVerdict weyl_corollary_pipeline(const WeylAction& act, int degree) {
    const HopfAlgebra& H = act.hopf;
    WeylVerdict v;
    v.h_semisimple = is_semisimple_algebra(H);
    if (!v.h_semisimple)
        v.notes.push_back("H is not semisimple; processed outside the corollary's hypotheses");
    GrTransport gr = associated_graded_transport(act, degree);
    if (!gr.gr_report.ok)
        v.notes.push_back("graded transport is not a module algebra: " + gr.gr_report.failures.front());
    if (!gr.symbols_equivariant)
        v.notes.push_back("leading symbols are not equivariant");
    v.action_inner_faithful = matrices_inner_faithful(H, act.matrices);
    v.gr_inner_faithful = matrices_inner_faithful(H, gr.gr_action.matrices);
    try {
        v.is_group_algebra = recognize_group_algebra(H).is_group_algebra;
    } catch (const UnsplittableOverField& e) {
        v.notes.push_back(std::string("grouplike search on H: ") + e.what());
    }
    v.theorem_violation = v.h_semisimple && v.gr_inner_faithful && !v.is_group_algebra;
    return v;
}

}  // namespace hopfkit
