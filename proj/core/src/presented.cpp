#include "hopfkit/presented.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace hopfkit {

unsigned monomial_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw DimensionMismatch("monomial product");
    Monomial r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

bool monomial_divides(const Monomial& divisor, const Monomial& m) {
    for (size_t i = 0; i < divisor.size(); ++i)
        if (divisor[i] > m[i]) return false;
    return true;
}

PresentedAlgebra PresentedAlgebra::free_commutative(const FieldPtr& f,
                                                    std::vector<std::string> gens,
                                                    int degree_bound) {
    PresentedAlgebra a;
    a.kind = AlgKind::FreeCommutative;
    a.field = f;
    a.generators = std::move(gens);
    a.degree_bound = degree_bound;
    return a;
}

PresentedAlgebra PresentedAlgebra::monomial_quotient(const FieldPtr& f,
                                                     std::vector<std::string> gens,
                                                     std::vector<Monomial> ideal,
                                                     int degree_bound) {
    PresentedAlgebra a;
    a.kind = AlgKind::MonomialQuotient;
    a.field = f;
    a.generators = std::move(gens);
    a.ideal = std::move(ideal);
    a.degree_bound = degree_bound;
    for (const Monomial& m : a.ideal) {
        if (m.size() != a.generators.size()) throw DimensionMismatch("ideal monomial arity");
        if (monomial_degree(m) == 0) throw ValidationError("ideal contains the unit");
    }
    return a;
}

PresentedAlgebra PresentedAlgebra::skew_poly(const FieldPtr& f, std::vector<std::string> gens,
                                             Matrix q, int degree_bound) {
    PresentedAlgebra a;
    a.kind = AlgKind::SkewPoly;
    a.field = f;
    a.generators = std::move(gens);
    a.q = std::move(q);
    a.degree_bound = degree_bound;
    size_t m = a.generators.size();
    if (a.q.rows() != m || a.q.cols() != m) throw DimensionMismatch("skew parameter matrix");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (!(a.q.at(i, j) * a.q.at(j, i)).is_one())
                throw ValidationError("skew parameters must satisfy q_ij*q_ji = 1");
    return a;
}

PresentedAlgebra PresentedAlgebra::finite_dimensional(FDAlgebra fd, int degree_bound) {
    PresentedAlgebra a;
    a.kind = AlgKind::FiniteDimensional;
    a.field = fd.field;
    a.generators = fd.labels;
    a.fd = std::move(fd);
    a.degree_bound = degree_bound;
    return a;
}

bool PresentedAlgebra::monomial_is_zero(const Monomial& m) const {
    if (kind != AlgKind::MonomialQuotient) return false;
    for (const Monomial& g : ideal)
        if (monomial_divides(g, m)) return true;
    return false;
}

bool PresentedAlgebra::is_domain() const {
    switch (kind) {
        case AlgKind::FreeCommutative:
        case AlgKind::SkewPoly:
            return true;
        case AlgKind::MonomialQuotient:
            return ideal.empty();
        case AlgKind::FiniteDimensional: {
            if (fd->n == 1) return true;
            // Exhaustive basis-pair scan for zero divisors.
            for (size_t i = 0; i < fd->n; ++i)
                for (size_t j = 0; j < fd->n; ++j)
                    if (is_zero_vec(fd->mult.col(i * fd->n + j))) return false;
            return true;
        }
    }
    throw UnsupportedKind("is_domain");
}

std::vector<Monomial> PresentedAlgebra::monomials_up_to(int degree) const {
    std::vector<Monomial> out;
    Monomial cur(num_generators(), 0);
    // Lexicographic-by-position enumeration of exponent vectors of total
    // degree <= degree, skipping monomials that die in the quotient.
    std::function<void(size_t, int)> rec = [&](size_t pos, int remaining) {
        if (pos == cur.size()) {
            if (!monomial_is_zero(cur)) out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[pos] = static_cast<unsigned>(e);
            rec(pos + 1, remaining - e);
        }
        cur[pos] = 0;
    };
    rec(0, degree);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (monomial_degree(a) != monomial_degree(b)) return monomial_degree(a) < monomial_degree(b);
        return a > b;  // u1 before u2 within a degree
    });
    return out;
}

std::string PresentedAlgebra::monomial_str(const Monomial& m) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << "*";
        os << generators[i];
        if (m[i] > 1) os << "^" << m[i];
        first = false;
    }
    if (first) return "1";
    return os.str();
}

Monomial PresentedAlgebra::parse_monomial(const std::string& text) const {
    Monomial m(num_generators(), 0);
    if (text == "1") return m;
    std::stringstream ss(text);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        std::string name = factor;
        unsigned e = 1;
        auto caret = factor.find('^');
        if (caret != std::string::npos) {
            name = factor.substr(0, caret);
            try {
                e = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
            } catch (const std::exception&) {
                throw ParseError("bad exponent in monomial '" + text + "'");
            }
        }
        auto it = std::find(generators.begin(), generators.end(), name);
        if (it == generators.end()) throw ParseError("unknown generator '" + name + "'");
        m[it - generators.begin()] += e;
    }
    return m;
}

namespace {

/// Scalar picked up when reordering u^a · u^b into the normal form u^{a+b}.
Cyc reorder_factor(const PresentedAlgebra& A, const Monomial& a, const Monomial& b) {
    if (A.kind != AlgKind::SkewPoly) return Cyc::one(A.field);
    Cyc f = Cyc::one(A.field);
    // Each u_i from b passes every u_j (j > i) from a: u_j u_i = q_ji u_i u_j.
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[j] && b[i]) f *= A.q.at(j, i).pow(static_cast<long>(a[j]) * b[i]);
    return f;
}

void poly_insert(Poly& p, const Monomial& m, const Cyc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

void tensor_insert(PolyTensor& p, const Monomial& m, const Vec& k) {
    if (is_zero_vec(k)) return;
    auto [it, fresh] = p.emplace(m, k);
    if (!fresh) {
        it->second = add(it->second, k);
        if (is_zero_vec(it->second)) p.erase(it);
    }
}

PolyTensor tensor_mul(const PresentedAlgebra& A, const HopfAlgebra& K, const PolyTensor& x,
                      const PolyTensor& y) {
    PolyTensor r;
    for (const auto& [m1, k1] : x)
        for (const auto& [m2, k2] : y) {
            Monomial m = monomial_product(m1, m2);
            if (A.monomial_is_zero(m)) continue;
            Cyc f = reorder_factor(A, m1, m2);
            tensor_insert(r, m, scale(f, K.multiply(k1, k2)));
        }
    return r;
}

PolyTensor tensor_one(const PresentedAlgebra& A, const HopfAlgebra& K) {
    PolyTensor r;
    r.emplace(Monomial(A.num_generators(), 0), K.unit);
    return r;
}

/// Element of A ⊗ K ⊗ K: monomial -> flat n² coordinates.
using PolyTensor2 = std::map<Monomial, Vec>;

std::string tensor_str(const PresentedAlgebra& A, const HopfAlgebra& K, const PolyTensor& t) {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, k] : t) {
        if (!first) os << " + ";
        os << A.monomial_str(m) << " (x) (" << K.format_element(k) << ")";
        first = false;
    }
    return os.str();
}

}  // namespace

Poly poly_mul(const PresentedAlgebra& A, const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [m1, c1] : a)
        for (const auto& [m2, c2] : b) {
            Monomial m = monomial_product(m1, m2);
            if (A.monomial_is_zero(m)) continue;
            poly_insert(r, m, c1 * c2 * reorder_factor(A, m1, m2));
        }
    return r;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(a);
    for (const auto& [m, c] : b) poly_insert(r, m, c);
    return r;
}

Poly poly_scale(const Cyc& c, const Poly& p) {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : p) r.emplace(m, c * x);
    return r;
}

bool poly_is_zero(const Poly& p) { return p.empty(); }

std::string poly_str(const PresentedAlgebra& A, const Poly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << A.monomial_str(m);
        first = false;
    }
    return os.str();
}

PolyTensor coact(const PresentedAlgebra& A, const Coaction& rho, const Monomial& m) {
    if (m.size() != A.num_generators()) throw DimensionMismatch("coact monomial arity");
    if (A.monomial_is_zero(m)) return {};
    PolyTensor r = tensor_one(A, rho.hopf);
    for (size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) r = tensor_mul(A, rho.hopf, r, rho.images[i]);
    return r;
}

Poly act_on_monomial(const PresentedAlgebra& A, const Action& act, const Vec& h,
                     const Monomial& m) {
    const HopfAlgebra& H = act.hopf;
    if (A.monomial_is_zero(m)) return {};
    if (monomial_degree(m) == 0) {
        Poly r;
        poly_insert(r, m, H.counit_of(h));
        return r;
    }
    // Split off the first generator: m = u_i · rest.
    size_t i = 0;
    while (m[i] == 0) ++i;
    Monomial rest(m);
    --rest[i];

    // h·(u_i·rest) = Σ (h₁·u_i)(h₂·rest), expanded over the basis coproduct.
    Vec dh = zero_vec(H.field, H.n * H.n);
    for (size_t a = 0; a < H.n; ++a) {
        if (h[a].is_zero()) continue;
        for (size_t p = 0; p < H.n * H.n; ++p) {
            const Cyc& c = H.comult.at(p, a);
            if (!c.is_zero()) dh[p] += h[a] * c;
        }
    }
    Poly result;
    for (size_t p = 0; p < H.n * H.n; ++p) {
        if (dh[p].is_zero()) continue;
        size_t a = p / H.n, b = p % H.n;
        // e_a · u_i from the affine matrix: column i+1 over {1, u_1..u_m}.
        Poly left;
        const Matrix& ma = act.matrices[a];
        if (!ma.at(0, i + 1).is_zero())
            poly_insert(left, Monomial(A.num_generators(), 0), ma.at(0, i + 1));
        for (size_t j = 0; j < A.num_generators(); ++j) {
            if (ma.at(j + 1, i + 1).is_zero()) continue;
            Monomial uj(A.num_generators(), 0);
            uj[j] = 1;
            poly_insert(left, uj, ma.at(j + 1, i + 1));
        }
        Poly right = act_on_monomial(A, act, unit_vec(H.field, H.n, b), rest);
        result = poly_add(result, poly_scale(dh[p], poly_mul(A, left, right)));
    }
    return result;
}

Poly act_on_poly(const PresentedAlgebra& A, const Action& act, const Vec& h, const Poly& p) {
    Poly r;
    for (const auto& [m, c] : p) r = poly_add(r, poly_scale(c, act_on_monomial(A, act, h, m)));
    return r;
}

VerifyReport verify_comodule_algebra(const PresentedAlgebra& A, const Coaction& rho, int degree) {
    VerifyReport rep;
    const HopfAlgebra& K = rho.hopf;
    size_t n = K.n;
    if (rho.images.size() != A.num_generators()) {
        rep.ok = false;
        rep.failures.push_back("image list does not match the generators");
        return rep;
    }
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.failures.push_back(s);
    };

    std::vector<Monomial> mons = A.monomials_up_to(degree);
    std::map<Monomial, PolyTensor> rho_of;
    for (const Monomial& m : mons) rho_of[m] = coact(A, rho, m);

    for (const Monomial& m : mons) {
        const PolyTensor& t = rho_of[m];
        // Counit: (id⊗ε)ρ(m) = m.
        Poly counit_slice;
        for (const auto& [mm, k] : t) poly_insert(counit_slice, mm, K.counit_of(k));
        Poly expected;
        poly_insert(expected, m, Cyc::one(A.field));
        if (counit_slice != expected)
            fail("counit fails on " + A.monomial_str(m) + ": (id(x)eps)rho = " +
                 poly_str(A, counit_slice));
        // Coassociativity: (ρ⊗id)ρ = (id⊗Δ)ρ.
        PolyTensor2 lhs, rhs;
        for (const auto& [mm, k] : t) {
            const PolyTensor& inner = rho_of.count(mm) ? rho_of[mm] : coact(A, rho, mm);
            for (const auto& [m2, k2] : inner) {
                Vec flat = zero_vec(A.field, n * n);
                for (size_t a = 0; a < n; ++a) {
                    if (k2[a].is_zero()) continue;
                    for (size_t b = 0; b < n; ++b)
                        if (!k[b].is_zero()) flat[a * n + b] = k2[a] * k[b];
                }
                auto [it, fresh] = lhs.emplace(m2, flat);
                if (!fresh) it->second = add(it->second, flat);
            }
            auto [it, fresh] = rhs.emplace(mm, K.coproduct(k));
            if (!fresh) it->second = add(it->second, K.coproduct(k));
        }
        for (auto it = lhs.begin(); it != lhs.end();)
            it = is_zero_vec(it->second) ? lhs.erase(it) : std::next(it);
        for (auto it = rhs.begin(); it != rhs.end();)
            it = is_zero_vec(it->second) ? rhs.erase(it) : std::next(it);
        if (lhs != rhs) fail("coassociativity fails on " + A.monomial_str(m));
    }

    // Multiplicativity on pairs within the degree budget.
    for (const Monomial& a : mons)
        for (const Monomial& b : mons) {
            if (monomial_degree(a) + monomial_degree(b) > static_cast<unsigned>(degree)) continue;
            Monomial ab = monomial_product(a, b);
            PolyTensor lhs = A.monomial_is_zero(ab) ? PolyTensor{} : coact(A, rho, ab);
            PolyTensor rhs = tensor_mul(A, K, rho_of[a], rho_of[b]);
            if (lhs != rhs)
                fail("multiplicativity fails on (" + A.monomial_str(a) + ", " +
                     A.monomial_str(b) + ")");
        }

    // Relations must map to 0 in A ⊗ K.
    for (const Monomial& r : A.ideal) {
        PolyTensor image = tensor_one(A, K);
        for (size_t i = 0; i < r.size(); ++i)
            for (unsigned e = 0; e < r[i]; ++e) image = tensor_mul(A, K, image, rho.images[i]);
        if (!image.empty())
            fail("relation " + A.monomial_str(r) + " maps to " + tensor_str(A, K, image));
    }
    return rep;
}

VerifyReport verify_module_algebra(const PresentedAlgebra& A, const Action& act, int degree) {
    VerifyReport rep;
    const HopfAlgebra& H = act.hopf;
    size_t m = A.num_generators();
    if (act.matrices.size() != H.n) {
        rep.ok = false;
        rep.failures.push_back("matrix list does not match the Hopf basis");
        return rep;
    }
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.failures.push_back(s);
    };
    for (const Matrix& mat : act.matrices)
        if (mat.rows() != m + 1 || mat.cols() != m + 1) {
            rep.ok = false;
            rep.failures.push_back("action matrix has wrong shape");
            return rep;
        }

    // h·1 = ε(h)·1.
    for (size_t a = 0; a < H.n; ++a) {
        Vec col0 = act.matrices[a].col(0);
        Vec want = zero_vec(A.field, m + 1);
        want[0] = H.counit[a];
        if (col0 != want) fail("unit axiom fails for " + H.label(a));
    }

    std::vector<Monomial> mons = A.monomials_up_to(degree);

    // Coproduct rule on products: h·nf(pq) = Σ (h₁·p)(h₂·q).
    for (size_t a = 0; a < H.n; ++a) {
        Vec ea = unit_vec(H.field, H.n, a);
        for (const Monomial& p : mons)
            for (const Monomial& q : mons) {
                if (monomial_degree(p) + monomial_degree(q) > static_cast<unsigned>(degree))
                    continue;
                Monomial pq = monomial_product(p, q);
                Poly lhs = A.monomial_is_zero(pq) ? Poly{} : act_on_monomial(A, act, ea, pq);
                Poly rhs;
                for (size_t t = 0; t < H.n * H.n; ++t) {
                    const Cyc& c = H.comult.at(t, a);
                    if (c.is_zero()) continue;
                    Poly left = act_on_monomial(A, act, unit_vec(H.field, H.n, t / H.n), p);
                    Poly right = act_on_monomial(A, act, unit_vec(H.field, H.n, t % H.n), q);
                    rhs = poly_add(rhs, poly_scale(c, poly_mul(A, left, right)));
                }
                if (lhs != rhs)
                    fail("product rule fails: (" + H.label(a) + ", " + A.monomial_str(p) + ", " +
                         A.monomial_str(q) + ")");
            }
    }

    // Module axiom (gh)·x = g·(h·x) on generators (degree-1 monomials suffice
    // for linear actions; higher degrees follow from the product rule).
    for (size_t a = 0; a < H.n; ++a)
        for (size_t b = 0; b < H.n; ++b) {
            Vec prod = H.multiply(unit_vec(H.field, H.n, a), unit_vec(H.field, H.n, b));
            for (size_t i = 0; i < m; ++i) {
                Monomial ui(m, 0);
                ui[i] = 1;
                Poly lhs = act_on_monomial(A, act, prod, ui);
                Poly inner = act_on_monomial(A, act, unit_vec(H.field, H.n, b), ui);
                Poly rhs = act_on_poly(A, act, unit_vec(H.field, H.n, a), inner);
                if (lhs != rhs)
                    fail("module axiom fails: (" + H.label(a) + "·" + H.label(b) + ", " +
                         A.generators[i] + ")");
            }
        }
    return rep;
}

Action coaction_to_action(const PresentedAlgebra& A, const Coaction& rho) {
    auto rep = verify_comodule_algebra(A, rho, A.degree_bound);
    if (!rep.ok) throw UnverifiedSource("coaction fails verification: " + rep.failures.front());
    size_t m = A.num_generators();
    const HopfAlgebra& K = rho.hopf;
    for (const PolyTensor& im : rho.images)
        for (const auto& [mon, k] : im)
            if (monomial_degree(mon) > 1)
                throw UnsupportedKind("coaction images must be affine for conversion");

    Action act;
    act.hopf = dual_hopf(K);
    act.matrices.assign(K.n, Matrix(A.field, m + 1, m + 1));
    for (size_t a = 0; a < K.n; ++a) {
        // e_a* · 1 = ε_{K*}(e_a*)·1 = (coefficient of e_a in 1_K)·1.
        act.matrices[a].at(0, 0) = K.unit[a];
        for (size_t i = 0; i < m; ++i) {
            for (const auto& [mon, k] : rho.images[i]) {
                if (monomial_degree(mon) == 0) {
                    act.matrices[a].at(0, i + 1) += k[a];
                } else {
                    size_t j = 0;
                    while (mon[j] == 0) ++j;
                    act.matrices[a].at(j + 1, i + 1) += k[a];
                }
            }
        }
    }
    return act;
}

Coaction action_to_coaction(const PresentedAlgebra& A, const Action& act) {
    auto rep = verify_module_algebra(A, act, A.degree_bound);
    if (!rep.ok) throw UnverifiedSource("action fails verification: " + rep.failures.front());
    size_t m = A.num_generators();
    const HopfAlgebra& H = act.hopf;
    Coaction rho;
    rho.hopf = dual_hopf(H);
    rho.images.assign(m, PolyTensor{});
    for (size_t i = 0; i < m; ++i) {
        // ρ(u_i) = Σ_a (e_a·u_i) ⊗ e_a*.
        for (size_t a = 0; a < H.n; ++a) {
            const Cyc& c0 = act.matrices[a].at(0, i + 1);
            if (!c0.is_zero()) {
                Vec k = zero_vec(H.field, H.n);
                k[a] = c0;
                tensor_insert(rho.images[i], Monomial(m, 0), k);
            }
            for (size_t j = 0; j < m; ++j) {
                const Cyc& c = act.matrices[a].at(j + 1, i + 1);
                if (c.is_zero()) continue;
                Monomial uj(m, 0);
                uj[j] = 1;
                Vec k = zero_vec(H.field, H.n);
                k[a] = c;
                tensor_insert(rho.images[i], uj, k);
            }
        }
    }
    return rho;
}

bool character_check(const PresentedAlgebra& A, const Character& chi) {
    if (A.kind != AlgKind::FreeCommutative && A.kind != AlgKind::MonomialQuotient)
        throw UnsupportedKind("characters require a commutative presentation");
    if (chi.values.size() != A.num_generators())
        throw DimensionMismatch("character value count");
    for (const Monomial& r : A.ideal) {
        Cyc v = Cyc::one(A.field);
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i]) v *= chi.values[i].pow(r[i]);
        if (!v.is_zero()) return false;
    }
    return true;
}

std::vector<Character> sample_characters(const PresentedAlgebra& A, std::uint64_t seed,
                                         size_t count) {
    if (A.kind != AlgKind::FreeCommutative && A.kind != AlgKind::MonomialQuotient)
        throw UnsupportedKind("characters require a commutative presentation");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    std::vector<Character> out;
    std::set<std::vector<std::string>> seen;
    size_t stale = 0;
    const size_t stale_limit = 500;
    while (out.size() < count && stale < stale_limit * count) {
        Character chi;
        for (size_t i = 0; i < A.num_generators(); ++i)
            chi.values.push_back(Cyc::from_rational(A.field, make_rational(num(rng), den(rng))));
        if (!character_check(A, chi)) {
            ++stale;
            continue;
        }
        std::vector<std::string> key;
        for (const Cyc& v : chi.values) key.push_back(v.str());
        if (seen.count(key)) {
            // Prefer distinct characters; repeat only once the grid looks
            // exhausted so small strata still fill the requested count.
            ++stale;
            if (stale < stale_limit) continue;
        }
        seen.insert(key);
        out.push_back(std::move(chi));
        stale = 0;
    }
    return out;
}

std::string character_set_description(const PresentedAlgebra& A) {
    if (A.kind != AlgKind::FreeCommutative && A.kind != AlgKind::MonomialQuotient)
        throw UnsupportedKind("characters require a commutative presentation");
    std::ostringstream os;
    os << "characters assign scalars to";
    for (const std::string& g : A.generators) os << " " << g;
    if (A.ideal.empty()) {
        os << ", unconstrained";
        return os.str();
    }
    for (const Monomial& r : A.ideal) {
        bool pure = false;
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] == monomial_degree(r) && r[i] > 0) {
                os << "; chi(" << A.generators[i] << ") = 0";
                pure = true;
            }
        if (!pure) os << "; chi(" << A.monomial_str(r) << ") = 0";
    }
    return os.str();
}

Subspace coefficient_coalgebra(const PresentedAlgebra& A, const Coaction& rho) {
    auto rep = verify_comodule_algebra(A, rho, A.degree_bound);
    if (!rep.ok) throw UnverifiedSource("coaction fails verification: " + rep.failures.front());
    const HopfAlgebra& K = rho.hopf;
    std::vector<Vec> gens = {K.unit};
    for (const PolyTensor& im : rho.images)
        for (const auto& [mon, k] : im) gens.push_back(k);
    Subspace c = Subspace::span(A.field, K.n, gens);
    // Subcoalgebra certificate: both tensor legs of Δ(C) stay in C.
    for (size_t r = 0; r < c.dim(); ++r) {
        Vec t = K.coproduct(c.basis().row(r));
        for (size_t b = 0; b < K.n; ++b) {
            Vec first = zero_vec(A.field, K.n);
            for (size_t a = 0; a < K.n; ++a) first[a] = t[a * K.n + b];
            if (!c.contains(first))
                throw NotASubcoalgebra("coefficient span is not left coclosed");
        }
        for (size_t a = 0; a < K.n; ++a) {
            Vec second = zero_vec(A.field, K.n);
            for (size_t b = 0; b < K.n; ++b) second[b] = t[a * K.n + b];
            if (!c.contains(second))
                throw NotASubcoalgebra("coefficient span is not right coclosed");
        }
    }
    return c;
}

FDAlgebra finite_dimensional_algebra(const PresentedAlgebra& A) {
    if (A.kind == AlgKind::FiniteDimensional) return *A.fd;
    if (A.kind != AlgKind::MonomialQuotient)
        throw InfiniteDimensional("free presentations have no finite monomial basis");
    // Finite iff every generator has a pure-power relation.
    unsigned bound = 0;
    for (size_t i = 0; i < A.num_generators(); ++i) {
        unsigned nilpotency = 0;
        for (const Monomial& r : A.ideal) {
            if (r[i] == 0 || r[i] != monomial_degree(r)) continue;
            if (nilpotency == 0 || r[i] < nilpotency) nilpotency = r[i];
        }
        if (nilpotency == 0)
            throw InfiniteDimensional("generator " + A.generators[i] + " is not nilpotent");
        bound += nilpotency - 1;
    }
    std::vector<Monomial> basis = A.monomials_up_to(static_cast<int>(bound));
    size_t n = basis.size();
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < n; ++i) index[basis[i]] = i;

    FDAlgebra B;
    B.field = A.field;
    B.n = n;
    B.mult = Matrix(A.field, n, n * n);
    B.unit = unit_vec(A.field, n, index.at(Monomial(A.num_generators(), 0)));
    for (const Monomial& m : basis) B.labels.push_back(A.monomial_str(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Monomial p = monomial_product(basis[i], basis[j]);
            if (!A.monomial_is_zero(p)) B.mult.at(index.at(p), i * n + j) = Cyc::one(A.field);
        }
    return B;
}

std::vector<Matrix> action_matrices_on_basis(const PresentedAlgebra& A, const Action& act) {
    FDAlgebra B = finite_dimensional_algebra(A);
    unsigned max_deg = 0;
    std::vector<Monomial> basis;
    for (const std::string& label : B.labels) {
        basis.push_back(A.parse_monomial(label));
        max_deg = std::max(max_deg, monomial_degree(basis.back()));
    }
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    const HopfAlgebra& H = act.hopf;
    std::vector<Matrix> out(H.n, Matrix(A.field, B.n, B.n));
    for (size_t a = 0; a < H.n; ++a)
        for (size_t j = 0; j < B.n; ++j) {
            Poly img = act_on_monomial(A, act, unit_vec(H.field, H.n, a), basis[j]);
            for (const auto& [m, c] : img) out[a].at(index.at(m), j) = c;
        }
    return out;
}

FDAlgebra smash_product(const PresentedAlgebra& A, const Action& act) {
    auto rep = verify_module_algebra(A, act, A.degree_bound);
    if (!rep.ok) throw UnverifiedSource("action fails verification: " + rep.failures.front());
    FDAlgebra B = finite_dimensional_algebra(A);
    std::vector<Matrix> mats = action_matrices_on_basis(A, act);
    const HopfAlgebra& H = act.hopf;
    size_t na = B.n, nh = H.n, n = na * nh;

    FDAlgebra S;
    S.field = A.field;
    S.n = n;
    S.mult = Matrix(A.field, n, n * n);
    S.unit = zero_vec(A.field, n);
    for (size_t i = 0; i < na; ++i)
        for (size_t a = 0; a < nh; ++a) {
            S.labels.push_back(B.labels[i] + "#" + H.label(a));
            S.unit[i * nh + a] = B.unit[i] * H.unit[a];
        }
    // (a#h)(b#h') = Σ a(h₁·b) # h₂h'.
    for (size_t i = 0; i < na; ++i)
        for (size_t a = 0; a < nh; ++a)
            for (size_t j = 0; j < na; ++j)
                for (size_t b = 0; b < nh; ++b) {
                    Vec result = zero_vec(A.field, n);
                    for (size_t p = 0; p < nh * nh; ++p) {
                        const Cyc& c = H.comult.at(p, a);
                        if (c.is_zero()) continue;
                        size_t h1 = p / nh, h2 = p % nh;
                        Vec moved = mats[h1].col(j);           // h₁·b in A
                        Vec prod_a = B.multiply(unit_vec(A.field, na, i), moved);
                        Vec prod_h =
                            H.multiply(unit_vec(A.field, nh, h2), unit_vec(A.field, nh, b));
                        for (size_t x = 0; x < na; ++x) {
                            if (prod_a[x].is_zero()) continue;
                            for (size_t y = 0; y < nh; ++y)
                                if (!prod_h[y].is_zero())
                                    result[x * nh + y] += c * prod_a[x] * prod_h[y];
                        }
                    }
                    S.mult.set_col((i * nh + a) * n + (j * nh + b), result);
                }
    // Exhaustive associativity check over basis triples.
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t z = 0; z < n; ++z) {
                Vec xy = S.mult.col(x * n + y);
                Vec yz = S.mult.col(y * n + z);
                if (S.multiply(xy, unit_vec(A.field, n, z)) !=
                    S.multiply(unit_vec(A.field, n, x), yz))
                    throw ValidationError("smash product is not associative");
            }
    return S;
}

Subspace module_faithfulness_kernel(const PresentedAlgebra& A, const Action& act) {
    auto rep = verify_module_algebra(A, act, A.degree_bound);
    if (!rep.ok) throw UnverifiedSource("action fails verification: " + rep.failures.front());
    FDAlgebra B = finite_dimensional_algebra(A);
    std::vector<Matrix> mats = action_matrices_on_basis(A, act);
    const HopfAlgebra& H = act.hopf;
    size_t na = B.n, nh = H.n, n = na * nh;
    // Columns: the flattened matrix by which a_i#h_a acts on A.
    Matrix rep_matrix(A.field, na * na, n);
    for (size_t i = 0; i < na; ++i)
        for (size_t a = 0; a < nh; ++a)
            for (size_t j = 0; j < na; ++j) {
                Vec img = B.multiply(unit_vec(A.field, na, i), mats[a].col(j));
                for (size_t x = 0; x < na; ++x) rep_matrix.at(x * na + j, i * nh + a) = img[x];
            }
    Matrix k = rep_matrix.kernel();
    std::vector<Vec> rows;
    for (size_t r = 0; r < k.rows(); ++r) rows.push_back(k.row(r));
    return Subspace::span(A.field, n, rows);
}

PresentedAlgebra twist_module_algebra(const PresentedAlgebra& A, const Action& act,
                                      const TwistSpec& spec) {
    if (A.kind != AlgKind::FreeCommutative)
        throw UnsupportedKind("twisting requires a free commutative polynomial algebra");
    auto rep = verify_module_algebra(A, act, A.degree_bound);
    if (!rep.ok) throw UnverifiedSource("action fails verification: " + rep.failures.front());
    const HopfAlgebra& H = act.hopf;
    if (H.n != spec.n) throw DimensionMismatch("twist does not match the acting group algebra");
    size_t m = A.num_generators();

    // Eigenvalues of the embedded L-elements (and anything in J's support) on
    // each generator line.
    std::set<size_t> support(spec.embedding.begin(), spec.embedding.end());
    for (size_t p = 0; p < spec.n * spec.n; ++p)
        if (!spec.j[p].is_zero()) {
            support.insert(p / spec.n);
            support.insert(p % spec.n);
        }
    std::map<size_t, std::vector<Cyc>> eigen;  // group index -> eigenvalue per generator
    for (size_t g : support) {
        std::vector<Cyc> row;
        for (size_t i = 0; i < m; ++i) {
            Vec col = act.matrices[g].col(i + 1);
            Cyc lambda = col[i + 1];
            Vec expected = zero_vec(A.field, m + 1);
            expected[i + 1] = lambda;
            if (col != expected)
                throw NotDiagonal(A.generators[i] + " under " + H.label(g));
            row.push_back(lambda);
        }
        eigen[g] = row;
    }

    // u_i ∗ u_j = Σ J[a,b] (g_a·u_i)(g_b·u_j) = c_ij · u_i u_j.
    Matrix c(A.field, m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            Cyc sum = Cyc::zero(A.field);
            for (size_t p = 0; p < spec.n * spec.n; ++p) {
                if (spec.j[p].is_zero()) continue;
                sum += spec.j[p] * eigen.at(p / spec.n)[i] * eigen.at(p % spec.n)[j];
            }
            if (sum.is_zero()) throw NotATwist("twisted product degenerates on generators");
            c.at(i, j) = sum;
        }
    Matrix q(A.field, m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) q.at(i, j) = c.at(i, j) / c.at(j, i);

    PresentedAlgebra out = PresentedAlgebra::skew_poly(A.field, A.generators, q, A.degree_bound);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (!q.at(i, j).pow(spec.d).is_one())
                throw NotATwist("skew parameter is not a d-th root of unity");
    // Re-verify associativity of ∗ on monomial triples within the budget.
    std::vector<Monomial> mons = out.monomials_up_to(out.degree_bound / 2 + 1);
    for (const Monomial& x : mons)
        for (const Monomial& y : mons)
            for (const Monomial& z : mons) {
                Poly px{{x, Cyc::one(A.field)}}, py{{y, Cyc::one(A.field)}},
                    pz{{z, Cyc::one(A.field)}};
                if (poly_mul(out, poly_mul(out, px, py), pz) !=
                    poly_mul(out, px, poly_mul(out, py, pz)))
                    throw NotATwist("twisted product is not associative");
            }
    return out;
}

}  // namespace hopfkit
