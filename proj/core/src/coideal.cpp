#include "hopfkit/coideal.hpp"

namespace hopfkit {

namespace {

void require_verified(const PresentedAlgebra& A, const Coaction& rho) {
    auto rep = verify_comodule_algebra(A, rho, A.degree_bound);
    if (!rep.ok) throw UnverifiedSource("coaction fails verification: " + rep.failures.front());
}

void require_character(const PresentedAlgebra& A, const Character& chi) {
    if (!character_check(A, chi)) throw InvalidCharacter("relations do not vanish");
}

Cyc evaluate(const PresentedAlgebra& A, const Character& chi, const Monomial& m) {
    Cyc v = Cyc::one(A.field);
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i]) v *= chi.values[i].pow(m[i]);
    return v;
}

std::vector<Vec> generator_images(const PresentedAlgebra& A, const Coaction& rho,
                                  const Character& chi) {
    const HopfAlgebra& K = rho.hopf;
    std::vector<Vec> images;
    for (const PolyTensor& im : rho.images) {
        Vec v = zero_vec(A.field, K.n);
        for (const auto& [m, k] : im) v = add(v, scale(evaluate(A, chi, m), k));
        images.push_back(v);
    }
    return images;
}

Vec image_of_monomial(const PresentedAlgebra& A, const HopfAlgebra& K,
                      const std::vector<Vec>& gens, const Monomial& m) {
    if (A.monomial_is_zero(m)) return zero_vec(A.field, K.n);
    Vec v = K.unit;
    for (size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) v = K.multiply(v, gens[i]);
    return v;
}

Subspace a_chi_unchecked(const PresentedAlgebra& A, const Coaction& rho, const Character& chi) {
    const HopfAlgebra& K = rho.hopf;
    return subalgebra_closure(K, Subspace::span(A.field, K.n, generator_images(A, rho, chi)));
}

}  // namespace

std::vector<Vec> rho_chi(const PresentedAlgebra& A, const Coaction& rho, const Character& chi) {
    require_verified(A, rho);
    require_character(A, chi);
    return generator_images(A, rho, chi);
}

Vec rho_chi_of_monomial(const PresentedAlgebra& A, const Coaction& rho, const Character& chi,
                        const Monomial& m) {
    require_verified(A, rho);
    require_character(A, chi);
    return image_of_monomial(A, rho.hopf, generator_images(A, rho, chi), m);
}

bool rho_chi_identity_holds(const PresentedAlgebra& A, const Coaction& rho, const Character& chi) {
    require_verified(A, rho);
    require_character(A, chi);
    const HopfAlgebra& K = rho.hopf;
    std::vector<Vec> gens = generator_images(A, rho, chi);
    for (size_t i = 0; i < A.num_generators(); ++i) {
        Vec lhs = K.coproduct(gens[i]);
        // (ρ_χ⊗id)ρ(u_i) = Σ ρ_χ(m) ⊗ k over the image terms of u_i.
        Vec rhs = zero_vec(A.field, K.n * K.n);
        for (const auto& [m, k] : rho.images[i]) {
            Vec left = image_of_monomial(A, K, gens, m);
            for (size_t a = 0; a < K.n; ++a) {
                if (left[a].is_zero()) continue;
                for (size_t b = 0; b < K.n; ++b)
                    if (!k[b].is_zero()) rhs[a * K.n + b] += left[a] * k[b];
            }
        }
        if (lhs != rhs) return false;
    }
    return true;
}

Subspace a_chi(const PresentedAlgebra& A, const Coaction& rho, const Character& chi) {
    require_verified(A, rho);
    require_character(A, chi);
    return a_chi_unchecked(A, rho, chi);
}

LaSpan l_a_span(const PresentedAlgebra& A, const Coaction& rho,
                const std::vector<Character>& chis) {
    require_verified(A, rho);
    const HopfAlgebra& K = rho.hopf;
    LaSpan out;
    out.span = Subspace::zero(A.field, K.n);
    for (const Character& chi : chis) {
        require_character(A, chi);
        out.span = out.span + a_chi_unchecked(A, rho, chi);
        out.witnesses.push_back(chi);
    }
    return out;
}

LaSpan l_a_span_sampled(const PresentedAlgebra& A, const Coaction& rho, std::uint64_t seed,
                        size_t max_samples, size_t window) {
    require_verified(A, rho);
    const HopfAlgebra& K = rho.hopf;
    std::vector<Character> chis = sample_characters(A, seed, max_samples);
    LaSpan out;
    out.span = Subspace::zero(A.field, K.n);
    size_t stable = 0;
    for (const Character& chi : chis) {
        size_t before = out.span.dim();
        out.span = out.span + a_chi_unchecked(A, rho, chi);
        out.witnesses.push_back(chi);
        stable = (out.span.dim() == before) ? stable + 1 : 0;
        if (stable >= window) {
            out.saturated = true;
            break;
        }
    }
    return out;
}

bool restricted_coaction_check(const PresentedAlgebra& A, const Coaction& rho, const Subspace& L,
                               int degree) {
    for (const Monomial& m : A.monomials_up_to(degree)) {
        for (const auto& [mon, k] : coact(A, rho, m))
            if (!L.contains(k)) return false;
    }
    return true;
}

InnerFaithfulResult inner_faithful(const PresentedAlgebra& A, const Coaction& rho) {
    const HopfAlgebra& K = rho.hopf;
    Subspace c = coefficient_coalgebra(A, rho);  // verifies ρ
    InnerFaithfulResult r;
    r.smallest_hopf_subalgebra = generated_hopf_subalgebra(K, c);
    r.inner_faithful = r.smallest_hopf_subalgebra.dim() == K.n;
    return r;
}

ScanReport coideal_scan(const PresentedAlgebra& A, const Coaction& rho, std::uint64_t seed,
                        size_t samples) {
    require_verified(A, rho);
    std::vector<Character> chis = sample_characters(A, seed, samples);
    ScanReport rep;
    rep.samples = chis.size();
    std::vector<Subspace> values;
    for (const Character& chi : chis) {
        Subspace v = a_chi_unchecked(A, rho, chi);
        values.push_back(v);
        bool found = false;
        for (auto& [s, mult] : rep.distinct_subspaces)
            if (s == v) {
                ++mult;
                found = true;
                break;
            }
        if (!found) rep.distinct_subspaces.emplace_back(v, 1);
        rep.max_dim = std::max(rep.max_dim, v.dim());
    }
    if (!rep.distinct_subspaces.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < rep.distinct_subspaces.size(); ++i)
            if (rep.distinct_subspaces[i].second > rep.distinct_subspaces[best].second) best = i;
        rep.generic_value = rep.distinct_subspaces[best].first;
        for (size_t i = 0; i < chis.size(); ++i)
            if (!(values[i] == rep.generic_value))
                rep.degenerate_strata.emplace_back(chis[i], values[i]);
    }
    return rep;
}

MainTheoremVerdict main_theorem_pipeline(const PresentedAlgebra& A, const Coaction& rho) {
    require_verified(A, rho);
    const HopfAlgebra& K = rho.hopf;
    MainTheoremVerdict v;
    v.k_semisimple = is_semisimple_algebra(K);
    v.a_domain = A.is_domain();
    InnerFaithfulResult inf = inner_faithful(A, rho);
    v.coaction_inner_faithful = inf.inner_faithful;
    v.k_commutative = is_commutative(K);
    try {
        v.k_group = recognize_group_algebra(K);
    } catch (const UnsplittableOverField& e) {
        v.notes.push_back(std::string("grouplike search on K: ") + e.what());
    }
    try {
        v.dual_group = recognize_group_algebra(dual_hopf(K));
    } catch (const UnsplittableOverField& e) {
        v.notes.push_back(std::string("grouplike search on K*: ") + e.what());
    }
    v.hypotheses_hold = v.k_semisimple && v.a_domain && v.coaction_inner_faithful;
    v.theorem_violation = v.hypotheses_hold && !v.k_commutative;
    if (!v.k_semisimple) v.notes.push_back("hypothesis fails: K is not semisimple");
    if (!v.a_domain) v.notes.push_back("hypothesis fails: A is not a domain");
    if (!v.coaction_inner_faithful)
        v.notes.push_back("hypothesis fails: the coaction is not inner faithful");
    return v;
}

}  // namespace hopfkit
