#include "doctest.h"
#include "hopfkit/coideal.hpp"

using namespace hopfkit;

namespace {

FieldPtr Q() { return CycloField::create(1); }

Vec qv(const std::vector<long>& v) {
    Vec r;
    for (long x : v) r.push_back(Cyc::from_int(Q(), x));
    return r;
}

Character qchi(const std::vector<long>& v) {
    Character chi;
    for (long x : v) chi.values.push_back(Cyc::from_int(Q(), x));
    return chi;
}

void accumulate(PolyTensor& t, const Monomial& m, const Vec& k) {
    auto [it, fresh] = t.emplace(m, k);
    if (!fresh) it->second = add(it->second, k);
}

/// ρ(u) = u ⊗ ḡ + 1 ⊗ x̄ on k[u], K = dual Sweedler.
Coaction sweedler_dual_coaction() {
    Coaction rho;
    rho.hopf = dual_hopf(sweedler(Q()));
    PolyTensor im;
    im.emplace(Monomial{1}, qv({1, -1, 0, 0}));
    im.emplace(Monomial{0}, qv({0, 0, 1, 1}));
    rho.images = {im};
    return rho;
}

/// ρ(u_i) = Σ_g u_{g(i)} ⊗ δ_g on k[u1,u2,u3], K = dual(kS₃): the coaction
/// dual to the permutation action.
Coaction dual_s3_coaction() {
    GroupSpec s3 = GroupSpec::symmetric(3);
    auto perms = symmetric_permutations(3);
    Coaction rho;
    rho.hopf = dual_group_algebra(s3, Q());
    rho.images.assign(3, PolyTensor{});
    for (size_t i = 0; i < 3; ++i)
        for (size_t g = 0; g < 6; ++g) {
            Monomial m(3, 0);
            m[perms[g][i]] = 1;
            accumulate(rho.images[i], m, unit_vec(Q(), 6, g));
        }
    return rho;
}

/// ρ(u_i) = u_i ⊗ s_i on a quotient of k[u1,u2], K = kS₃.
Coaction s3_monomial_coaction() {
    GroupSpec spec = GroupSpec::symmetric(3);
    Coaction rho;
    rho.hopf = group_algebra(spec, Q());
    PolyTensor im1, im2;
    im1.emplace(Monomial{1, 0}, unit_vec(Q(), 6, spec.element("(12)")));
    im2.emplace(Monomial{0, 1}, unit_vec(Q(), 6, spec.element("(23)")));
    rho.images = {im1, im2};
    return rho;
}

Coaction trivial_coaction(const HopfAlgebra& k, size_t gens) {
    Coaction rho;
    rho.hopf = k;
    for (size_t i = 0; i < gens; ++i) {
        Monomial m(gens, 0);
        m[i] = 1;
        PolyTensor im;
        im.emplace(m, k.unit);
        rho.images.push_back(im);
    }
    return rho;
}

}  // namespace

TEST_CASE("sweedler coideal family: five distinct dim-2 coideal subalgebras") {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    Coaction rho = sweedler_dual_coaction();
    std::vector<Subspace> seen;
    for (long alpha : {0L, 1L, -1L, 2L, 3L}) {
        Character chi = qchi({alpha});
        Subspace b = a_chi(A, rho, chi);
        CHECK(b.dim() == 2);
        CHECK(b.contains(rho.hopf.unit));
        CHECK(b.contains(qv({alpha, -alpha, 1, 1})));  // h_χ = αḡ + x̄
        CHECK(is_coideal_subalgebra(rho.hopf, b, CoidealSide::Right).ok);
        for (const Subspace& s : seen) CHECK_FALSE(s == b);
        seen.push_back(b);
        CHECK(rho_chi_identity_holds(A, rho, chi));
    }
}

TEST_CASE("trivial coaction gives the trivial coideal") {
    HopfAlgebra kz2 = group_algebra(GroupSpec::cyclic(2), Q());
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    Coaction rho = trivial_coaction(kz2, 1);
    Subspace b = a_chi(A, rho, qchi({5}));
    CHECK(b.dim() == 1);
    CHECK(b.contains(kz2.unit));
    CHECK(rho_chi_identity_holds(A, rho, qchi({5})));
}

TEST_CASE("symmetric character degenerates for the dual permutation coaction") {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u1", "u2", "u3"});
    Coaction rho = dual_s3_coaction();
    REQUIRE(verify_comodule_algebra(A, rho, 4).ok);
    // χ = (1,1,1): ρ_χ(u_i) = Σ_g δ_g = 1_K.
    auto images = rho_chi(A, rho, qchi({1, 1, 1}));
    for (const Vec& v : images) CHECK(v == rho.hopf.unit);
    CHECK(a_chi(A, rho, qchi({1, 1, 1})).dim() == 1);
    // A generic point closes up to all of K.
    CHECK(a_chi(A, rho, qchi({1, 2, 3})).dim() == 6);
    CHECK(rho_chi_identity_holds(A, rho, qchi({1, 2, 3})));
}

TEST_CASE("invalid inputs are rejected") {
    auto A = PresentedAlgebra::monomial_quotient(Q(), {"u1", "u2"}, {{1, 1}});
    Coaction rho = s3_monomial_coaction();
    CHECK_THROWS_AS(a_chi(A, rho, qchi({1, 1})), InvalidCharacter);  // u1u2 ↦ 1 ≠ 0
    Coaction broken = rho;
    // δ_e + δ_(12) is not grouplike, so coassociativity fails.
    broken.images[0].begin()->second = qv({1, 1, 0, 0, 0, 0});
    CHECK_THROWS_AS(a_chi(A, broken, qchi({1, 0})), UnverifiedSource);
}

TEST_CASE("L_A span of the Sweedler instance") {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    Coaction rho = sweedler_dual_coaction();
    LaSpan la = l_a_span(A, rho, {qchi({0}), qchi({1})});
    CHECK(la.span.dim() == 3);
    CHECK(la.span == Subspace::span(Q(), 4, {rho.hopf.unit, qv({1, -1, 0, 0}), qv({0, 0, 1, 1})}));
    // Lemma part (b): the saturated span is a subcoalgebra.
    CHECK(is_subcoalgebra(rho.hopf, la.span));
    // ⟨L_A⟩ = K, dim 4; K noncommutative.
    CHECK(generated_hopf_subalgebra(rho.hopf, la.span).dim() == 4);
    CHECK_FALSE(is_commutative(rho.hopf));
    // Lemma part (a): ρ restricts to A ⊗ L_A.
    CHECK(restricted_coaction_check(A, rho, la.span, 4));
    CHECK_FALSE(restricted_coaction_check(A, rho, Subspace::span(Q(), 4, {rho.hopf.unit}), 4));
    CHECK(restricted_coaction_check(A, rho, Subspace::full(Q(), 4), 4));
}

TEST_CASE("sampled L_A saturates") {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    Coaction rho = sweedler_dual_coaction();
    LaSpan la = l_a_span_sampled(A, rho, 11);
    CHECK(la.saturated);
    CHECK(la.span.dim() == 3);

    auto A3 = PresentedAlgebra::free_commutative(Q(), {"u1", "u2", "u3"});
    Coaction rho3 = dual_s3_coaction();
    LaSpan la3 = l_a_span_sampled(A3, rho3, 11);
    CHECK(la3.saturated);
    CHECK(la3.span.dim() == 6);
    CHECK(is_subcoalgebra(rho3.hopf, la3.span));

    HopfAlgebra kz2 = group_algebra(GroupSpec::cyclic(2), Q());
    LaSpan triv = l_a_span_sampled(A, trivial_coaction(kz2, 1), 11);
    CHECK(triv.span.dim() == 1);
}

TEST_CASE("inner faithfulness") {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    auto inf = inner_faithful(A, sweedler_dual_coaction());
    CHECK(inf.inner_faithful);
    CHECK(inf.smallest_hopf_subalgebra.dim() == 4);

    HopfAlgebra kz2 = group_algebra(GroupSpec::cyclic(2), Q());
    auto inf2 = inner_faithful(A, trivial_coaction(kz2, 1));
    CHECK_FALSE(inf2.inner_faithful);
    CHECK(inf2.smallest_hopf_subalgebra.dim() == 1);

    auto Ap = PresentedAlgebra::monomial_quotient(Q(), {"u1", "u2"}, {{1, 1}});
    auto inf3 = inner_faithful(Ap, s3_monomial_coaction());
    CHECK(inf3.inner_faithful);
    CHECK(inf3.smallest_hopf_subalgebra.dim() == 6);
}

TEST_CASE("coideal scan: sweedler yields pairwise distinct values") {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    Coaction rho = sweedler_dual_coaction();
    ScanReport rep = coideal_scan(A, rho, 2024, 20);
    CHECK(rep.samples == 20);
    CHECK(rep.distinct_subspaces.size() == 20);
    CHECK(rep.max_dim == 2);
    size_t total = 0;
    for (const auto& [s, mult] : rep.distinct_subspaces) {
        CHECK(s.dim() == 2);
        CHECK(is_coideal_subalgebra(rho.hopf, s, CoidealSide::Right).ok);
        total += mult;
    }
    CHECK(total == 20);
    // Deterministic under the same seed.
    ScanReport again = coideal_scan(A, rho, 2024, 20);
    REQUIRE(again.distinct_subspaces.size() == rep.distinct_subspaces.size());
    for (size_t i = 0; i < rep.distinct_subspaces.size(); ++i)
        CHECK(again.distinct_subspaces[i].first == rep.distinct_subspaces[i].first);
}

TEST_CASE("coideal scan: dual kS3 has a unique generic stratum") {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u1", "u2", "u3"});
    Coaction rho = dual_s3_coaction();
    ScanReport rep = coideal_scan(A, rho, 7, 20);
    CHECK(rep.samples == 20);
    CHECK(rep.generic_value == Subspace::full(Q(), 6));
    CHECK(rep.max_dim == 6);
    size_t total = 0;
    for (const auto& [s, mult] : rep.distinct_subspaces) {
        CHECK(is_coideal_subalgebra(rho.hopf, s, CoidealSide::Right).ok);
        // Semisimple K: every coideal subalgebra restricts to a semisimple algebra.
        CHECK(is_semisimple_algebra(restrict_algebra(rho.hopf, s)));
        total += mult;
    }
    CHECK(total == 20);
    // Degenerate strata are exactly the coordinate collisions.
    for (const auto& [chi, s] : rep.degenerate_strata) {
        bool collision = chi.values[0] == chi.values[1] || chi.values[1] == chi.values[2] ||
                         chi.values[0] == chi.values[2];
        CHECK(collision);
        CHECK(s.dim() < 6);
    }
    // No sampled dimension exceeds the generic one.
    for (const auto& [s, mult] : rep.distinct_subspaces) CHECK(s.dim() <= rep.generic_value.dim());
}

TEST_CASE("main theorem pipeline: positive instance") {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u1", "u2", "u3"});
    Coaction rho = dual_s3_coaction();
    MainTheoremVerdict v = main_theorem_pipeline(A, rho);
    CHECK(v.k_semisimple);
    CHECK(v.a_domain);
    CHECK(v.coaction_inner_faithful);
    CHECK(v.hypotheses_hold);
    CHECK(v.k_commutative);
    CHECK_FALSE(v.theorem_violation);
    CHECK_FALSE(v.k_group.is_group_algebra);  // dual(kS₃) has only 2 grouplikes
    REQUIRE(v.dual_group.is_group_algebra);   // but its dual is kS₃ again
    REQUIRE(v.dual_group.grouplike_elements.size() == 6);
    // The recovered table is the S₃ table under the grouplike/basis matching.
    GroupSpec spec = GroupSpec::symmetric(3);
    std::vector<size_t> perm(6);
    for (size_t t = 0; t < 6; ++t)
        for (size_t i = 0; i < 6; ++i)
            if (v.dual_group.grouplike_elements[t] == unit_vec(Q(), 6, i)) perm[t] = i;
    for (size_t a = 0; a < 6; ++a)
        for (size_t b = 0; b < 6; ++b)
            CHECK(perm[v.dual_group.table[a][b]] == spec.table[perm[a]][perm[b]]);
}

TEST_CASE("main theorem pipeline: counterexample taxonomy") {
    // Nonsemisimple failure mode: the Sweedler instance.
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    MainTheoremVerdict v1 = main_theorem_pipeline(A, sweedler_dual_coaction());
    CHECK_FALSE(v1.k_semisimple);
    CHECK(v1.a_domain);
    CHECK(v1.coaction_inner_faithful);
    CHECK_FALSE(v1.k_commutative);
    CHECK_FALSE(v1.hypotheses_hold);
    CHECK_FALSE(v1.theorem_violation);

    // Non-domain failure mode, both ideals.
    for (auto ideal : {std::vector<Monomial>{{2, 0}, {1, 1}, {0, 2}},
                       std::vector<Monomial>{{1, 1}}}) {
        auto Ap = PresentedAlgebra::monomial_quotient(Q(), {"u1", "u2"}, ideal);
        MainTheoremVerdict v = main_theorem_pipeline(Ap, s3_monomial_coaction());
        CHECK(v.k_semisimple);
        CHECK_FALSE(v.a_domain);
        CHECK(v.coaction_inner_faithful);
        CHECK_FALSE(v.k_commutative);
        CHECK_FALSE(v.theorem_violation);
    }
}
