#include "doctest.h"
#include "hopfkit/presented.hpp"

using namespace hopfkit;

namespace {

FieldPtr Q() { return CycloField::create(1); }

Vec qv(const FieldPtr& f, const std::vector<long>& v) {
    Vec r;
    for (long x : v) r.push_back(Cyc::from_int(f, x));
    return r;
}

/// ρ(u) = u ⊗ (1*−g*) + 1 ⊗ (x*+(gx)*) for the dual Sweedler algebra.
Coaction sweedler_dual_coaction(const PresentedAlgebra& A) {
    Coaction rho;
    rho.hopf = dual_hopf(sweedler(Q()));
    PolyTensor im;
    im.emplace(Monomial{1}, qv(Q(), {1, -1, 0, 0}));
    im.emplace(Monomial{0}, qv(Q(), {0, 0, 1, 1}));
    rho.images = {im};
    return rho;
}

/// The Sweedler action g·u = −u, x·u = 1 on k[u], basis {1, g, x, gx}.
Action sweedler_action() {
    Action act;
    act.hopf = sweedler(Q());
    Matrix id2 = Matrix::identity(Q(), 2);
    Matrix mg = id2;
    mg.at(1, 1) = Cyc::from_int(Q(), -1);
    Matrix mx(Q(), 2, 2);
    mx.at(0, 1) = Cyc::one(Q());
    Matrix mgx(Q(), 2, 2);
    mgx.at(0, 1) = Cyc::one(Q());  // (gx)·u = g·(x·u) = 1
    act.matrices = {id2, mg, mx, mgx};
    return act;
}

/// Matrices of a representation of a group, generated from images of
/// generating labels by multiplying along the group table.
std::vector<Matrix> group_rep(const GroupSpec& g,
                              const std::map<std::string, Matrix>& generator_images,
                              const FieldPtr& f, size_t dim) {
    std::vector<std::optional<Matrix>> rep(g.order());
    rep[g.identity()] = Matrix::identity(f, dim);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [label, mat] : generator_images) {
            size_t s = g.element(label);
            for (size_t i = 0; i < g.order(); ++i) {
                if (!rep[i]) continue;
                size_t t = g.table[s][i];
                if (!rep[t]) {
                    rep[t] = mat * (*rep[i]);
                    changed = true;
                }
            }
        }
    }
    std::vector<Matrix> out;
    for (auto& r : rep) {
        REQUIRE(r.has_value());
        out.push_back(*r);
    }
    return out;
}

/// S₃ acting through its standard 2-dimensional representation.
Action s3_standard_action(const FieldPtr& f) {
    GroupSpec s3 = GroupSpec::symmetric(3);
    Matrix swap2(f, 2, 2);  // (12): u1 <-> u2
    swap2.at(0, 1) = Cyc::one(f);
    swap2.at(1, 0) = Cyc::one(f);
    Matrix rot(f, 2, 2);  // (123): u1 -> u2, u2 -> -u1-u2
    rot.at(1, 0) = Cyc::one(f);
    rot.at(0, 1) = Cyc::from_int(f, -1);
    rot.at(1, 1) = Cyc::from_int(f, -1);
    auto rep = group_rep(s3, {{"(12)", swap2}, {"(123)", rot}}, f, 2);
    Action act;
    act.hopf = group_algebra(s3, f);
    for (const Matrix& m : rep) {
        Matrix a(f, 3, 3);
        a.at(0, 0) = Cyc::one(f);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) a.at(i + 1, j + 1) = m.at(i, j);
        act.matrices.push_back(a);
    }
    return act;
}

/// Diagonal action of L = Z_d ⊕ Z_d on k[u1,u2]: (x,y)·u1 = ζ^x u1,
/// (x,y)·u2 = ζ^y u2.
Action diagonal_l_action(int d, const FieldPtr& f) {
    GroupSpec l = GroupSpec::product(GroupSpec::cyclic(d), GroupSpec::cyclic(d));
    Cyc zeta = root_of_unity(f, d);
    Action act;
    act.hopf = group_algebra(l, f);
    for (size_t idx = 0; idx < l.order(); ++idx) {
        size_t x = idx / d, y = idx % d;
        Matrix a(f, 3, 3);
        a.at(0, 0) = Cyc::one(f);
        a.at(1, 1) = zeta.pow(static_cast<long>(x));
        a.at(2, 2) = zeta.pow(static_cast<long>(y));
        act.matrices.push_back(a);
    }
    return act;
}

std::vector<size_t> identity_embedding(size_t k) {
    std::vector<size_t> e(k);
    for (size_t i = 0; i < k; ++i) e[i] = i;
    return e;
}

}  // namespace

TEST_CASE("monomial quotient normal forms") {
    auto A = PresentedAlgebra::monomial_quotient(Q(), {"u1", "u2"},
                                                 {{2, 0}, {1, 1}, {0, 2}});
    CHECK(A.monomial_is_zero({2, 0}));
    CHECK(A.monomial_is_zero({1, 2}));
    CHECK_FALSE(A.monomial_is_zero({1, 0}));
    CHECK(A.monomials_up_to(4).size() == 3);  // 1, u1, u2
    CHECK(A.monomial_str({1, 0}) == "u1");
    CHECK(A.parse_monomial("u1^2*u2") == Monomial{2, 1});
    CHECK(A.parse_monomial("1") == Monomial{0, 0});
    CHECK_THROWS_AS(A.parse_monomial("w"), ParseError);

    CHECK_FALSE(A.is_domain());
    CHECK(PresentedAlgebra::free_commutative(Q(), {"u"}).is_domain());
}

TEST_CASE("sweedler dual coaction on k[u] verifies") {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    Coaction rho = sweedler_dual_coaction(A);
    auto rep = verify_comodule_algebra(A, rho, 4);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
}

TEST_CASE("broken coaction fails the counit check") {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    Coaction rho;
    rho.hopf = dual_hopf(sweedler(Q()));
    PolyTensor im;
    im.emplace(Monomial{1}, qv(Q(), {0, 0, 1, 1}));  // ρ(u) = u ⊗ x̄, ε(x̄) = 0
    rho.images = {im};
    auto rep = verify_comodule_algebra(A, rho, 3);
    CHECK_FALSE(rep.ok);
    bool counit_named = false;
    for (const auto& s : rep.failures)
        if (s.find("counit") != std::string::npos) counit_named = true;
    CHECK(counit_named);
}

TEST_CASE("kS3 permutation coaction on both quotients verifies") {
    HopfAlgebra ks3 = group_algebra(GroupSpec::symmetric(3), Q());
    GroupSpec spec = GroupSpec::symmetric(3);
    size_t s1 = spec.element("(12)"), s2 = spec.element("(23)");
    for (auto ideal : {std::vector<Monomial>{{2, 0}, {1, 1}, {0, 2}},
                       std::vector<Monomial>{{1, 1}}}) {
        auto A = PresentedAlgebra::monomial_quotient(Q(), {"u1", "u2"}, ideal);
        Coaction rho;
        rho.hopf = ks3;
        PolyTensor im1, im2;
        im1.emplace(Monomial{1, 0}, unit_vec(Q(), 6, s1));
        im2.emplace(Monomial{0, 1}, unit_vec(Q(), 6, s2));
        rho.images = {im1, im2};
        auto rep = verify_comodule_algebra(A, rho, 4);
        CHECK(rep.ok);
        Subspace c = coefficient_coalgebra(A, rho);
        CHECK(c.dim() == 3);  // span{1, s1, s2}
        CHECK(c.contains(unit_vec(Q(), 6, s1)));
        CHECK(c.contains(unit_vec(Q(), 6, s2)));
    }
}

TEST_CASE("coefficient coalgebra of the Sweedler instance") {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    Coaction rho = sweedler_dual_coaction(A);
    Subspace c = coefficient_coalgebra(A, rho);
    CHECK(c.dim() == 3);
    CHECK(c.contains(qv(Q(), {1, -1, 0, 0})));
    CHECK(c.contains(qv(Q(), {0, 0, 1, 1})));
    CHECK(c.contains(rho.hopf.unit));
    // Restriction property: every image coefficient lies in C.
    for (const auto& [m, k] : rho.images[0]) CHECK(c.contains(k));

    // Trivial coaction: ρ(u) = u ⊗ 1.
    Coaction triv;
    triv.hopf = rho.hopf;
    PolyTensor im;
    im.emplace(Monomial{1}, triv.hopf.unit);
    triv.images = {im};
    CHECK(coefficient_coalgebra(A, triv).dim() == 1);
}

TEST_CASE("sweedler module algebra verifies and x kills u^2") {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    Action act = sweedler_action();
    auto rep = verify_module_algebra(A, act, 4);
    CHECK(rep.ok);
    // x·u² = (g·u)(x·u) + (x·u)(1·u) = −u + u = 0.
    Poly r = act_on_monomial(A, act, unit_vec(Q(), 4, 2), Monomial{2});
    CHECK(poly_is_zero(r));
    // g·u² = u².
    Poly r2 = act_on_monomial(A, act, unit_vec(Q(), 4, 1), Monomial{2});
    Poly expected{{Monomial{2}, Cyc::one(Q())}};
    CHECK(r2 == expected);
}

TEST_CASE("modified sweedler action is rejected") {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    Action act = sweedler_action();
    act.matrices[2] = Matrix(Q(), 2, 2);
    act.matrices[2].at(1, 1) = Cyc::one(Q());  // x·u := u
    auto rep = verify_module_algebra(A, act, 3);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("group actions by algebra automorphisms verify") {
    auto f = Q();
    auto A = PresentedAlgebra::monomial_quotient(f, {"u1", "u2"},
                                                 {{2, 0}, {1, 1}, {0, 2}});
    Action act = s3_standard_action(f);
    CHECK(verify_module_algebra(A, act, 4).ok);
}

TEST_CASE("action and coaction convert into each other") {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    Coaction rho = sweedler_dual_coaction(A);
    Action act = coaction_to_action(A, rho);
    // The dual of dual-Sweedler is Sweedler itself; compare against the
    // hand-built action matrices.
    Action expect = sweedler_action();
    REQUIRE(act.matrices.size() == 4);
    for (size_t a = 0; a < 4; ++a) CHECK(act.matrices[a] == expect.matrices[a]);
    CHECK(act.hopf.mult == expect.hopf.mult);

    // Round trip is the identity on structure data.
    Coaction back = action_to_coaction(A, act);
    CHECK(back.images == rho.images);
    CHECK(back.hopf.mult == rho.hopf.mult);
    CHECK(back.hopf.comult == rho.hopf.comult);

    // Trivial action ↔ trivial coaction.
    Action triv;
    triv.hopf = sweedler(Q());
    for (size_t a = 0; a < 4; ++a) {
        Matrix m(Q(), 2, 2);
        m.at(0, 0) = triv.hopf.counit[a];
        m.at(1, 1) = triv.hopf.counit[a];
        triv.matrices.push_back(m);
    }
    Coaction triv_rho = action_to_coaction(A, triv);
    REQUIRE(triv_rho.images.size() == 1);
    PolyTensor want;
    want.emplace(Monomial{1}, triv_rho.hopf.unit);
    CHECK(triv_rho.images[0] == want);

    // Unverified sources are refused.
    Action bad = sweedler_action();
    bad.matrices[2].at(1, 1) = Cyc::one(Q());
    CHECK_THROWS_AS(action_to_coaction(A, bad), UnverifiedSource);
}

TEST_CASE("character checks and sampling") {
    auto nil = PresentedAlgebra::monomial_quotient(Q(), {"u1", "u2"},
                                                   {{2, 0}, {1, 1}, {0, 2}});
    CHECK(character_check(nil, {qv(Q(), {0, 0})}));
    CHECK_FALSE(character_check(nil, {qv(Q(), {1, 0})}));
    auto desc = character_set_description(nil);
    CHECK(desc.find("chi(u1) = 0") != std::string::npos);
    CHECK(desc.find("chi(u2) = 0") != std::string::npos);

    // k[u]: unconstrained; 20 seeded samples are pairwise distinct.
    auto free1 = PresentedAlgebra::free_commutative(Q(), {"u"});
    auto chis = sample_characters(free1, 42, 20);
    REQUIRE(chis.size() == 20);
    for (size_t i = 0; i < chis.size(); ++i)
        for (size_t j = i + 1; j < chis.size(); ++j) CHECK_FALSE(chis[i] == chis[j]);
    // Determinism per seed.
    CHECK(sample_characters(free1, 42, 20) == chis);
    CHECK_FALSE(sample_characters(free1, 43, 20) == chis);

    // k[u1,u2]/(u1u2): every sample sits on one of the axes.
    auto cross = PresentedAlgebra::monomial_quotient(Q(), {"u1", "u2"}, {{1, 1}});
    for (const auto& chi : sample_characters(cross, 7, 10))
        CHECK((chi.values[0].is_zero() || chi.values[1].is_zero()));

    // The nilpotent quotient has only χ = (0,0); the sampler still fills the
    // requested count by repeating it.
    auto nil_chis = sample_characters(nil, 3, 5);
    REQUIRE(nil_chis.size() == 5);
    for (const auto& chi : nil_chis) {
        CHECK(chi.values[0].is_zero());
        CHECK(chi.values[1].is_zero());
    }

    CHECK_THROWS_AS(character_check(PresentedAlgebra::finite_dimensional(
                                        finite_dimensional_algebra(nil)),
                                    {qv(Q(), {0, 0, 0})}),
                    UnsupportedKind);
}

TEST_CASE("finite dimensional basis extraction") {
    auto nil = PresentedAlgebra::monomial_quotient(Q(), {"u1", "u2"},
                                                   {{2, 0}, {1, 1}, {0, 2}});
    FDAlgebra B = finite_dimensional_algebra(nil);
    CHECK(B.n == 3);
    CHECK(B.labels == std::vector<std::string>{"1", "u1", "u2"});
    CHECK(B.multiply(unit_vec(Q(), 3, 1), unit_vec(Q(), 3, 2)) == zero_vec(Q(), 3));

    auto cross = PresentedAlgebra::monomial_quotient(Q(), {"u1", "u2"}, {{1, 1}});
    CHECK_THROWS_AS(finite_dimensional_algebra(cross), InfiniteDimensional);
    CHECK_THROWS_AS(finite_dimensional_algebra(PresentedAlgebra::free_commutative(Q(), {"u"})),
                    InfiniteDimensional);
}

TEST_CASE("smash product with the trivial module is the Hopf algebra") {
    auto f = Q();
    auto A = PresentedAlgebra::monomial_quotient(f, {}, {});  // A = k
    Action act;
    act.hopf = sweedler(f);
    for (size_t a = 0; a < 4; ++a) {
        Matrix m(f, 1, 1);
        m.at(0, 0) = act.hopf.counit[a];
        act.matrices.push_back(m);
    }
    FDAlgebra S = smash_product(A, act);
    CHECK(S.n == 4);
    CHECK(S.mult == act.hopf.mult);
    CHECK(S.unit == act.hopf.unit);
    // k is faithful only for the counit direction: kernel = ker ε, dim 3.
    CHECK(module_faithfulness_kernel(A, act).dim() == 3);
}

TEST_CASE("smash product of the nilpotent quotient with kS3") {
    auto f = Q();
    auto A = PresentedAlgebra::monomial_quotient(f, {"u1", "u2"},
                                                 {{2, 0}, {1, 1}, {0, 2}});
    Action act = s3_standard_action(f);
    FDAlgebra S = smash_product(A, act);
    CHECK(S.n == 18);  // dim A · dim H
    // Unit is 1#e.
    Vec one = zero_vec(f, 18);
    one[0 * 6 + GroupSpec::symmetric(3).identity()] = Cyc::one(f);
    CHECK(S.unit == one);
    // Representation A#H -> End(A) has a nonzero kernel: the image inside the
    // 9-dimensional End(A) is spanned by E_{1,1}, the standard-representation
    // block (4 matrices), and the two maps 1 -> u_i, so its rank is 7.
    Subspace ker = module_faithfulness_kernel(A, act);
    CHECK(ker.dim() == 18 - 7);
    CHECK(ker.dim() > 0);  // A is not a faithful A#H-module
}

TEST_CASE("twisted module algebra: trivial twist changes nothing") {
    auto f = CycloField::create(2);
    auto A = PresentedAlgebra::free_commutative(f, {"u1", "u2"});
    Action act = diagonal_l_action(2, f);
    GroupSpec l = GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(2));
    TwistSpec spec = build_twist(2, l, identity_embedding(4), f);
    Vec one_one = zero_vec(f, 16);
    one_one[0] = Cyc::one(f);
    spec.j = spec.j_inv = one_one;
    PresentedAlgebra out = twist_module_algebra(A, act, spec);
    CHECK(out.kind == AlgKind::SkewPoly);
    CHECK(out.q.at(0, 1).is_one());
    CHECK(out.q.at(1, 0).is_one());
}

TEST_CASE("twisted module algebra skew parameters for d = 2 and 3") {
    for (int d : {2, 3}) {
        auto f = CycloField::create(d == 2 ? 2 : 3);
        auto A = PresentedAlgebra::free_commutative(f, {"u1", "u2"});
        Action act = diagonal_l_action(d, f);
        GroupSpec l = GroupSpec::product(GroupSpec::cyclic(d), GroupSpec::cyclic(d));
        TwistSpec spec = build_twist(d, l, identity_embedding(d * d), f);
        PresentedAlgebra out = twist_module_algebra(A, act, spec);
        Cyc q12 = out.q.at(0, 1);
        // Oracle: with eigencharacters φ1 = (1,0), φ2 = (0,1) the parameter is
        // σ̂(φ1,φ2)·σ̂(φ2,φ1)⁻¹ = ζ^{1·1}/ζ^{0·0} = ζ_d.
        CHECK(q12 == root_of_unity(f, d));
        CHECK((q12 * out.q.at(1, 0)).is_one());
        CHECK(q12.pow(d).is_one());
        if (d == 2) CHECK(q12 == Cyc::from_int(f, -1));
        if (d == 3) CHECK_FALSE(q12.is_one());  // primitive cube root

        // The skew product itself: u1 ∗ u2 = q12 · (u2 ∗ u1) on normal forms.
        Poly u1{{Monomial{1, 0}, Cyc::one(f)}}, u2{{Monomial{0, 1}, Cyc::one(f)}};
        Poly p12 = poly_mul(out, u1, u2), p21 = poly_mul(out, u2, u1);
        CHECK(p12 == poly_scale(q12, p21));
    }
}

TEST_CASE("non-diagonal generator lines are rejected") {
    auto f = CycloField::create(2);
    auto A = PresentedAlgebra::free_commutative(f, {"u1", "u2"});
    GroupSpec l = GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(2));
    TwistSpec spec = build_twist(2, l, identity_embedding(4), f);
    // A genuine representation where (x,y) acts by swap^{x+y}: valid as a
    // module algebra, but the generator lines are not L-eigenvectors.
    Action act;
    act.hopf = group_algebra(l, f);
    Matrix id3 = Matrix::identity(f, 3);
    Matrix swap3(f, 3, 3);
    swap3.at(0, 0) = Cyc::one(f);
    swap3.at(1, 2) = Cyc::one(f);
    swap3.at(2, 1) = Cyc::one(f);
    act.matrices = {id3, swap3, swap3, id3};  // indices (0,0),(0,1),(1,0),(1,1)
    REQUIRE(verify_module_algebra(A, act, 4).ok);
    CHECK_THROWS_AS(twist_module_algebra(A, act, spec), NotDiagonal);
}
