#include "doctest.h"
#include "hopfkit/catalog.hpp"

using namespace hopfkit;

namespace {

FieldPtr Q() { return CycloField::create(1); }

Vec qv(const std::vector<long>& v) {
    Vec r;
    for (long x : v) r.push_back(Cyc::from_int(Q(), x));
    return r;
}

}  // namespace

TEST_CASE("axiom verifier names the broken antipode") {
    HopfAlgebra h = sweedler(Q());
    // Flip S(x) from -gx to +gx.
    h.antipode.at(3, 2) = Cyc::one(Q());
    auto v = verify_hopf_axioms(h);
    CHECK(std::find(v.begin(), v.end(), "antipode-left") != v.end());
    CHECK(std::find(v.begin(), v.end(), "antipode-right") != v.end());
    CHECK_THROWS_AS(dual_hopf(h), InvalidHopf);
}

TEST_CASE("axiom verifier flags a broken product") {
    HopfAlgebra h = group_algebra(GroupSpec::cyclic(2), Q());
    h.mult.at(0, 3) = Cyc::zero(Q());  // g*g = 0 instead of 1
    auto v = verify_hopf_axioms(h);
    CHECK_FALSE(v.empty());
}

TEST_CASE("semisimplicity by the trace form") {
    CHECK(is_semisimple_algebra(group_algebra(GroupSpec::cyclic(2), Q())));
    CHECK(is_semisimple_algebra(dual_hopf(group_algebra(GroupSpec::symmetric(3), Q()))));
    CHECK_FALSE(is_semisimple_algebra(sweedler(Q())));
}

TEST_CASE("subalgebra closure") {
    HopfAlgebra d = dual_hopf(sweedler(Q()));
    // gbar, xbar in dual coordinates.
    Subspace seed = Subspace::span(Q(), 4, {qv({1, -1, 0, 0}), qv({0, 0, 1, 1})});
    CHECK(subalgebra_closure(d, seed).dim() == 4);

    CHECK(subalgebra_closure(d, Subspace::zero(Q(), 4)).dim() == 1);

    HopfAlgebra s3 = group_algebra(GroupSpec::symmetric(3), Q());
    size_t c3 = GroupSpec::symmetric(3).element("(123)");
    Subspace powers = subalgebra_closure(s3, Subspace::span(Q(), 6, {unit_vec(Q(), 6, c3)}));
    CHECK(powers.dim() == 3);
}

TEST_CASE("generated Hopf subalgebra") {
    HopfAlgebra d = dual_hopf(sweedler(Q()));
    // L_A = span{1_K, gbar, xbar}: a subcoalgebra generating all of K.
    Subspace la = Subspace::span(Q(), 4, {d.unit, qv({1, -1, 0, 0}), qv({0, 0, 1, 1})});
    CHECK(generated_hopf_subalgebra(d, la).dim() == 4);

    Subspace one = Subspace::span(Q(), 4, {d.unit});
    CHECK(generated_hopf_subalgebra(d, one) == one);

    HopfAlgebra s3 = group_algebra(GroupSpec::symmetric(3), Q());
    GroupSpec spec = GroupSpec::symmetric(3);
    Subspace c = Subspace::span(Q(), 6, {unit_vec(Q(), 6, spec.identity()),
                                         unit_vec(Q(), 6, spec.element("(123)"))});
    Subspace gen = generated_hopf_subalgebra(s3, c);
    CHECK(gen.dim() == 3);
    CHECK(gen.contains(unit_vec(Q(), 6, spec.element("(132)"))));

    // Not a subcoalgebra: span{x} in the Sweedler algebra.
    HopfAlgebra h = sweedler(Q());
    CHECK_THROWS_AS(generated_hopf_subalgebra(h, Subspace::span(Q(), 4, {qv({0, 0, 1, 0})})),
                    NotASubcoalgebra);
}

TEST_CASE("coideal subalgebra test") {
    HopfAlgebra d = dual_hopf(sweedler(Q()));
    for (long alpha : {0L, 1L, -1L, 2L}) {
        // B = span{1_K, alpha*gbar + xbar}
        Vec h_chi = qv({alpha, -alpha, 1, 1});
        Subspace b = Subspace::span(Q(), 4, {d.unit, h_chi});
        CHECK(is_coideal_subalgebra(d, b, CoidealSide::Right).ok);
    }
    CHECK(is_coideal_subalgebra(d, Subspace::span(Q(), 4, {d.unit}), CoidealSide::Right).ok);

    // In kZ3: span{1, g+g^2} is a subalgebra but not a coideal.
    HopfAlgebra z3 = group_algebra(GroupSpec::cyclic(3), Q());
    Subspace b = Subspace::span(Q(), 3, {qv({1, 0, 0}), qv({0, 1, 1})});
    auto cert = is_coideal_subalgebra(z3, b, CoidealSide::Right);
    CHECK_FALSE(cert.ok);
    CHECK(cert.failed_condition == "coideal");
    CHECK_FALSE(cert.witness.empty());
}

TEST_CASE("grouplikes of the Sweedler algebra") {
    auto gs = grouplikes(sweedler(Q()));
    REQUIRE(gs.size() == 2);
    CHECK(std::find(gs.begin(), gs.end(), qv({1, 0, 0, 0})) != gs.end());
    CHECK(std::find(gs.begin(), gs.end(), qv({0, 1, 0, 0})) != gs.end());
    CHECK_FALSE(recognize_group_algebra(sweedler(Q())).is_group_algebra);
}

TEST_CASE("grouplikes of dual kS3 are the two linear characters") {
    HopfAlgebra d = dual_hopf(group_algebra(GroupSpec::symmetric(3), Q()));
    auto gs = grouplikes(d);
    REQUIRE(gs.size() == 2);
    // Characters of S3: trivial and sign; as elements of k^G both take values ±1.
    GroupSpec spec = GroupSpec::symmetric(3);
    for (const Vec& g : gs)
        for (size_t i = 0; i < 6; ++i)
            CHECK((g[i] == Cyc::one(Q()) || g[i] == Cyc::from_int(Q(), -1)));
    CHECK_FALSE(recognize_group_algebra(d).is_group_algebra);

    // Multiplicativity against the group table.
    for (const Vec& g : gs)
        for (size_t i = 0; i < 6; ++i)
            for (size_t j = 0; j < 6; ++j) CHECK(g[spec.table[i][j]] == g[i] * g[j]);
}

TEST_CASE("group recognition recovers the S3 table") {
    GroupSpec spec = GroupSpec::symmetric(3);
    HopfAlgebra k = group_algebra(spec, Q());
    auto r = recognize_group_algebra(k);
    REQUIRE(r.is_group_algebra);
    // The grouplikes are the basis vectors; match them up and compare tables.
    std::vector<size_t> perm(6);
    for (size_t t = 0; t < 6; ++t) {
        for (size_t i = 0; i < 6; ++i)
            if (r.grouplike_elements[t] == unit_vec(Q(), 6, i)) perm[t] = i;
    }
    for (size_t a = 0; a < 6; ++a)
        for (size_t b = 0; b < 6; ++b)
            CHECK(perm[r.table[a][b]] == spec.table[perm[a]][perm[b]]);
}

TEST_CASE("restricted algebra of a coideal is semisimple in the semisimple case") {
    HopfAlgebra d = dual_hopf(group_algebra(GroupSpec::symmetric(3), Q()));
    Subspace b = Subspace::span(Q(), 6, {d.unit});
    CHECK(is_semisimple_algebra(restrict_algebra(d, b)));
}
