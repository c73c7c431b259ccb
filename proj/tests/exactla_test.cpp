#include <random>

#include "doctest.h"
#include "hopfkit/subspace.hpp"

using namespace hopfkit;

namespace {

FieldPtr Q() { return CycloField::create(1); }

Vec qvec(const std::vector<long>& v) {
    Vec r;
    for (long x : v) r.push_back(Cyc::from_int(Q(), x));
    return r;
}

Subspace random_subspace(std::mt19937_64& rng, size_t ambient) {
    std::uniform_int_distribution<int> entry(-3, 3), count(0, 4);
    std::vector<Vec> gens;
    int c = count(rng);
    for (int i = 0; i < c; ++i) {
        Vec v;
        for (size_t j = 0; j < ambient; ++j) v.push_back(Cyc::from_int(Q(), entry(rng)));
        gens.push_back(v);
    }
    return Subspace::span(Q(), ambient, gens);
}

}  // namespace

TEST_CASE("span basics") {
    Subspace s = Subspace::span(Q(), 2, {qvec({1, 1}), qvec({2, 2})});
    CHECK(s.dim() == 1);
    CHECK(Subspace::span(Q(), 3, {}).dim() == 0);
    Subspace t = Subspace::span(Q(), 4, {qvec({1, 0, 0, 0}), qvec({0, 1, 0, 0})});
    CHECK(t.dim() == 2);
    CHECK(t.basis().at(0, 0) == Cyc::one(Q()));
    CHECK(t.basis().at(1, 1) == Cyc::one(Q()));
    CHECK_THROWS_AS(Subspace::span(Q(), 2, {qvec({1, 2, 3})}), DimensionMismatch);
}

TEST_CASE("sum and intersection") {
    Subspace e1 = Subspace::span(Q(), 3, {qvec({1, 0, 0})});
    Subspace e2 = Subspace::span(Q(), 3, {qvec({0, 1, 0})});
    CHECK((e1 + e2).dim() == 2);

    Subspace u = Subspace::span(Q(), 3, {qvec({1, 0, 0}), qvec({0, 1, 0})});
    Subspace v = Subspace::span(Q(), 3, {qvec({0, 1, 0}), qvec({0, 0, 1})});
    CHECK(u.intersect(v) == e2);
    CHECK_THROWS_AS(e1 + Subspace::span(Q(), 2, {}), DimensionMismatch);
}

TEST_CASE("canonicality: different generators, identical representation") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        Subspace s = random_subspace(rng, 5);
        // Random invertible recombination of the basis rows.
        std::vector<Vec> gens;
        for (size_t i = 0; i < s.dim(); ++i) {
            Vec g = zero_vec(Q(), 5);
            for (size_t j = 0; j < s.dim(); ++j) {
                int c = (i == j) ? 1 : entry(rng);
                for (size_t t = 0; t < 5; ++t) g[t] += Cyc::from_int(Q(), c) * s.basis().at(j, t);
            }
            gens.push_back(g);
        }
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(Subspace::span(Q(), 5, gens) == s);
    }
}

TEST_CASE("Grassmann identity on randomized subspaces") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        size_t ambient = 2 + (trial % 7);
        Subspace u = random_subspace(rng, ambient);
        Subspace v = random_subspace(rng, ambient);
        CHECK(u.dim() + v.dim() == (u + v).dim() + u.intersect(v).dim());
    }
}

TEST_CASE("contains agrees with rank test") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        Subspace u = random_subspace(rng, 4);
        Vec v;
        for (int j = 0; j < 4; ++j) v.push_back(Cyc::from_int(Q(), entry(rng)));
        std::vector<Vec> with;
        for (size_t i = 0; i < u.dim(); ++i) with.push_back(u.basis().row(i));
        with.push_back(v);
        bool rank_test = Subspace::span(Q(), 4, with).dim() == u.dim();
        CHECK(u.contains(v) == rank_test);
    }
}

TEST_CASE("coordinates invert the basis") {
    Subspace u = Subspace::span(Q(), 3, {qvec({1, 2, 0}), qvec({0, 1, 1})});
    Vec v = qvec({2, 5, 1});
    auto c = u.coordinates(v);
    REQUIRE(c.has_value());
    Vec rebuilt = zero_vec(Q(), 3);
    for (size_t i = 0; i < u.dim(); ++i)
        for (size_t t = 0; t < 3; ++t) rebuilt[t] += (*c)[i] * u.basis().at(i, t);
    CHECK(rebuilt == v);
    CHECK_FALSE(u.coordinates(qvec({0, 0, 1})).has_value());
}

TEST_CASE("kron convention and dimensions") {
    Matrix a(Q(), 1, 2), b(Q(), 1, 2);
    a.at(0, 0) = Cyc::one(Q());  // (1,0)
    b.at(0, 1) = Cyc::one(Q());  // (0,1)
    Matrix k = Matrix::kron(a, b);
    CHECK(k.rows() == 1);
    CHECK(k.cols() == 4);
    CHECK(k.at(0, 1) == Cyc::one(Q()));  // flat index 0*2+1

    CHECK(Matrix::kron(Matrix::identity(Q(), 2), Matrix::identity(Q(), 3)) == Matrix::identity(Q(), 6));

    Matrix m23(Q(), 2, 3), m45(Q(), 4, 5);
    Matrix big = Matrix::kron(m23, m45);
    CHECK(big.rows() == 8);
    CHECK(big.cols() == 15);
}

TEST_CASE("kron associativity under the flat index convention") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> entry(-2, 2);
    auto rand_m = [&](size_t r, size_t c) {
        Matrix m(Q(), r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m.at(i, j) = Cyc::from_int(Q(), entry(rng));
        return m;
    };
    Matrix a = rand_m(2, 2), b = rand_m(3, 2), c = rand_m(2, 3);
    CHECK(Matrix::kron(Matrix::kron(a, b), c) == Matrix::kron(a, Matrix::kron(b, c)));
}

TEST_CASE("kernel and rref") {
    Matrix m(Q(), 2, 3);
    m.set_row(0, qvec({1, 2, 3}));
    m.set_row(1, qvec({2, 4, 6}));
    CHECK(m.rref().rows() == 1);
    Matrix k = m.kernel();
    CHECK(k.rows() == 2);
    for (size_t i = 0; i < k.rows(); ++i) CHECK(is_zero_vec(m.apply(k.row(i))));
}
