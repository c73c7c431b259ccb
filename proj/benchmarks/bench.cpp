// Microbenchmarks for the hot paths: exact field arithmetic, row reduction,
// Hopf axiom verification, coideal extraction, and cocycle twisting.
#include <benchmark/benchmark.h>

#include <random>

#include "hopfkit/scenario.hpp"

using namespace hopfkit;

namespace {

FieldPtr Q() { return CycloField::create(1); }

Vec qv(const std::vector<long>& v) {
    Vec r;
    for (long x : v) r.push_back(Cyc::from_int(Q(), x));
    return r;
}

Coaction sweedler_dual_coaction() {
    Coaction rho;
    rho.hopf = dual_hopf(sweedler(Q()));
    PolyTensor im;
    im.emplace(Monomial{1}, qv({1, -1, 0, 0}));
    im.emplace(Monomial{0}, qv({0, 0, 1, 1}));
    rho.images.push_back(im);
    return rho;
}

std::vector<Vec> random_vectors(const FieldPtr& f, size_t count, size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-5, 5);
    std::vector<Vec> out;
    for (size_t i = 0; i < count; ++i) {
        Vec v;
        for (size_t j = 0; j < dim; ++j) v.push_back(Cyc::from_int(f, num(rng)));
        out.push_back(std::move(v));
    }
    return out;
}

void BM_CycMultiply(benchmark::State& state) {
    FieldPtr f = CycloField::create(12);
    Cyc a = Cyc::parse(f, "1/2 + 3*z - z^2 + 2/3*z^3");
    Cyc b = Cyc::parse(f, "2 - z + 5/7*z^2 + z^3");
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMultiply);

void BM_SubspaceSpan(benchmark::State& state) {
    auto vecs = random_vectors(Q(), 16, 24, 42);
    for (auto _ : state) benchmark::DoNotOptimize(Subspace::span(Q(), 24, vecs));
}
BENCHMARK(BM_SubspaceSpan);

void BM_SubspaceIntersect(benchmark::State& state) {
    Subspace a = Subspace::span(Q(), 24, random_vectors(Q(), 14, 24, 1));
    Subspace b = Subspace::span(Q(), 24, random_vectors(Q(), 14, 24, 2));
    for (auto _ : state) benchmark::DoNotOptimize(a.intersect(b));
}
BENCHMARK(BM_SubspaceIntersect);

void BM_VerifySweedler(benchmark::State& state) {
    HopfAlgebra H = sweedler(Q());
    for (auto _ : state) benchmark::DoNotOptimize(verify_hopf_axioms(H));
}
BENCHMARK(BM_VerifySweedler);

void BM_VerifyGroupS4(benchmark::State& state) {
    HopfAlgebra H = group_algebra(GroupSpec::symmetric(4), Q());
    for (auto _ : state) benchmark::DoNotOptimize(verify_hopf_axioms(H));
}
BENCHMARK(BM_VerifyGroupS4);

void BM_CoidealSubalgebra(benchmark::State& state) {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    Coaction rho = sweedler_dual_coaction();
    Character chi;
    chi.values.push_back(Cyc::from_int(Q(), 3));
    for (auto _ : state) benchmark::DoNotOptimize(a_chi(A, rho, chi));
}
BENCHMARK(BM_CoidealSubalgebra);

void BM_CoidealScan(benchmark::State& state) {
    auto A = PresentedAlgebra::free_commutative(Q(), {"u"});
    Coaction rho = sweedler_dual_coaction();
    for (auto _ : state) benchmark::DoNotOptimize(coideal_scan(A, rho, 7, 10));
}
BENCHMARK(BM_CoidealScan);

void BM_TwistS4(benchmark::State& state) {
    FieldPtr f = CycloField::create(2);
    GroupSpec s4 = GroupSpec::symmetric(4);
    HopfAlgebra kg = group_algebra(s4, f);
    TwistSpec spec = build_twist(2, s4, klein_four_in_s4(s4), f);
    for (auto _ : state) benchmark::DoNotOptimize(twist_hopf(kg, spec));
}
BENCHMARK(BM_TwistS4);

}  // namespace

BENCHMARK_MAIN();
