#include <benchmark/benchmark.h>

#include <random>

#include "wtop/chain_wspace.hpp"
#include "wtop/delta_space.hpp"
#include "wtop/holed_plane.hpp"
#include "wtop/quadratic.hpp"
#include "wtop/rotation.hpp"
#include "wtop/weighted_category.hpp"

using namespace wtop;

namespace {

HoledPlane annulus() {
    HoledPlane plane;
    plane.x_hi = plane.y_hi = 1;
    plane.holes = {{Rational(1, 3), Rational(1, 3), Rational(2, 3), Rational(2, 3)}};
    plane.marked = {{Rational(0), Rational(0)},
                    {Rational(1, 3), Rational(1, 3)},
                    {Rational(2, 3), Rational(2, 3)},
                    {Rational(1), Rational(1)}};
    return validate_plane(plane);
}

FiniteDeltaSpace random_space(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(0, 6);
    FiniteDeltaSpace space;
    for (std::size_t i = 0; i < n; ++i) space.points.push_back("p" + std::to_string(i));
    space.d.assign(n, std::vector<ExtWeight>(n, ExtWeight::infinity()));
    for (std::size_t i = 0; i < n; ++i) space.d[i][i] = ExtWeight::zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && num(rng) > 1) space.d[i][j] = ExtWeight(Rational(num(rng), 3));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ExtWeight via = space.d[i][k] + space.d[k][j];
                if (via < space.d[i][j]) space.d[i][j] = via;
            }
    return space;
}

void BM_FundamentalCategoryAnnulus(benchmark::State& state) {
    auto plane = annulus();
    for (auto _ : state) {
        auto result = fundamental_category(plane);
        benchmark::DoNotOptimize(result.category.morphisms.size());
    }
}
BENCHMARK(BM_FundamentalCategoryAnnulus);

void BM_SpectrumSearch(benchmark::State& state) {
    auto cat = fundamental_category(annulus()).category;
    for (auto _ : state) {
        auto fut = future_spectrum(cat);
        benchmark::DoNotOptimize(fut.objects.size());
    }
}
BENCHMARK(BM_SpectrumSearch);

void BM_VanKampenAnnulus(benchmark::State& state) {
    auto plane = annulus();
    for (auto _ : state) {
        auto rep = van_kampen_check(plane, Rational(1, 3), Rational(2, 3));
        benchmark::DoNotOptimize(rep.is_isomorphism);
    }
}
BENCHMARK(BM_VanKampenAnnulus);

void BM_Symmetrize(benchmark::State& state) {
    auto space = random_space(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) {
        auto sym = symmetrize(space);
        benchmark::DoNotOptimize(sym.d.size());
    }
}
BENCHMARK(BM_Symmetrize)->Arg(8)->Arg(16)->Arg(32);

void BM_InternalHom(benchmark::State& state) {
    auto Y = random_space(3, 7);
    auto Z = random_space(4, 8);
    for (auto _ : state) {
        auto hom = internal_hom(Y, Z);
        benchmark::DoNotOptimize(hom.space.size());
    }
}
BENCHMARK(BM_InternalHom);

void BM_ContinuedFractionClassify(benchmark::State& state) {
    auto a = make_quadratic_irrational(12, 7, 13, 61);
    auto b = make_quadratic_irrational(-5, 9, 11, 61);
    for (auto _ : state) {
        auto v = classify_lipschitz(a, b);
        benchmark::DoNotOptimize(v.isomorphic);
    }
}
BENCHMARK(BM_ContinuedFractionClassify);

void BM_EnumerateGPlus(benchmark::State& state) {
    auto theta = make_quadratic_irrational(0, 1, 1, 2);
    for (auto _ : state) {
        auto list = enumerate_g_plus(theta, 20, Integer(state.range(0)));
        benchmark::DoNotOptimize(list.size());
    }
}
BENCHMARK(BM_EnumerateGPlus)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
