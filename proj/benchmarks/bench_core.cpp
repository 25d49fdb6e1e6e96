#include <benchmark/benchmark.h>

#include <qcanon/canonical.hpp>
#include <qcanon/uq.hpp>

using namespace qcanon;

namespace {

/// Fully reversed word of total degree d, the straightening worst case.
Word reversed_word(int n, int d) {
    Word w;
    int k = 0;
    while (static_cast<int>(w.letters.size()) < d) {
        const int i = n - 1 - (k / n) % n;
        const int j = n - 1 - k % n;
        w.letters.emplace_back(i, j);
        ++k;
    }
    return w;
}

ExponentMatrix spread_matrix(int n, int d) {
    ExponentMatrix a(n);
    for (int k = 0; k < d; ++k) ++a.at(k % n, (k * 2 + 1) % n);
    return a;
}

void BM_straighten(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto w = reversed_word(3, d);
    for (auto _ : state) benchmark::DoNotOptimize(straighten(3, w));
}

void BM_multiply(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto a = AlgebraElement::monomial(spread_matrix(3, d), LaurentPoly(1), BasisTag::plain);
    const auto b = AlgebraElement::monomial(spread_matrix(3, d).transposed(), LaurentPoly(1),
                                            BasisTag::plain);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void BM_block_solve(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const std::vector<int> sums(3, d);
    for (auto _ : state) {
        BlockCache cache(std::nullopt);
        benchmark::DoNotOptimize(cache.block(sums, sums));
    }
}

void BM_act_left(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    BlockCache cache(std::nullopt);
    const auto f = canonical_plain(cache, spread_matrix(3, d));
    const GeneratorSymbol e1{GenKind::E, 1};
    for (auto _ : state) benchmark::DoNotOptimize(act_L(e1, f));
}

}  // namespace

BENCHMARK(BM_straighten)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_multiply)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK(BM_block_solve)->Arg(1)->Arg(2);
BENCHMARK(BM_act_left)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
