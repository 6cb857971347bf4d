#include <cla/fpgroup.hpp>
#include <cla/groebner.hpp>
#include <cla/parser.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace cla;

static void BM_MultiPolyMul(benchmark::State& state) {
    const std::vector<std::string> vars{"t", "x", "y"};
    std::mt19937_64 rng(1);
    MultiPoly<Rational>::TermMap ta, tb;
    for (int k = 0; k < (int)state.range(0); ++k) {
        ta[Monomial{(int)(rng() % 6), (int)(rng() % 6), (int)(rng() % 4)}] =
            Rational((long)(rng() % 19) - 9);
        tb[Monomial{(int)(rng() % 6), (int)(rng() % 6), (int)(rng() % 4)}] =
            Rational((long)(rng() % 19) - 9);
    }
    MultiPoly<Rational> a(vars, std::move(ta)), b(vars, std::move(tb));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MultiPolyMul)->Arg(8)->Arg(32);

static void BM_Buchberger(benchmark::State& state) {
    const std::vector<std::string> vars{"x", "y", "z"};
    Ideal<Rational> ideal{vars,
                          {parse_poly("x^2 + y + z - 1", vars),
                           parse_poly("x + y^2 + z - 1", vars),
                           parse_poly("x + y + z^2 - 1", vars)}};
    MonomialOrder order = MonomialOrder::lex(vars);
    for (auto _ : state)
        benchmark::DoNotOptimize(reduce_basis(buchberger(ideal, order)));
}
BENCHMARK(BM_Buchberger);

static void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::size_t n = (std::size_t)state.range(0);
    std::vector<std::vector<Integer>> A(n, std::vector<Integer>(n));
    for (auto& row : A)
        for (auto& e : row) e = Integer((long)(rng() % 41) - 20);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(A));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
