#include <benchmark/benchmark.h>

#include "obc/hecke.hpp"
#include "obc/towers.hpp"

using namespace obc;

namespace {

Params p2() { return make_params(2, 0, {"0", "2"}, {"0", "1"}); }

void BM_enumerate_basis(benchmark::State& state) {
  Params P = p2();
  Word a(state.range(0), 'u');
  for (auto _ : state) {
    auto basis = enumerate_basis(a, a, P);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_enumerate_basis)->Arg(2)->Arg(3);

void BM_normalize_stack(benchmark::State& state) {
  Params P = p2();
  LayerWord lw;
  lw.src = "ud";
  lw.layers = {Layer{0, Gen::CrossUD}, Layer{1, Gen::DotUp}, Layer{0, Gen::CrossDU},
               Layer{0, Gen::DotUp},  Layer{0, Gen::CupR},  Layer{2, Gen::CapL}};
  for (auto _ : state) {
    Morphism m = eval(lw, P);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_normalize_stack);

void BM_compose_endomorphisms(benchmark::State& state) {
  Params P = p2();
  auto basis = enumerate_basis("uud", "uud", P);
  Morphism g = Morphism::unit(basis[basis.size() / 2], Fq::one(0));
  Morphism h = Morphism::unit(basis[basis.size() / 3], Fq::one(0));
  for (auto _ : state) {
    Morphism m = compose(g, h, P);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_compose_endomorphisms);

void BM_corner_algebra(benchmark::State& state) {
  Params P = p2();
  for (auto _ : state) {
    CornerAlgebra alg = corner_algebra("uud", P);
    benchmark::DoNotOptimize(alg);
  }
}
BENCHMARK(BM_corner_algebra);

void BM_eigen_profile(benchmark::State& state) {
  Params P = p2();
  for (auto _ : state) {
    EigenProfile prof = eigen_profile("udud", "", P);
    benchmark::DoNotOptimize(prof);
  }
}
BENCHMARK(BM_eigen_profile);

void BM_hecke_check(benchmark::State& state) {
  Params P = p2();
  for (auto _ : state) {
    HeckeReport rep = check_hecke_relations(2, 1, P);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_hecke_check);

}  // namespace

BENCHMARK_MAIN();
