#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "glide/glide.hpp"

using namespace glide;

namespace {

// The 2 x n grid graph: vertices t0..t{n-1} over b0..b{n-1}.
Hypergraph ladder(std::size_t n) {
  std::vector<EdgeSpec> edges;
  auto t = [](std::size_t i) { return "t" + std::to_string(i); };
  auto b = [](std::size_t i) { return "b" + std::to_string(i); };
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({"r" + std::to_string(i), {t(i), b(i)}});
    if (i + 1 < n) {
      edges.push_back({"u" + std::to_string(i), {t(i), t(i + 1)}});
      edges.push_back({"d" + std::to_string(i), {b(i), b(i + 1)}});
    }
  }
  return Hypergraph::from_edges(std::move(edges), Mode::Graph);
}

void perfect_matchings(benchmark::State& state) {
  const auto h = ladder(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_perfect_matchings(h));
}
BENCHMARK(perfect_matchings)->DenseRange(4, 12, 4);

void dimer_complex_of_ladder(benchmark::State& state) {
  const auto h = ladder(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dimer_complex(h));
}
BENCHMARK(dimer_complex_of_ladder)->DenseRange(4, 10, 2);

void presentation_and_abelianization(benchmark::State& state) {
  const auto h = ladder(static_cast<std::size_t>(state.range(0)));
  const auto a0 = matching_edges(enumerate_perfect_matchings(h))[0];
  for (auto _ : state) {
    const auto p = dimer_presentation(h, a0);
    benchmark::DoNotOptimize(abelianization_rank(tietze_simplify(p.presentation)));
  }
}
BENCHMARK(presentation_and_abelianization)->DenseRange(3, 6, 1);

void raag_normal_form_random(benchmark::State& state) {
  const std::size_t gens = 12;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens; ++i) names.push_back("g" + std::to_string(i));
  RaagSpec spec(names);
  std::mt19937_64 rng(7);
  for (std::size_t a = 0; a < gens; ++a)
    for (std::size_t c = a + 1; c < gens; ++c)
      if (rng() % 2) spec.set_commuting(a, c);
  Word w;
  for (int i = 0; i < state.range(0); ++i) w.letters.push_back({rng() % gens, rng() % 2 ? 1 : -1});
  for (auto _ : state) benchmark::DoNotOptimize(raag_normal_form(w, spec));
}
BENCHMARK(raag_normal_form_random)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
