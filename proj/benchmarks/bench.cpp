#include <benchmark/benchmark.h>

#include <string>

#include "pathpoly/oracle.hpp"
#include "pathpoly/path_polytope.hpp"
#include "pathpoly/tfp.hpp"
#include "pathpoly/tree.hpp"

using namespace pathpoly;

namespace {

Tree star(std::size_t leaves) {
  std::string text;
  for (std::size_t i = 1; i <= leaves; ++i)
    text += "0 " + std::to_string(i) + "\n";
  return parse_edge_list(text);
}

// degree-3 spine: a comb with one leaf per spine node and capped ends
Tree caterpillar(std::size_t spine) {
  std::string text;
  for (std::size_t i = 1; i < spine; ++i)
    text += "s" + std::to_string(i) + " s" + std::to_string(i + 1) + "\n";
  for (std::size_t i = 1; i <= spine; ++i)
    text += "s" + std::to_string(i) + " l" + std::to_string(i) + "\n";
  text += "s1 p\n";
  text += "s" + std::to_string(spine) + " q\n";
  return parse_edge_list(text);
}

void BM_vrep_star(benchmark::State& state) {
  Tree t = star(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vrep(t));
}
BENCHMARK(BM_vrep_star)->Arg(5)->Arg(8)->Arg(12);

void BM_closed_form_caterpillar(benchmark::State& state) {
  Tree t = caterpillar(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hrep_minimal(t));
}
BENCHMARK(BM_closed_form_caterpillar)->Arg(3)->Arg(5)->Arg(8);

void BM_oracle_star(benchmark::State& state) {
  VRep v = vrep(star(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_hrep(v));
}
BENCHMARK(BM_oracle_star)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

void BM_oracle_caterpillar(benchmark::State& state) {
  VRep v = vrep(caterpillar(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_hrep(v));
}
BENCHMARK(BM_oracle_caterpillar)->Arg(3)->Arg(4)->Arg(5);

void BM_vertex_enumeration_star(benchmark::State& state) {
  HRep h = minimal_hrep(vrep(star(static_cast<std::size_t>(state.range(0)))))
               .to_hrep();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(h));
}
BENCHMARK(BM_vertex_enumeration_star)->Arg(4)->Arg(5)->Arg(6);

void BM_fiber_product_rebuild(benchmark::State& state) {
  Tree t = caterpillar(static_cast<std::size_t>(state.range(0)));
  Edge cut;
  for (const Edge& e : t.edges())
    if (!t.is_leaf(e.a()) && !t.is_leaf(e.b())) {
      cut = e;
      break;
    }
  for (auto _ : state) {
    SplitResult s = split_at_edge(t, cut);
    GluingSpec spec = GluingSpec::make(s.t1, s.e1, s.t2, s.e2);
    auto [p1, p2] = gluing_projections(spec);
    VRep product =
        toric_fiber_product(free_join_with_origin(vrep(spec.t1)),
                            free_join_with_origin(vrep(spec.t2)), p1, p2);
    benchmark::DoNotOptimize(tfp_isomorphism(spec).apply(product.vertices[0]));
  }
}
BENCHMARK(BM_fiber_product_rebuild)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
