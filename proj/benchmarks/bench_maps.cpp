#include <benchmark/benchmark.h>

#include "qp/maps/canonical.hpp"
#include "qp/maps/closure.hpp"
#include "qp/maps/decomposition.hpp"
#include "qp/maps/labeled_tree.hpp"
#include "qp/maps/tally.hpp"

namespace {

void BM_ClosureStream(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t darts = 0;
    qp::maps::for_each_tree(n, [&](const qp::maps::LabeledPlaneTree& t) { darts += qp::maps::cvs_closure(t).alpha.size(); });
    benchmark::DoNotOptimize(darts);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * qp::maps::tree_stream_length(n)));
}
BENCHMARK(BM_ClosureStream)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Tally(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qp::maps::tally_two_point(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Tally)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  std::vector<qp::maps::SliceView> slices;
  qp::maps::for_each_pointed_rooted(static_cast<int>(state.range(0)), [&](const qp::maps::CombinatorialMap& m) {
    const int ell = qp::maps::root_distance(m);
    if (ell < 2) return;
    const qp::maps::MapTopology t(m);
    const auto d = qp::maps::bfs_distances(m, t, t.vertex_of[m.pointed]);
    if (d[static_cast<std::size_t>(t.target(m, m.root))] == ell - 1) slices.push_back(qp::maps::extract_slice(m));
  });
  for (auto _ : state) {
    std::size_t blocks = 0;
    for (const auto& s : slices) blocks += qp::maps::decompose(s, qp::maps::dividing_line(s)).blocks.size();
    benchmark::DoNotOptimize(blocks);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * slices.size()));
}
BENCHMARK(BM_Decompose)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

}  // namespace
