#include <benchmark/benchmark.h>

#include <random>

#include "summpip/cluster.hpp"
#include "summpip/compress.hpp"
#include "summpip/graph.hpp"
#include "summpip/ingest.hpp"
#include "summpip/rouge.hpp"
#include "summpip/word_graph.hpp"

using namespace summpip;

namespace {

const Resources& resources() {
  static const Resources r = [] {
    auto p = ResourcePaths::in_directory(SUMMPIP_BENCH_RESOURCE_DIR);
    p.vectors = std::filesystem::path(SUMMPIP_BENCH_TEST_DATA_DIR) / "news_vectors.txt";
    return load_resources(p);
  }();
  return r;
}

const std::vector<DocumentCluster>& corpus() {
  static const std::vector<DocumentCluster> c = [] {
    auto clusters = load_cluster_file(std::filesystem::path(SUMMPIP_BENCH_TEST_DATA_DIR) / "news_clusters.txt");
    for (auto& cl : clusters) segment_cluster(cl, resources().stopwords, resources().abbreviations);
    return clusters;
  }();
  return c;
}

void BM_SentenceGraph(benchmark::State& state) {
  const auto& cl = corpus()[0];
  for (auto _ : state) benchmark::DoNotOptimize(build_sentence_graph(cl, resources(), GraphConfig{}));
}
BENCHMARK(BM_SentenceGraph);

void BM_SpectralCluster(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::bernoulli_distribution coin(0.2);
  SentenceGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j, EdgeRule::kSimilarity, 1.0);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(cluster_sentences(g, 9, 42));
}
BENCHMARK(BM_SpectralCluster)->Arg(20)->Arg(40)->Arg(80);

void BM_WordGraphBuild(benchmark::State& state) {
  const auto& s = corpus()[0].sentences;
  for (auto _ : state) benchmark::DoNotOptimize(build_word_graph(s, resources().pos));
}
BENCHMARK(BM_WordGraphBuild);

void BM_KShortestPaths(benchmark::State& state) {
  const auto& s = corpus()[0].sentences;
  auto g = build_word_graph(s, resources().pos);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shortest_paths(g, k));
}
BENCHMARK(BM_KShortestPaths)->Arg(10)->Arg(100);

void BM_CompressCluster(benchmark::State& state) {
  const auto& s = corpus()[1].sentences;
  for (auto _ : state) benchmark::DoNotOptimize(compress_cluster(s, resources(), CompressConfig{}));
}
BENCHMARK(BM_CompressCluster);

void BM_RougeSU4(benchmark::State& state) {
  std::string a, b;
  for (const auto& s : corpus()[2].sentences) a += s.text + ' ';
  for (const auto& s : corpus()[3].sentences) b += s.text + ' ';
  for (auto _ : state) benchmark::DoNotOptimize(rouge_su4(a, b));
}
BENCHMARK(BM_RougeSU4);

}  // namespace
BENCHMARK_MAIN();
