#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "summpip/cluster.hpp"
#include "summpip/errors.hpp"

#include <Eigen/Eigenvalues>

using namespace summpip;
using summpip::testing::component_count;
using summpip::testing::jacobi_eigenvalues;
using summpip::testing::random_clique_graph;
using summpip::testing::same_partition;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> edge_pairs(const SentenceGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [p, l] : g.edges()) out.push_back(p);
  return out;
}

}  // namespace

TEST(Laplacian, MatchesDefinition) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    auto g = summpip::testing::random_graph(rng, 2 + rng() % 10, 0.4);
    auto L = laplacian(g);
    auto ref = summpip::testing::reference_laplacian(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) EXPECT_NEAR(L(i, j), ref[i][j], 1e-14);
    }
  }
}

TEST(Laplacian, IsolatedNodeKeepsIdentityRow) {
  SentenceGraph g(3);
  g.add_edge(0, 1, EdgeRule::kEntity);
  auto L = laplacian(g);
  EXPECT_EQ(L(2, 2), 1.0);
  EXPECT_EQ(L(2, 0), 0.0);
  EXPECT_NEAR(L(0, 1), -1.0, 1e-15);
}

TEST(SpectralEmbed, TwoDisjointEdges) {
  SentenceGraph g(4);
  g.add_edge(0, 1, EdgeRule::kEntity);
  g.add_edge(2, 3, EdgeRule::kEntity);
  auto e = spectral_embed(laplacian(g), 2);
  EXPECT_NEAR(e.eigenvalues(0), 0.0, 1e-8);
  EXPECT_NEAR(e.eigenvalues(1), 0.0, 1e-8);
  EXPECT_NEAR((e.matrix.row(0) - e.matrix.row(1)).norm(), 0.0, 1e-8);
  EXPECT_NEAR((e.matrix.row(2) - e.matrix.row(3)).norm(), 0.0, 1e-8);
  EXPECT_GT((e.matrix.row(0) - e.matrix.row(2)).norm(), 0.5);
  for (int r = 0; r < 4; ++r) EXPECT_NEAR(e.matrix.row(r).norm(), 1.0, 1e-12);
}

TEST(SpectralEmbed, EigenvaluesMatchJacobiOracle) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + rng() % 11;
    auto g = summpip::testing::random_graph(rng, n, 0.35);
    auto L = laplacian(g);
    auto e = spectral_embed(L, n);
    auto ref = jacobi_eigenvalues(summpip::testing::reference_laplacian(g));
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(e.eigenvalues(static_cast<Eigen::Index>(i)), ref[i], 1e-9);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_GE(ref[i], -1e-9);
      EXPECT_LE(ref[i], 2.0 + 1e-9);
    }
  }
}

TEST(SpectralEmbed, ZeroMultiplicityEqualsComponentCount) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + rng() % 11;
    auto g = summpip::testing::random_graph(rng, n, 0.25);
    // isolated nodes have eigenvalue 1, so count only components with an edge
    auto comps = summpip::testing::component_labels(n, edge_pairs(g));
    std::vector<std::size_t> size(n, 0);
    for (auto c : comps) ++size[c];
    std::size_t nontrivial = 0;
    for (auto s : size) nontrivial += s >= 2 ? 1 : 0;
    auto ref = jacobi_eigenvalues(summpip::testing::reference_laplacian(g));
    std::size_t zeros = 0;
    for (double v : ref) zeros += std::abs(v) < 1e-8 ? 1 : 0;
    EXPECT_EQ(zeros, nontrivial);
    auto e = spectral_embed(laplacian(g), n);
    std::size_t lib_zeros = 0;
    for (Eigen::Index i = 0; i < e.eigenvalues.size(); ++i) lib_zeros += std::abs(e.eigenvalues(i)) < 1e-8 ? 1 : 0;
    EXPECT_EQ(lib_zeros, nontrivial);
  }
}

TEST(SpectralEmbed, SignConvention) {
  std::mt19937_64 rng(41);
  auto g = summpip::testing::random_graph(rng, 9, 0.5);
  auto L = laplacian(g);
  auto e = spectral_embed(L, 3);
  // recompute unnormalized vectors to check the sign rule
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
  for (int c = 0; c < 3; ++c) {
    Eigen::VectorXd v = solver.eigenvectors().col(c);
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    if (v(arg) < 0) v = -v;
    for (Eigen::Index r = 0; r < v.size(); ++r) {
      double norm = 0.0;
      for (int k = 0; k < 3; ++k) norm += std::pow(solver.eigenvectors()(r, k), 2);
      if (norm > 0) {
        EXPECT_NEAR(e.matrix(r, c), v(r) / std::sqrt(norm), 1e-9);
      }
    }
  }
}

TEST(SpectralEmbed, Contracts) {
  Eigen::MatrixXd rect(2, 3);
  EXPECT_THROW(spectral_embed(rect, 1), std::invalid_argument);
  Eigen::MatrixXd sq = Eigen::MatrixXd::Identity(3, 3);
  EXPECT_THROW(spectral_embed(sq, 0), std::invalid_argument);
  EXPECT_THROW(spectral_embed(sq, 4), std::invalid_argument);
}

TEST(SpectralEmbed, NonSymmetricInputFailsResidualCheck) {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 5.0, 0.0, 1.0;  // the solver reads only the lower triangle
  EXPECT_THROW(spectral_embed(m, 2), NumericalError);
}

TEST(KMeans, FindsExhaustiveOptimumOnSeparatedPoints) {
  std::mt19937_64 rng(51);
  std::normal_distribution<double> noise(0.0, 0.05);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 6 + rng() % 5;
    Eigen::MatrixXd pts(static_cast<Eigen::Index>(n), 2);
    std::vector<std::vector<double>> raw;
    for (std::size_t i = 0; i < n; ++i) {
      double cx = i % 2 == 0 ? 0.0 : 3.0;
      pts(static_cast<Eigen::Index>(i), 0) = cx + noise(rng);
      pts(static_cast<Eigen::Index>(i), 1) = noise(rng);
      raw.push_back({pts(static_cast<Eigen::Index>(i), 0), pts(static_cast<Eigen::Index>(i), 1)});
    }
    auto a = kmeans(pts, 2, 42);
    EXPECT_NEAR(within_cluster_ss(pts, a.labels, 2), summpip::testing::exhaustive_min_wcss(raw, 2), 1e-12);
  }
}

TEST(KMeans, DeterministicForSeed) {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> g;
  Eigen::MatrixXd pts(30, 3);
  for (Eigen::Index i = 0; i < pts.rows(); ++i) {
    for (Eigen::Index j = 0; j < 3; ++j) pts(i, j) = g(rng);
  }
  EXPECT_EQ(kmeans(pts, 4, 42).labels, kmeans(pts, 4, 42).labels);
}

TEST(KMeans, EveryClusterNonEmptyWhenPointsDistinct) {
  std::mt19937_64 rng(71);
  std::normal_distribution<double> g;
  for (int t = 0; t < 20; ++t) {
    Eigen::MatrixXd pts(12, 2);
    for (Eigen::Index i = 0; i < pts.rows(); ++i) {
      for (Eigen::Index j = 0; j < 2; ++j) pts(i, j) = g(rng);
    }
    auto a = kmeans(pts, 5, 42);
    EXPECT_EQ(a.non_empty(), 5u);
  }
}

TEST(KMeans, Contracts) {
  Eigen::MatrixXd pts(3, 2);
  pts.setZero();
  EXPECT_THROW(kmeans(pts, 0, 42), std::invalid_argument);
  EXPECT_THROW(kmeans(pts, 4, 42), std::invalid_argument);
}

TEST(ClusterSentences, TwoCliques) {
  SentenceGraph g(8);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      g.add_edge(a, b, EdgeRule::kEntity);
      g.add_edge(a + 4, b + 4, EdgeRule::kEntity);
    }
  }
  auto a = cluster_sentences(g, 2, 42);
  EXPECT_TRUE(same_partition(a.labels, {0, 0, 0, 0, 1, 1, 1, 1}));
}

TEST(ClusterSentences, FewerSentencesThanClusters) {
  SentenceGraph g(3);
  auto a = cluster_sentences(g, 9, 42);
  EXPECT_EQ(a.labels, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(a.k, 9u);
  EXPECT_EQ(a.non_empty(), 3u);
}

TEST(ClusterSentences, RandomCliquesRecoverComponents) {
  std::mt19937_64 rng(81);
  for (int t = 0; t < 30; ++t) {
    std::size_t c = 2 + rng() % 2;
    auto f = random_clique_graph(rng, c);
    EXPECT_EQ(component_count(f.graph.size(), edge_pairs(f.graph)), c);
    auto a = cluster_sentences(f.graph, c, 42);
    EXPECT_TRUE(same_partition(a.labels, f.components));
  }
}

TEST(ClusterSentences, Assignment) {
  ClusterAssignment a;
  a.labels = {1, 0, 1};
  std::ostringstream out;
  write_assignment(a, out);
  EXPECT_EQ(out.str(), "0\t1\n1\t0\n2\t1\n");
}
