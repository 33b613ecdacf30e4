#pragma once

#include <cstdint>
#include <cstddef>
#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "summpip/graph.hpp"

namespace summpip {

/// Symmetric normalized Laplacian I - D^-1/2 A D^-1/2. Isolated nodes keep
/// their identity row.
Eigen::MatrixXd laplacian(const SentenceGraph& graph);

struct SpectralEmbedding {
  Eigen::MatrixXd matrix;       // n x k, rows unit length (zero rows stay zero)
  Eigen::VectorXd eigenvalues;  // k values, ascending
};

inline constexpr double kEigenResidualTolerance = 1e-6;

/// Eigenvectors of the k smallest eigenvalues of a symmetric matrix, then
/// row-normalized. Each eigenvector's sign is fixed so that its
/// largest-magnitude entry is positive. Throws NumericalError when any
/// eigenpair residual |Lv - lambda v| exceeds kEigenResidualTolerance, and
/// std::invalid_argument unless 1 <= k <= n.
SpectralEmbedding spectral_embed(const Eigen::MatrixXd& laplacian, std::size_t k);

struct ClusterAssignment {
  std::vector<std::size_t> labels;
  std::size_t k = 0;

  /// Number of distinct labels actually used.
  std::size_t non_empty() const;
};

struct KMeansOptions {
  std::size_t max_iterations = 300;
  std::size_t restarts = 10;
};

/// Sum of squared distances from each point to the centroid of its label.
double within_cluster_ss(const Eigen::MatrixXd& points, const std::vector<std::size_t>& labels, std::size_t k);

/// k-means++ seeding from a seeded generator, Lloyd iterations until the
/// assignment is stable, best of `restarts` runs by within-cluster SS. An
/// empty cluster takes the point farthest from its current centroid.
ClusterAssignment kmeans(const Eigen::MatrixXd& points, std::size_t k, std::uint64_t seed,
                         const KMeansOptions& options = {});

/// laplacian -> spectral_embed -> kmeans. When the graph has at most k nodes,
/// each sentence gets its own label.
ClusterAssignment cluster_sentences(const SentenceGraph& graph, std::size_t k, std::uint64_t seed);

/// Debug dump: "global_index<TAB>label" per line.
void write_assignment(const ClusterAssignment& assignment, std::ostream& out);

}  // namespace summpip
