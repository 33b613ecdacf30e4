#include "summpip/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "summpip/errors.hpp"

namespace summpip {

namespace {

// Portable draws: std::uniform_*_distribution output differs between standard
// libraries, which would break cross-platform determinism.
double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

std::size_t uniform_index(std::mt19937_64& gen, std::size_t n) {
  return std::min(n - 1, static_cast<std::size_t>(uniform01(gen) * static_cast<double>(n)));
}

Eigen::MatrixXd seed_plus_plus(const Eigen::MatrixXd& points, std::size_t k, std::mt19937_64& gen) {
  const auto n = static_cast<std::size_t>(points.rows());
  Eigen::MatrixXd centers(static_cast<Eigen::Index>(k), points.cols());
  std::size_t first = uniform_index(gen, n);
  centers.row(0) = points.row(static_cast<Eigen::Index>(first));
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    d2[i] = (points.row(static_cast<Eigen::Index>(i)) - centers.row(0)).squaredNorm();
  }
  for (std::size_t c = 1; c < k; ++c) {
    double total = 0.0;
    for (double d : d2) total += d;
    std::size_t pick = 0;
    if (total <= 0.0) {
      pick = uniform_index(gen, n);
    } else {
      double target = uniform01(gen) * total;
      double cum = 0.0;
      pick = n;
      std::size_t last_positive = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (d2[i] <= 0.0) continue;
        last_positive = i;
        cum += d2[i];
        if (cum > target) {
          pick = i;
          break;
        }
      }
      if (pick == n) pick = last_positive;
    }
    centers.row(static_cast<Eigen::Index>(c)) = points.row(static_cast<Eigen::Index>(pick));
    for (std::size_t i = 0; i < n; ++i) {
      double d = (points.row(static_cast<Eigen::Index>(i)) - centers.row(static_cast<Eigen::Index>(c))).squaredNorm();
      d2[i] = std::min(d2[i], d);
    }
  }
  return centers;
}

std::vector<std::size_t> assign(const Eigen::MatrixXd& points, const Eigen::MatrixXd& centers) {
  std::vector<std::size_t> labels(static_cast<std::size_t>(points.rows()));
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (Eigen::Index c = 0; c < centers.rows(); ++c) {
      double d = (points.row(i) - centers.row(c)).squaredNorm();
      if (d < best) {
        best = d;
        arg = static_cast<std::size_t>(c);
      }
    }
    labels[static_cast<std::size_t>(i)] = arg;
  }
  return labels;
}

Eigen::MatrixXd centroids(const Eigen::MatrixXd& points, const std::vector<std::size_t>& labels, std::size_t k,
                          const Eigen::MatrixXd& previous) {
  Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), points.cols());
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    sums.row(static_cast<Eigen::Index>(labels[i])) += points.row(static_cast<Eigen::Index>(i));
    ++counts[labels[i]];
  }
  for (std::size_t c = 0; c < k; ++c) {
    auto row = static_cast<Eigen::Index>(c);
    if (counts[c] > 0) sums.row(row) /= static_cast<double>(counts[c]);
    else sums.row(row) = previous.row(row);
  }
  return sums;
}

// Moves the point farthest from its centroid into each empty cluster.
void repair_empty(const Eigen::MatrixXd& points, std::vector<std::size_t>& labels, Eigen::MatrixXd& centers) {
  const auto k = static_cast<std::size_t>(centers.rows());
  std::vector<std::size_t> counts(k, 0);
  for (auto l : labels) ++counts[l];
  for (std::size_t c = 0; c < k; ++c) {
    if (counts[c] > 0) continue;
    double worst = -1.0;
    std::size_t arg = labels.size();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (counts[labels[i]] <= 1) continue;
      double d = (points.row(static_cast<Eigen::Index>(i)) - centers.row(static_cast<Eigen::Index>(labels[i])))
                     .squaredNorm();
      if (d > worst) {
        worst = d;
        arg = i;
      }
    }
    if (arg == labels.size()) break;
    --counts[labels[arg]];
    labels[arg] = c;
    counts[c] = 1;
    centers.row(static_cast<Eigen::Index>(c)) = points.row(static_cast<Eigen::Index>(arg));
  }
}

}  // namespace

Eigen::MatrixXd laplacian(const SentenceGraph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.size());
  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [pair, labels] : graph.edges()) {
    auto i = static_cast<Eigen::Index>(pair.first);
    auto j = static_cast<Eigen::Index>(pair.second);
    adjacency(i, j) = adjacency(j, i) = labels.front().weight;
  }
  Eigen::VectorXd inv_sqrt_degree(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double d = adjacency.row(i).sum();
    inv_sqrt_degree(i) = d > 0.0 ? 1.0 / std::sqrt(d) : 0.0;
  }
  Eigen::MatrixXd L = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (adjacency(i, j) != 0.0) L(i, j) -= inv_sqrt_degree(i) * adjacency(i, j) * inv_sqrt_degree(j);
    }
  }
  return L;
}

SpectralEmbedding spectral_embed(const Eigen::MatrixXd& lap, std::size_t k) {
  const auto n = static_cast<std::size_t>(lap.rows());
  if (lap.rows() != lap.cols()) throw std::invalid_argument("spectral_embed: matrix must be square");
  if (k < 1 || k > n) throw std::invalid_argument("spectral_embed: need 1 <= k <= n");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver did not converge", std::numeric_limits<double>::infinity());
  }
  const auto kk = static_cast<Eigen::Index>(k);
  SpectralEmbedding out;
  out.eigenvalues = solver.eigenvalues().head(kk);
  out.matrix = solver.eigenvectors().leftCols(kk);

  double worst = 0.0;
  for (Eigen::Index c = 0; c < kk; ++c) {
    auto v = out.matrix.col(c);
    worst = std::max(worst, (lap * v - out.eigenvalues(c) * v).norm());
    Eigen::Index arg = 0;
    for (Eigen::Index r = 1; r < v.size(); ++r) {
      if (std::abs(v(r)) > std::abs(v(arg))) arg = r;
    }
    if (v(arg) < 0.0) v = -v;
  }
  if (worst > kEigenResidualTolerance) {
    throw NumericalError("eigenpair residual " + std::to_string(worst) + " exceeds tolerance", worst);
  }

  for (Eigen::Index r = 0; r < out.matrix.rows(); ++r) {
    double norm = out.matrix.row(r).norm();
    if (norm > 0.0) out.matrix.row(r) /= norm;
  }
  return out;
}

std::size_t ClusterAssignment::non_empty() const {
  return std::set<std::size_t>(labels.begin(), labels.end()).size();
}

double within_cluster_ss(const Eigen::MatrixXd& points, const std::vector<std::size_t>& labels, std::size_t k) {
  Eigen::MatrixXd centers = centroids(points, labels, k, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k),
                                                                               points.cols()));
  double total = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    total += (points.row(static_cast<Eigen::Index>(i)) - centers.row(static_cast<Eigen::Index>(labels[i])))
                 .squaredNorm();
  }
  return total;
}

ClusterAssignment kmeans(const Eigen::MatrixXd& points, std::size_t k, std::uint64_t seed,
                         const KMeansOptions& options) {
  const auto n = static_cast<std::size_t>(points.rows());
  if (k < 1 || k > n) throw std::invalid_argument("kmeans: need 1 <= k <= n");

  std::mt19937_64 gen(seed);
  ClusterAssignment best;
  best.k = k;
  double best_ss = std::numeric_limits<double>::infinity();

  for (std::size_t run = 0; run < std::max<std::size_t>(1, options.restarts); ++run) {
    Eigen::MatrixXd centers = seed_plus_plus(points, k, gen);
    auto labels = assign(points, centers);
    for (std::size_t it = 0; it < options.max_iterations; ++it) {
      repair_empty(points, labels, centers);
      centers = centroids(points, labels, k, centers);
      auto next = assign(points, centers);
      if (next == labels) break;
      labels = std::move(next);
    }
    repair_empty(points, labels, centers);
    double ss = within_cluster_ss(points, labels, k);
    if (ss < best_ss) {
      best_ss = ss;
      best.labels = std::move(labels);
    }
  }
  return best;
}

ClusterAssignment cluster_sentences(const SentenceGraph& graph, std::size_t k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("cluster_sentences: k must be positive");
  const std::size_t n = graph.size();
  if (n <= k) {
    ClusterAssignment a;
    a.k = k;
    a.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) a.labels[i] = i;
    return a;
  }
  auto embedding = spectral_embed(laplacian(graph), k);
  return kmeans(embedding.matrix, k, seed);
}

void write_assignment(const ClusterAssignment& assignment, std::ostream& out) {
  for (std::size_t i = 0; i < assignment.labels.size(); ++i) out << i << '\t' << assignment.labels[i] << '\n';
}

}  // namespace summpip
