#pragma once

#include <string>
#include <vector>

#include "ndi/graph.hpp"
#include "ndi/numerics.hpp"

namespace ndi {

/// Raw node-level metric values: one row per node, one named column per metric.
struct MetricTable {
  std::vector<std::string> column_names;
  std::vector<std::string> node_labels;
  Matrix values;

  std::size_t node_count() const noexcept { return values.rows(); }
  std::size_t metric_count() const noexcept { return values.cols(); }

  /// Throws std::invalid_argument on shape mismatch or non-finite entries.
  void validate() const;
};

/// Column names of centrality_table(), in order.
inline const std::vector<std::string> kCentralityColumns = {"DEG", "EVC", "BWC", "CLC"};

std::vector<double> degree_centrality(const Graph& g);

/// Unit-L2, nonnegative principal eigenvector of the 0-1 adjacency matrix.
/// Requires a connected graph.
std::vector<double> eigenvector_centrality(const Graph& g);

/// Brandes accumulation over unordered pairs, endpoints excluded, no
/// normalization. Requires a connected graph.
std::vector<double> betweenness_centrality(const Graph& g);

/// 1 / (sum of hop distances to all other nodes). Requires a connected graph.
std::vector<double> closeness_centrality(const Graph& g);

/// DEG, EVC, BWC, CLC for every node of a connected graph.
MetricTable centrality_table(const Graph& g);

}  // namespace ndi
