#pragma once

// Node Similarity Index baseline: embed nodes as points in [0,1]^k and find
// the smallest disk radius that makes the unit-disk graph connected.
//   NSI = 1 - threshold / sqrt(k)

#include <optional>
#include <string_view>
#include <vector>

#include "ndi/centrality.hpp"
#include "ndi/graph.hpp"

namespace ndi {

struct UnitDiskEmbedding {
  Matrix coords;  // n x k, entries in [0, 1]
  std::vector<std::size_t> degenerate_columns;

  std::size_t dimension() const noexcept { return coords.cols(); }
};

/// (x - min) / (max - min) per column; constant columns become zeros.
UnitDiskEmbedding minmax_normalize(const MetricTable& table);

/// x / ||x||_2 per column; all-zero columns stay zero and are flagged.
/// Requires nonnegative values.
UnitDiskEmbedding unit_norm_normalize(const MetricTable& table);

enum class NsiNormalization { unit_norm, min_max };
enum class ThresholdMethod { mst_bottleneck, binary_search };

std::string_view to_string(NsiNormalization n);
std::string_view to_string(ThresholdMethod m);
std::optional<NsiNormalization> parse_nsi_normalization(std::string_view s);
std::optional<ThresholdMethod> parse_threshold_method(std::string_view s);

/// True when the graph joining points within `radius` of each other is connected.
bool disk_graph_connected(const UnitDiskEmbedding& e, double radius);

/// Smallest radius in [0, sqrt(k)] (to within epsilon) that connects the
/// disk graph. Halts when hi - lo < epsilon and returns hi.
double min_connectivity_threshold_bsearch(const UnitDiskEmbedding& e, double epsilon = 1e-6);

/// Largest edge of the Euclidean minimum spanning tree (Prim, O(n^2)).
double mst_bottleneck(const UnitDiskEmbedding& e);

struct NsiOptions {
  ThresholdMethod method = ThresholdMethod::mst_bottleneck;
  NsiNormalization normalization = NsiNormalization::unit_norm;
  double epsilon = 1e-6;
};

struct NsiResult {
  double min_threshold = 0.0;
  double nsi = 1.0;
  ThresholdMethod method = ThresholdMethod::mst_bottleneck;
  NsiNormalization normalization = NsiNormalization::unit_norm;
  std::vector<std::size_t> degenerate_columns;
};

NsiResult compute_nsi_from_table(const MetricTable& table, const NsiOptions& options = {});

/// NSI over the DEG/EVC/BWC/CLC table of a connected graph.
NsiResult compute_nsi(const Graph& g, const NsiOptions& options = {});

}  // namespace ndi
