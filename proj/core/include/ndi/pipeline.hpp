#pragma once

// Node Dissimilarity Index: PCA over a node-metric table, a pairwise
// distance matrix over the retained component scores, and the principal
// eigenpair of that matrix at network and node level.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ndi/centrality.hpp"
#include "ndi/graph.hpp"
#include "ndi/numerics.hpp"

namespace ndi {

/// How the "average entry" denominator of the network-level NDI is formed.
enum class AveragingConvention {
  row_mean,                // sum of all entries / n
  nondiag_over_n_minus_1,  // sum of off-diagonal entries / (n - 1)
  entry_mean,              // sum of all entries / (n (n - 1))
};

std::string_view to_string(AveragingConvention c);
/// Accepts "row-mean", "nondiag-nm1", "entry-mean" (underscores also accepted).
std::optional<AveragingConvention> parse_averaging_convention(std::string_view s);

struct NdiOptions {
  double retention_threshold = 1.0;
  AveragingConvention averaging = AveragingConvention::row_mean;
  StdDivisor divisor = StdDivisor::sample;
};

struct PcaResult {
  Matrix standardized;
  SymmetricMatrix correlation;
  std::vector<double> eigenvalues;            // descending
  std::vector<std::vector<double>> loadings;  // unit eigenvectors, same order
  Matrix scores;                              // standardized * loadings, n x k
  std::vector<double> pc_variances;           // sample variance of each score column
  std::size_t retained_m = 1;
  std::vector<std::size_t> degenerate_columns;
  bool retention_floor_applied = false;  // no PC reached the threshold
};

/// Thrown by run_pca when every metric column has zero variance.
class DegenerateTableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

PcaResult run_pca(const MetricTable& table, const NdiOptions& options = {});

/// Symmetric, zero-diagonal matrix of pairwise Euclidean distances.
using NodeDissimilarityMatrix = SymmetricMatrix;

/// Distances over the first `retained_m` score columns.
NodeDissimilarityMatrix build_ndm(const Matrix& scores, std::size_t retained_m);

struct NetworkNdi {
  double ndi = 1.0;
  double eigenvalue = 0.0;
  double average = 0.0;
  bool degenerate = false;  // all-zero NDM
};

double ndm_average(const NodeDissimilarityMatrix& ndm, AveragingConvention convention);

NetworkNdi network_ndi(const NodeDissimilarityMatrix& ndm,
                       AveragingConvention convention = AveragingConvention::row_mean);

struct NodeNdi {
  std::vector<double> values;  // unit L2, nonnegative
  bool degenerate = false;
};

NodeNdi node_ndi(const NodeDissimilarityMatrix& ndm);

struct ElbowPartition {
  std::size_t elbow_index = 0;          // first rank of the similar group
  std::vector<std::size_t> order;       // node indices sorted by descending value
  std::vector<std::size_t> dissimilar;  // node indices, in rank order
  std::vector<std::size_t> similar;     // node indices, in rank order
  bool degenerate = false;              // all values equal
};

/// Splits descending-sorted values at the point lying farthest below the
/// chord joining the first and last points. Requires at least 3 values.
ElbowPartition elbow_partition(std::span<const double> values);

struct NdiReport {
  std::vector<std::string> node_labels;
  MetricTable metrics;
  std::optional<PcaResult> pca;  // empty on the fully degenerate path
  NodeDissimilarityMatrix ndm;
  double network_ndi = 1.0;
  double ndm_eigenvalue = 0.0;
  double ndm_average = 0.0;
  AveragingConvention averaging = AveragingConvention::row_mean;
  std::vector<double> node_ndi;
  std::vector<std::size_t> rank;  // rank[v] = position of v in descending order
  ElbowPartition elbow;
  std::vector<std::string> dissimilar_nodes;
  std::vector<std::string> similar_nodes;
  std::vector<std::string> degeneracy_flags;
  bool degenerate = false;  // NDI fixed at 1.0 because the NDM is all zero
  std::size_t edges = 0;    // 0 when built from a table

  std::size_t retained_m() const noexcept { return pca ? pca->retained_m : 0; }
};

/// Full pipeline on a connected graph's DEG/EVC/BWC/CLC table.
NdiReport compute_ndi(const Graph& g, const NdiOptions& options = {});

/// Pipeline on an arbitrary metric table (any k >= 1, n >= 3).
NdiReport compute_ndi_from_table(const MetricTable& table, const NdiOptions& options = {});

}  // namespace ndi
