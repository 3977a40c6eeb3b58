#include "ndi/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ndi {

namespace {

// PC variances of exactly-uncorrelated data land on 1.0 +- a few ulps.
constexpr double kRetentionSlack = 1e-9;
constexpr double kFlatTolerance = 1e-12;

std::vector<double> uniform_vector(std::size_t n) {
  return std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n)));
}

}  // namespace

std::string_view to_string(AveragingConvention c) {
  switch (c) {
    case AveragingConvention::row_mean: return "row-mean";
    case AveragingConvention::nondiag_over_n_minus_1: return "nondiag-nm1";
    case AveragingConvention::entry_mean: return "entry-mean";
  }
  return "unknown";
}

std::optional<AveragingConvention> parse_averaging_convention(std::string_view s) {
  std::string norm(s);
  std::replace(norm.begin(), norm.end(), '_', '-');
  if (norm == "row-mean") return AveragingConvention::row_mean;
  if (norm == "nondiag-nm1" || norm == "nondiag-over-n-minus-1")
    return AveragingConvention::nondiag_over_n_minus_1;
  if (norm == "entry-mean") return AveragingConvention::entry_mean;
  return std::nullopt;
}

PcaResult run_pca(const MetricTable& table, const NdiOptions& options) {
  table.validate();
  const std::size_t n = table.node_count();
  const std::size_t k = table.metric_count();
  if (k == 0) throw std::invalid_argument("metric table has no columns");

  auto std_data = standardize_columns(table.values, options.divisor);
  if (std_data.degenerate_columns.size() == k) {
    throw DegenerateTableError(
        "every metric column has zero variance; use compute_ndi for the degenerate path");
  }

  PcaResult out;
  out.correlation = correlation_matrix(std_data.data);
  const auto pairs = jacobi_eigen(out.correlation);

  out.scores = Matrix(n, k);
  for (std::size_t c = 0; c < k; ++c) {
    out.eigenvalues.push_back(pairs[c].value);
    out.loadings.push_back(pairs[c].vector);
    for (std::size_t r = 0; r < n; ++r) {
      auto row = std_data.data.row(r);
      out.scores(r, c) =
          std::inner_product(row.begin(), row.end(), pairs[c].vector.begin(), 0.0);
    }
  }

  std::size_t retained = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const double var = sample_variance(out.scores.column(c));
    out.pc_variances.push_back(var);
    if (var >= options.retention_threshold - kRetentionSlack) ++retained;
  }
  out.retention_floor_applied = retained == 0;
  out.retained_m = std::max<std::size_t>(1, retained);

  out.standardized = std::move(std_data.data);
  out.degenerate_columns = std::move(std_data.degenerate_columns);
  return out;
}

NodeDissimilarityMatrix build_ndm(const Matrix& scores, std::size_t retained_m) {
  if (retained_m == 0 || retained_m > scores.cols())
    throw std::invalid_argument("build_ndm: retained_m out of range");
  const std::size_t n = scores.rows();
  NodeDissimilarityMatrix ndm(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto pi = scores.row(i).first(retained_m);
    for (std::size_t j = i + 1; j < n; ++j) {
      ndm.set(i, j, euclidean_distance(pi, scores.row(j).first(retained_m)));
    }
  }
  return ndm;
}

double ndm_average(const NodeDissimilarityMatrix& ndm, AveragingConvention convention) {
  const auto n = static_cast<double>(ndm.dim());
  double total = 0.0;
  double diagonal = 0.0;
  for (std::size_t i = 0; i < ndm.dim(); ++i) {
    for (double x : ndm.row(i)) total += x;
    diagonal += ndm(i, i);
  }
  switch (convention) {
    case AveragingConvention::row_mean: return total / n;
    case AveragingConvention::nondiag_over_n_minus_1: return (total - diagonal) / (n - 1.0);
    case AveragingConvention::entry_mean: return total / (n * (n - 1.0));
  }
  return total / n;
}

namespace {

struct NdmSpectrum {
  NetworkNdi network;
  NodeNdi nodes;
};

NdmSpectrum analyze_ndm(const NodeDissimilarityMatrix& ndm, AveragingConvention convention) {
  if (ndm.dim() < 2) throw std::invalid_argument("NDM needs at least 2 nodes");
  NdmSpectrum out;
  const auto top = power_iteration_top(ndm);
  out.network.average = ndm_average(ndm, convention);
  if (top.degenerate || out.network.average <= 0.0) {
    out.network = {1.0, 0.0, 0.0, true};
    out.nodes = {uniform_vector(ndm.dim()), true};
    return out;
  }
  out.network.eigenvalue = top.pair.value;
  out.network.ndi = top.pair.value / out.network.average;
  out.nodes.values = top.pair.vector;
  for (double& x : out.nodes.values) x = std::max(x, 0.0);  // Perron vector
  return out;
}

}  // namespace

NetworkNdi network_ndi(const NodeDissimilarityMatrix& ndm, AveragingConvention convention) {
  return analyze_ndm(ndm, convention).network;
}

NodeNdi node_ndi(const NodeDissimilarityMatrix& ndm) {
  return analyze_ndm(ndm, AveragingConvention::row_mean).nodes;
}

ElbowPartition elbow_partition(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 3) throw std::invalid_argument("elbow_partition needs at least 3 values");

  ElbowPartition out;
  out.order.resize(n);
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

  const double first = values[out.order.front()];
  const double last = values[out.order.back()];
  if (first - last <= kFlatTolerance) {
    out.degenerate = true;
    out.elbow_index = 0;
    out.similar = out.order;
    return out;
  }

  // Vertical depth below the chord is proportional to perpendicular distance.
  const double slope = (last - first) / static_cast<double>(n - 1);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 1; r + 1 < n; ++r) {
    const double depth = first + slope * static_cast<double>(r) - values[out.order[r]];
    if (depth > best) {
      best = depth;
      out.elbow_index = r;
    }
  }
  out.dissimilar.assign(out.order.begin(), out.order.begin() + out.elbow_index);
  out.similar.assign(out.order.begin() + out.elbow_index, out.order.end());
  return out;
}

namespace {

void finish_report(NdiReport& report) {
  const std::size_t n = report.node_ndi.size();
  report.elbow = elbow_partition(report.node_ndi);
  if (report.elbow.degenerate) report.degeneracy_flags.push_back("flat_node_ndi");
  report.rank.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) report.rank[report.elbow.order[r]] = r;
  for (std::size_t v : report.elbow.dissimilar)
    report.dissimilar_nodes.push_back(report.node_labels[v]);
  for (std::size_t v : report.elbow.similar) report.similar_nodes.push_back(report.node_labels[v]);
}

}  // namespace

NdiReport compute_ndi_from_table(const MetricTable& table, const NdiOptions& options) {
  table.validate();
  const std::size_t n = table.node_count();
  if (n < 3) throw std::invalid_argument("NDI needs at least 3 nodes");
  if (table.metric_count() == 0) throw std::invalid_argument("metric table has no columns");

  NdiReport report;
  report.node_labels = table.node_labels;
  report.metrics = table;
  report.averaging = options.averaging;

  try {
    report.pca = run_pca(table, options);
  } catch (const DegenerateTableError&) {
    for (const auto& name : table.column_names)
      report.degeneracy_flags.push_back("degenerate_column:" + name);
    report.degeneracy_flags.push_back("all_columns_degenerate");
    report.degeneracy_flags.push_back("zero_ndm");
    report.ndm = NodeDissimilarityMatrix(n);
    report.network_ndi = 1.0;
    report.degenerate = true;
    report.node_ndi = uniform_vector(n);
    finish_report(report);
    return report;
  }

  for (std::size_t c : report.pca->degenerate_columns)
    report.degeneracy_flags.push_back("degenerate_column:" + table.column_names[c]);
  if (report.pca->retention_floor_applied) report.degeneracy_flags.push_back("retention_floor");

  report.ndm = build_ndm(report.pca->scores, report.pca->retained_m);
  const auto spectrum = analyze_ndm(report.ndm, options.averaging);
  report.network_ndi = spectrum.network.ndi;
  report.ndm_eigenvalue = spectrum.network.eigenvalue;
  report.ndm_average = spectrum.network.average;
  report.node_ndi = spectrum.nodes.values;
  if (spectrum.network.degenerate) {
    report.degenerate = true;
    report.degeneracy_flags.push_back("zero_ndm");
  }
  finish_report(report);
  return report;
}

NdiReport compute_ndi(const Graph& g, const NdiOptions& options) {
  auto report = compute_ndi_from_table(centrality_table(g), options);
  report.edges = g.edge_count();
  return report;
}

}  // namespace ndi
