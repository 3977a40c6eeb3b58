#include "ndi/nsi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ndi {

UnitDiskEmbedding minmax_normalize(const MetricTable& table) {
  table.validate();
  const std::size_t n = table.node_count();
  const std::size_t k = table.metric_count();
  if (n < 2) throw std::invalid_argument("minmax_normalize needs at least 2 rows");

  UnitDiskEmbedding e{Matrix(n, k), {}};
  for (std::size_t c = 0; c < k; ++c) {
    const auto col = table.values.column(c);
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    const double range = *hi - *lo;
    if (range <= 0.0) {
      e.degenerate_columns.push_back(c);
      continue;
    }
    for (std::size_t r = 0; r < n; ++r) e.coords(r, c) = (col[r] - *lo) / range;
  }
  return e;
}

UnitDiskEmbedding unit_norm_normalize(const MetricTable& table) {
  table.validate();
  const std::size_t n = table.node_count();
  const std::size_t k = table.metric_count();
  if (n < 2) throw std::invalid_argument("unit_norm_normalize needs at least 2 rows");

  UnitDiskEmbedding e{Matrix(n, k), {}};
  for (std::size_t c = 0; c < k; ++c) {
    const auto col = table.values.column(c);
    double ss = 0.0;
    for (double x : col) {
      if (x < 0.0) {
        throw std::invalid_argument("unit-norm normalization needs nonnegative metrics (column " +
                                    table.column_names[c] + ")");
      }
      ss += x * x;
    }
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    if (*hi == *lo) e.degenerate_columns.push_back(c);
    if (ss == 0.0) continue;
    const double norm = std::sqrt(ss);
    for (std::size_t r = 0; r < n; ++r) e.coords(r, c) = col[r] / norm;
  }
  return e;
}

std::string_view to_string(NsiNormalization n) {
  return n == NsiNormalization::unit_norm ? "unit-norm" : "min-max";
}

std::string_view to_string(ThresholdMethod m) {
  return m == ThresholdMethod::mst_bottleneck ? "mst_bottleneck" : "binary_search";
}

std::optional<NsiNormalization> parse_nsi_normalization(std::string_view s) {
  if (s == "unit-norm" || s == "unit_norm") return NsiNormalization::unit_norm;
  if (s == "min-max" || s == "min_max" || s == "minmax") return NsiNormalization::min_max;
  return std::nullopt;
}

std::optional<ThresholdMethod> parse_threshold_method(std::string_view s) {
  if (s == "mst" || s == "mst_bottleneck" || s == "mst-bottleneck")
    return ThresholdMethod::mst_bottleneck;
  if (s == "bsearch" || s == "binary_search" || s == "binary-search")
    return ThresholdMethod::binary_search;
  return std::nullopt;
}

namespace {

double squared_distance(std::span<const double> p, std::span<const double> q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return s;
}

}  // namespace

bool disk_graph_connected(const UnitDiskEmbedding& e, double radius) {
  const std::size_t n = e.coords.rows();
  if (n <= 1) return true;
  const double r2 = radius * radius;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] && squared_distance(e.coords.row(u), e.coords.row(v)) <= r2) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

double min_connectivity_threshold_bsearch(const UnitDiskEmbedding& e, double epsilon) {
  if (e.coords.rows() < 2) throw std::invalid_argument("threshold search needs at least 2 points");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (disk_graph_connected(e, 0.0)) return 0.0;

  double lo = 0.0;
  double hi = std::sqrt(static_cast<double>(e.dimension()));
  while (!disk_graph_connected(e, hi)) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo >= epsilon) {
    const double mid = lo + (hi - lo) / 2.0;
    if (disk_graph_connected(e, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double mst_bottleneck(const UnitDiskEmbedding& e) {
  const std::size_t n = e.coords.rows();
  if (n < 2) throw std::invalid_argument("mst_bottleneck needs at least 2 points");

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> best(n, kInf);
  std::vector<char> in_tree(n, 0);
  best[0] = 0.0;
  double bottleneck = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && (u == n || best[v] < best[u])) u = v;
    }
    in_tree[u] = 1;
    bottleneck = std::max(bottleneck, best[u]);
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v]) best[v] = std::min(best[v], squared_distance(e.coords.row(u), e.coords.row(v)));
    }
  }
  return std::sqrt(bottleneck);
}

NsiResult compute_nsi_from_table(const MetricTable& table, const NsiOptions& options) {
  const auto embedding = options.normalization == NsiNormalization::unit_norm
                             ? unit_norm_normalize(table)
                             : minmax_normalize(table);
  NsiResult out;
  out.method = options.method;
  out.normalization = options.normalization;
  out.degenerate_columns = embedding.degenerate_columns;
  out.min_threshold = options.method == ThresholdMethod::mst_bottleneck
                          ? mst_bottleneck(embedding)
                          : min_connectivity_threshold_bsearch(embedding, options.epsilon);
  const double diameter = std::sqrt(static_cast<double>(embedding.dimension()));
  out.nsi = std::clamp(1.0 - out.min_threshold / diameter, 0.0, 1.0);
  return out;
}

NsiResult compute_nsi(const Graph& g, const NsiOptions& options) {
  return compute_nsi_from_table(centrality_table(g), options);
}

}  // namespace ndi
