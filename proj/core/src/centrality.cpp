#include "ndi/centrality.hpp"

#include <cmath>
#include <queue>
#include <stack>

namespace ndi {

void MetricTable::validate() const {
  if (column_names.size() != values.cols())
    throw std::invalid_argument("metric table: column name count does not match matrix");
  if (node_labels.size() != values.rows())
    throw std::invalid_argument("metric table: node label count does not match matrix");
  for (double x : values.data()) {
    if (!std::isfinite(x)) throw std::invalid_argument("metric table: non-finite entry");
  }
}

std::vector<double> degree_centrality(const Graph& g) {
  std::vector<double> out(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) out[v] = static_cast<double>(g.degree(v));
  return out;
}

std::vector<double> eigenvector_centrality(const Graph& g) {
  require_connected(g);
  auto apply = [&g](std::span<const double> x, std::span<double> y) {
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      double s = 0.0;
      for (NodeIndex w : g.neighbors(v)) s += x[w];
      y[v] = s;
    }
  };
  auto result = power_iteration_top(g.node_count(), apply);
  for (double& x : result.pair.vector) x = std::max(x, 0.0);  // Perron vector of a connected graph
  return std::move(result.pair.vector);
}

std::vector<double> betweenness_centrality(const Graph& g) {
  require_connected(g);
  const std::size_t n = g.node_count();
  std::vector<double> bc(n, 0.0);

  std::vector<std::vector<NodeIndex>> preds(n);
  std::vector<double> sigma(n);
  std::vector<long> dist(n);
  std::vector<double> delta(n);
  std::vector<NodeIndex> order;
  order.reserve(n);

  for (NodeIndex s = 0; s < n; ++s) {
    for (auto& p : preds) p.clear();
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1L);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();

    sigma[s] = 1.0;
    dist[s] = 0;
    std::queue<NodeIndex> q;
    q.push(s);
    while (!q.empty()) {
      const NodeIndex v = q.front();
      q.pop();
      order.push_back(v);
      for (NodeIndex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeIndex w = *it;
      for (NodeIndex v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }
  // Each unordered pair was accumulated once from either endpoint.
  for (double& x : bc) x /= 2.0;
  return bc;
}

std::vector<double> closeness_centrality(const Graph& g) {
  require_connected(g);
  const std::size_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  if (n == 1) return out;
  for (NodeIndex v = 0; v < n; ++v) {
    std::size_t total = 0;
    for (std::size_t d : bfs_distances(g, v)) total += d;
    out[v] = 1.0 / static_cast<double>(total);
  }
  return out;
}

MetricTable centrality_table(const Graph& g) {
  require_connected(g);
  const std::size_t n = g.node_count();
  const std::vector<std::vector<double>> cols = {
      degree_centrality(g), eigenvector_centrality(g), betweenness_centrality(g),
      closeness_centrality(g)};

  MetricTable t{kCentralityColumns, g.labels(), Matrix(n, cols.size())};
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) t.values(r, c) = cols[c][r];
  return t;
}

}  // namespace ndi
