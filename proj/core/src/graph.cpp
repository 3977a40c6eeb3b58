#include "ndi/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ndi {

Graph::Graph(std::vector<std::string> labels, std::span<const Edge> edges)
    : labels_(std::move(labels)), adjacency_(labels_.size()) {
  {
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels_) {
      if (!seen.insert(l).second) throw GraphError("duplicate node label '" + l + "'");
    }
  }
  const std::size_t n = labels_.size();
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw GraphError("edge endpoint out of range");
    if (u == v) continue;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  std::size_t total = 0;
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    total += adj.size();
  }
  edge_count_ = total / 2;
}

bool Graph::has_edge(NodeIndex u, NodeIndex v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeIndex u = 0; u < adjacency_.size(); ++u) {
    for (NodeIndex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

ParsedGraph parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeIndex> index;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;  // packed (min, max) pairs
  ParseWarnings warnings;

  auto intern = [&](std::string&& label) {
    auto [it, inserted] = index.try_emplace(label, labels.size());
    if (inserted) labels.push_back(std::move(label));
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#' || line[first] == '%') continue;

    std::istringstream tokens{std::string(line)};
    std::string a, b;
    tokens >> a >> b;
    if (b.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two node labels", line_no);
    }
    const NodeIndex u = intern(std::move(a));
    const NodeIndex v = intern(std::move(b));
    if (u == v) {
      ++warnings.self_loops;
      continue;
    }
    const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    if (!seen.insert(key).second) {
      ++warnings.duplicate_edges;
      continue;
    }
    edges.emplace_back(u, v);
  }

  if (edges.empty()) throw ParseError("edge list contains no edges", 0);
  return {Graph(std::move(labels), edges), warnings};
}

ParsedGraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  return out;
}

std::vector<std::size_t> bfs_distances(const Graph& g, NodeIndex source) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.node_count(), kUnreached);
  std::queue<NodeIndex> q;
  dist.at(source) = 0;
  q.push(source);
  while (!q.empty()) {
    const NodeIndex u = q.front();
    q.pop();
    for (NodeIndex w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

ComponentLabeling connected_components(const Graph& g) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.node_count();
  ComponentLabeling out;
  out.component_id.assign(n, kUnset);
  std::vector<std::size_t> sizes;

  for (NodeIndex s = 0; s < n; ++s) {
    if (out.component_id[s] != kUnset) continue;
    const std::size_t id = out.num_components++;
    std::size_t size = 0;
    std::queue<NodeIndex> q;
    out.component_id[s] = id;
    q.push(s);
    while (!q.empty()) {
      const NodeIndex u = q.front();
      q.pop();
      ++size;
      for (NodeIndex w : g.neighbors(u)) {
        if (out.component_id[w] == kUnset) {
          out.component_id[w] = id;
          q.push(w);
        }
      }
    }
    sizes.push_back(size);
  }

  // Components are numbered by their smallest node, so the first maximum wins ties.
  if (out.num_components > 0) {
    const auto best = static_cast<std::size_t>(
        std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    for (NodeIndex v = 0; v < n; ++v) {
      if (out.component_id[v] == best) out.largest_component_nodes.push_back(v);
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.node_count() > 0 && connected_components(g).num_components == 1;
}

void require_connected(const Graph& g) {
  if (g.node_count() == 0) throw GraphError("graph has no nodes");
  const auto cc = connected_components(g);
  if (cc.num_components != 1) throw DisconnectedGraphError(cc.num_components);
}

Graph induced_subgraph(const Graph& g, std::span<const NodeIndex> nodes) {
  constexpr auto kAbsent = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> remap(g.node_count(), kAbsent);
  std::vector<std::string> labels;
  labels.reserve(nodes.size());
  for (NodeIndex v : nodes) {
    if (v >= g.node_count()) throw GraphError("induced_subgraph: node index out of range");
    if (remap[v] != kAbsent) throw GraphError("induced_subgraph: repeated node index");
    remap[v] = labels.size();
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (NodeIndex v : nodes) {
    for (NodeIndex w : g.neighbors(v)) {
      if (remap[w] != kAbsent && v < w) edges.emplace_back(remap[v], remap[w]);
    }
  }
  return Graph(std::move(labels), edges);
}

Graph largest_component(const Graph& g) {
  const auto cc = connected_components(g);
  return induced_subgraph(g, cc.largest_component_nodes);
}

}  // namespace ndi
