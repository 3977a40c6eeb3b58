#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ndi {

using NodeIndex = std::size_t;
using Edge = std::pair<NodeIndex, NodeIndex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. line() is 1-based, 0 when not line-specific.
class ParseError : public GraphError {
 public:
  ParseError(const std::string& what, std::size_t line) : GraphError(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DisconnectedGraphError : public GraphError {
 public:
  explicit DisconnectedGraphError(std::size_t components)
      : GraphError("graph has " + std::to_string(components) + " components"),
        components_(components) {}
  std::size_t components() const noexcept { return components_; }

 private:
  std::size_t components_;
};

/// Simple undirected graph with string labels mapped to dense indices.
///
/// Immutable after construction. Adjacency lists are sorted and free of
/// self-loops and duplicates.
class Graph {
 public:
  Graph() = default;

  /// Builds from labels and index pairs. Self-loops and duplicate edges are
  /// dropped; out-of-range indices and duplicate labels throw GraphError.
  Graph(std::vector<std::string> labels, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const NodeIndex> neighbors(NodeIndex v) const { return adjacency_.at(v); }
  std::size_t degree(NodeIndex v) const { return adjacency_.at(v).size(); }
  bool has_edge(NodeIndex u, NodeIndex v) const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(NodeIndex v) const { return labels_.at(v); }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<NodeIndex>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct ParseWarnings {
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
};

struct ParsedGraph {
  Graph graph;
  ParseWarnings warnings;
};

/// Parses a whitespace-separated edge list. Blank lines and lines starting
/// with '#' or '%' are skipped; tokens after the second are ignored. Labels
/// get indices in first-seen order.
ParsedGraph parse_edge_list(std::string_view text);

/// Reads and parses a file; unreadable files throw GraphError.
ParsedGraph read_edge_list(const std::filesystem::path& path);

/// One "u v" line per edge, in edges() order.
std::string to_edge_list(const Graph& g);

struct ComponentLabeling {
  std::vector<std::size_t> component_id;
  std::size_t num_components = 0;
  std::vector<NodeIndex> largest_component_nodes;  // ascending
};

ComponentLabeling connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Subgraph induced by `nodes`, relabeled densely in the given order.
Graph induced_subgraph(const Graph& g, std::span<const NodeIndex> nodes);

Graph largest_component(const Graph& g);

/// Throws DisconnectedGraphError unless `g` is connected (and non-empty).
void require_connected(const Graph& g);

/// Hop distances from `source`; unreachable nodes get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, NodeIndex source);

}  // namespace ndi
