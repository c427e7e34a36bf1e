#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

namespace specfc {

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts the given indices; rejects negatives and duplicates.
  explicit VertexSet(std::vector<int> members);
  /// The half-open range {first, first+1, ..., last-1}.
  static VertexSet range(int first, int last);

  const std::vector<int>& members() const noexcept { return members_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(int v) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<int> members_;
};

std::string to_string(const VertexSet& s);

/// Simple undirected graph on vertices 0..order-1.
///
/// No self-loops, no multi-edges; immutable after construction, so instances
/// may be shared freely across threads. Adjacency is kept both as packed
/// boolean rows and as sorted neighbor/edge lists.
class Graph {
 public:
  Graph() = default;
  /// Builds a graph with the given order from an edge list. Endpoints must be
  /// in range and distinct; repeated edges collapse to one.
  Graph(int order, const std::vector<std::pair<int, int>>& edge_list);

  int order() const noexcept { return order_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const {
    assert(u >= 0 && u < order_ && v >= 0 && v < order_);
    return adj_[u][v];
  }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
  const std::vector<bool>& adjacency_row(int v) const { return adj_[v]; }
  /// Edges as (u, v) with u < v, lexicographically sorted.
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  bool operator==(const Graph& other) const noexcept {
    return order_ == other.order_ && edges_ == other.edges_;
  }

 private:
  int order_ = 0;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::pair<int, int>> edges_;
};

/// Complete graph on n >= 1 vertices.
Graph complete(int n);

/// Disjoint union; vertices of b are relabeled by offset a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Join: disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& a, const Graph& b);

/// count >= 1 vertex-disjoint copies of g.
Graph copies(int count, const Graph& g);

/// Induced subgraph on V(g) \ drop, relabeled contiguously in order.
Graph remove_vertices(const Graph& g, const VertexSet& drop);

/// g plus the edge uv; u, v must be distinct and non-adjacent.
Graph add_edge(const Graph& g, int u, int v);

/// Replaces the edges {from,w} by {to,w} for every w in moved. Each w must be
/// adjacent to `from`, distinct from and non-adjacent to `to`.
Graph rotate_edges(const Graph& g, int from, int to, const VertexSet& moved);

int min_degree(const Graph& g);

std::vector<VertexSet> components(const Graph& g);
int component_count(const Graph& g);
/// Number of connected components of odd order.
int odd_components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace specfc
