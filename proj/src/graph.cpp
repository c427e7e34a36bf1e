#include "specfc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace specfc {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (!members_.empty() && members_.front() < 0)
    throw std::invalid_argument("VertexSet: negative vertex index");
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("VertexSet: duplicate vertex index");
}

VertexSet VertexSet::range(int first, int last) {
  if (first < 0 || last < first) throw std::invalid_argument("VertexSet::range: bad bounds");
  std::vector<int> v(last - first);
  std::iota(v.begin(), v.end(), first);
  return VertexSet(std::move(v));
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.members()[i]);
  }
  out += "}";
  return out;
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edge_list) : order_(order) {
  if (order < 0) throw std::invalid_argument("Graph: negative order");
  adj_.assign(order, std::vector<bool>(order, false));
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw std::out_of_range("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    adj_[u][v] = true;
    adj_[v][u] = true;
  }
  neighbors_.assign(order, {});
  for (int u = 0; u < order; ++u)
    for (int v = 0; v < order; ++v)
      if (adj_[u][v]) neighbors_[u].push_back(v);
  for (int u = 0; u < order; ++u)
    for (int v : neighbors_[u])
      if (u < v) edges_.emplace_back(u, v);
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: order must be at least 1");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges();
  const int offset = a.order();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph(a.order() + b.order(), edges);
}

Graph join(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges();
  const int offset = a.order();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) edges.emplace_back(u, v + offset);
  return Graph(a.order() + b.order(), edges);
}

Graph copies(int count, const Graph& g) {
  if (count < 1) throw std::invalid_argument("copies: count must be at least 1");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(count * g.edges().size());
  for (int c = 0; c < count; ++c) {
    const int offset = c * g.order();
    for (auto [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
  }
  return Graph(count * g.order(), edges);
}

Graph remove_vertices(const Graph& g, const VertexSet& drop) {
  if (!drop.empty() && drop.members().back() >= g.order())
    throw std::out_of_range("remove_vertices: vertex out of range");
  std::vector<int> relabel(g.order(), -1);
  int next = 0;
  for (int v = 0; v < g.order(); ++v)
    if (!drop.contains(v)) relabel[v] = next++;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (relabel[u] >= 0 && relabel[v] >= 0) edges.emplace_back(relabel[u], relabel[v]);
  return Graph(next, edges);
}

Graph add_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw std::out_of_range("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  if (g.has_edge(u, v)) throw std::invalid_argument("add_edge: edge already present");
  std::vector<std::pair<int, int>> edges = g.edges();
  edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

Graph rotate_edges(const Graph& g, int from, int to, const VertexSet& moved) {
  if (from < 0 || to < 0 || from >= g.order() || to >= g.order() || from == to)
    throw std::invalid_argument("rotate_edges: bad endpoints");
  if (moved.empty()) throw std::invalid_argument("rotate_edges: empty move set");
  for (int w : moved) {
    if (w >= g.order()) throw std::out_of_range("rotate_edges: vertex out of range");
    if (w == to || !g.has_edge(from, w) || g.has_edge(to, w))
      throw std::invalid_argument("rotate_edges: move set must be within N(from) \\ (N(to) u {to})");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) {
    const bool moves = (u == from && moved.contains(v)) || (v == from && moved.contains(u));
    if (!moves) edges.emplace_back(u, v);
  }
  for (int w : moved) edges.emplace_back(to, w);
  return Graph(g.order(), edges);
}

int min_degree(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("min_degree: empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.order(), false);
  std::vector<int> stack;
  for (int root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<int> comp;
    stack.push_back(root);
    seen[root] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    out.emplace_back(VertexSet(std::move(comp)));
  }
  return out;
}

int component_count(const Graph& g) {
  return static_cast<int>(components(g).size());
}

int odd_components(const Graph& g) {
  int odd = 0;
  for (const VertexSet& c : components(g))
    if (c.size() % 2 == 1) ++odd;
  return odd;
}

bool is_connected(const Graph& g) {
  return component_count(g) <= 1;
}

}  // namespace specfc
