#include "specfc/criticality.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace specfc {

namespace {

// Maximum cardinality matching in a general graph: breadth-first search for
// augmenting paths from each free vertex, contracting odd cycles (blossoms)
// onto their base vertex as they are found.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(g.order()),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        queued_(n_, false),
        in_blossom_(n_, false) {}

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v)
      if (match_[v] < 0) {
        const int leaf = find_augmenting_path(v);
        if (leaf >= 0) augment(leaf);
      }
    return match_;
  }

 private:
  int find_augmenting_path(int root) {
    std::fill(queued_.begin(), queued_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    std::queue<int> bfs;
    bfs.push(root);
    queued_[root] = true;
    while (!bfs.empty()) {
      const int v = bfs.front();
      bfs.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          // Edge between two even-level vertices closes an odd cycle.
          contract_blossom(v, to, bfs);
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          const int mate = match_[to];
          if (mate < 0) return to;  // free vertex: augmenting path found
          queued_[mate] = true;
          bfs.push(mate);
        }
      }
    }
    return -1;
  }

  void contract_blossom(int v, int w, std::queue<int>& bfs) {
    const int anchor = lowest_common_base(v, w);
    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
    mark_path(v, anchor, w);
    mark_path(w, anchor, v);
    for (int i = 0; i < n_; ++i)
      if (in_blossom_[base_[i]]) {
        base_[i] = anchor;
        if (!queued_[i]) {
          queued_[i] = true;
          bfs.push(i);
        }
      }
  }

  // Walks alternate edges from v up to the blossom base, recording parents so
  // the eventual augmentation can traverse the contracted cycle.
  void mark_path(int v, int anchor, int child) {
    while (base_[v] != anchor) {
      const int mate = match_[v];
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate]] = true;
      parent_[v] = child;
      child = mate;
      v = parent_[mate];
    }
  }

  int lowest_common_base(int a, int b) {
    std::vector<bool> seen(n_, false);
    int v = a;
    for (;;) {
      v = base_[v];
      seen[v] = true;
      const int mate = match_[v];
      if (mate < 0) break;
      v = parent_[mate];
    }
    v = b;
    for (;;) {
      v = base_[v];
      if (seen[v]) return v;
      v = parent_[match_[v]];
    }
  }

  void augment(int leaf) {
    int v = leaf;
    while (v >= 0) {
      const int pv = parent_[v];
      const int next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> queued_;
  std::vector<bool> in_blossom_;
};

// Sorted k-subsets of 0..n-1 in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int k) {
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

// Odd component count of g with the vertices flagged in `removed` deleted,
// without materializing the subgraph.
int odd_components_without(const Graph& g, const std::vector<bool>& removed,
                           std::vector<int>& stack, std::vector<bool>& seen) {
  std::fill(seen.begin(), seen.end(), false);
  int odd = 0;
  for (int root = 0; root < g.order(); ++root) {
    if (removed[root] || seen[root]) continue;
    int size = 0;
    stack.clear();
    stack.push_back(root);
    seen[root] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++size;
      for (int w : g.neighbors(v))
        if (!removed[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    odd += size % 2;
  }
  return odd;
}

void require_k(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("criticality: k must be nonnegative");
  if (k > g.order()) throw std::invalid_argument("criticality: k exceeds graph order");
}

}  // namespace

MatchingResult max_matching(const Graph& g) {
  MatchingResult out;
  const std::vector<int> match = BlossomMatcher(g).run();
  for (int v = 0; v < g.order(); ++v)
    if (match[v] > v) out.matching.emplace_back(v, match[v]);
  out.has_perfect = 2 * static_cast<int>(out.matching.size()) == g.order();
  return out;
}

std::string to_text(const CriticalityCertificate& c) {
  std::string out = "verdict=";
  out += c.verdict ? "true" : "false";
  out += " k=" + std::to_string(c.k);
  switch (c.witness_kind) {
    case WitnessKind::none:
      break;
    case WitnessKind::parity:
      out += " witness_kind=parity";
      break;
    case WitnessKind::matching:
      out += " witness_kind=matching witness=" + to_string(c.witness);
      break;
    case WitnessKind::tutte:
      out += " witness_kind=tutte witness=" + to_string(c.witness);
      break;
  }
  return out;
}

CriticalityCertificate is_kfc_matching(const Graph& g, int k) {
  require_k(g, k);
  const int n = g.order();
  if ((n - k) % 2 != 0) return {false, k, WitnessKind::parity, VertexSet{}};

  std::vector<int> subset = first_combination(k);
  do {
    const VertexSet s(subset);
    if (!max_matching(remove_vertices(g, s)).has_perfect)
      return {false, k, WitnessKind::matching, s};
  } while (next_combination(subset, n));
  return {true, k, WitnessKind::none, VertexSet{}};
}

CriticalityCertificate is_kfc_tutte(const Graph& g, int k, std::optional<int> max_s) {
  require_k(g, k);
  const int n = g.order();

  if ((n - k) % 2 != 0) {
    // g minus any k-subset has odd order, hence an odd component; the first
    // k-subset is already a witness.
    return {false, k, WitnessKind::tutte, VertexSet(first_combination(k))};
  }

  if (!max_s && n > kTutteExhaustiveCap)
    throw std::invalid_argument(
        "is_kfc_tutte: order above the exhaustive-search cap; pass max_s");
  // Sets of size n-1 or n never violate once parity holds: o(g - S) <= 1 and
  // |S| - k >= 1 there (k <= n - 2 is forced by a nonempty size range).
  const int cap = std::min(max_s.value_or(n - 2), n - 2);

  std::vector<bool> removed(n, false);
  std::vector<bool> seen(n, false);
  std::vector<int> stack;
  for (int size = k; size <= cap; ++size) {
    std::vector<int> subset = first_combination(size);
    do {
      std::fill(removed.begin(), removed.end(), false);
      for (int v : subset) removed[v] = true;
      if (odd_components_without(g, removed, stack, seen) > size - k)
        return {false, k, WitnessKind::tutte, VertexSet(subset)};
    } while (next_combination(subset, n));
  }
  return {true, k, WitnessKind::none, VertexSet{}};
}

}  // namespace specfc
