#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specfc/graph.hpp"

namespace specfc {

/// Maximum matching of a graph; has_perfect iff the matching covers V.
struct MatchingResult {
  bool has_perfect = false;
  std::vector<std::pair<int, int>> matching;
};

/// A maximum matching computed by an augmenting-path search with blossom
/// contraction (general graphs, O(V^3)).
MatchingResult max_matching(const Graph& g);

enum class WitnessKind {
  none,     // verdict true
  parity,   // k and n differ in parity; no witness carried
  matching, // k-subset whose removal leaves no perfect matching
  tutte,    // set S with odd_components(g - S) > |S| - k
};

/// Verdict of a k-factor-criticality test, with a checkable witness on
/// failure (except the parity marker).
struct CriticalityCertificate {
  bool verdict = false;
  int k = 0;
  WitnessKind witness_kind = WitnessKind::none;
  VertexSet witness;
};

std::string to_text(const CriticalityCertificate& c);

/// Decides k-factor-criticality by testing every k-subset S (lexicographic
/// order, early exit) for a perfect matching in g - S. Requires 0 <= k <=
/// order; verdicts are false immediately when k and order differ in parity.
CriticalityCertificate is_kfc_matching(const Graph& g, int k);

/// Largest order accepted by is_kfc_tutte without an explicit max_s.
inline constexpr int kTutteExhaustiveCap = 16;

/// Decides k-factor-criticality by exhaustive search for a set S with
/// k <= |S| <= max_s and odd_components(g - S) > |S| - k, size-major
/// lexicographic order. max_s defaults to order - 2: larger sets cannot
/// violate the condition when the parity gate passes. The witness is the
/// first violating subset in iteration order.
CriticalityCertificate is_kfc_tutte(const Graph& g, int k,
                                    std::optional<int> max_s = std::nullopt);

}  // namespace specfc
