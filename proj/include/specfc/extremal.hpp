#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "specfc/graph.hpp"

namespace specfc {

/// Parameter tuple (n, delta, k) shared by the extremal family and both
/// threshold cubics. Constraints (0 <= k < delta, n > 2*delta - k + 1, parity)
/// are enforced by the operations that need them.
struct ExtremalParams {
  int n = 0;
  int delta = 0;
  int k = 0;

  bool operator==(const ExtremalParams&) const = default;
};

/// Monic cubic x^3 + quad*x^2 + linear*x + constant.
class CubicPoly {
 public:
  CubicPoly(double quad, double linear, double constant)
      : quad_(quad), linear_(linear), constant_(constant) {}

  double quad() const noexcept { return quad_; }
  double linear() const noexcept { return linear_; }
  double constant() const noexcept { return constant_; }

  double operator()(double x) const { return ((x + quad_) * x + linear_) * x + constant_; }
  double derivative(double x) const { return (3.0 * x + 2.0 * quad_) * x + linear_; }

 private:
  double quad_, linear_, constant_;
};

/// Raised when independently computed threshold routes disagree beyond
/// tolerance; signals an implementation bug, not bad input.
class InternalConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// K_delta joined with ((delta-k+1) K_1 union K_{n-2delta+k-1}).
/// Vertices 0..delta-1 are the join clique, then the independent part, then
/// the large clique. Requires delta > k >= 0 and n > 2*delta - k + 1.
Graph build_H(const ExtremalParams& p);

/// K_s joined with ((s-k+1) K_1 union K_{n-2s+k-1}); equals build_H when
/// s = delta. Requires s >= max(1, k) and n >= 2s - k + 2.
Graph build_Hs(int n, int s, int k);

/// K_s joined with ((s-k+1) K_{delta-s+1} union K_{n-s-(s-k+1)(delta-s+1)}).
/// Requires 1 <= s < delta, k <= s, and n >= s + (s-k+2)(delta-s+1).
Graph build_Hprime(int n, int delta, int s, int k);

/// The three-part split (join clique | independent part | large clique) of
/// build_H / build_Hs vertices; always an equitable partition.
std::vector<VertexSet> extremal_partition(const ExtremalParams& p);
std::vector<VertexSet> hs_partition(int n, int s, int k);
/// (join clique | all small inner cliques | large clique) for build_Hprime.
std::vector<VertexSet> hprime_partition(int n, int delta, int s, int k);

/// Characteristic cubic whose largest root is the adjacency spectral radius
/// of build_H(p).
CubicPoly f_poly(const ExtremalParams& p);

/// Characteristic cubic whose largest root is the signless Laplacian spectral
/// radius of build_H(p).
CubicPoly g_poly(const ExtremalParams& p);

/// Maximum real root of a monic cubic to absolute accuracy ~1e-12: Cauchy
/// bound bracket, bisection on the isolated rightmost sign change, Newton
/// polish.
double largest_real_root(const CubicPoly& c);

/// Both spectral thresholds of build_H(p), each computed three independent
/// ways (cubic root, 3x3 quotient eigenvalue, dense eigensolve of the graph).
struct ThresholdReport {
  ExtremalParams params;
  double rho_root = 0.0, rho_quotient = 0.0, rho_dense = 0.0;
  double q_root = 0.0, q_quotient = 0.0, q_dense = 0.0;
  double max_discrepancy = 0.0;
};

/// Computes a ThresholdReport; throws InternalConsistencyError when the
/// maximum pairwise discrepancy exceeds `consistency_tol`.
ThresholdReport thresholds(const ExtremalParams& p, double consistency_tol = 1e-7);

/// One-line structured text record of a threshold report.
std::string to_text(const ThresholdReport& r);

/// Structural test for isomorphism with build_H(p): exactly delta dominating
/// vertices, and the rest splits into an independent set of size delta-k+1
/// plus a clique of size n-2delta+k-1 with no edges between the two.
bool recognize_extremal(const Graph& g, const ExtremalParams& p);

}  // namespace specfc
