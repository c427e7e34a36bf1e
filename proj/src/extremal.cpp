#include "specfc/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "specfc/spectral.hpp"

namespace specfc {

namespace {

void require_H_params(const ExtremalParams& p) {
  if (p.k < 0) throw std::invalid_argument("build_H: k must be nonnegative");
  if (p.delta <= p.k) throw std::invalid_argument("build_H: delta must exceed k");
  if (p.n <= 2 * p.delta - p.k + 1)
    throw std::invalid_argument("build_H: n must exceed 2*delta - k + 1");
}

}  // namespace

Graph build_H(const ExtremalParams& p) {
  require_H_params(p);
  return build_Hs(p.n, p.delta, p.k);
}

Graph build_Hs(int n, int s, int k) {
  if (k < 0) throw std::invalid_argument("build_Hs: k must be nonnegative");
  if (s < std::max(1, k)) throw std::invalid_argument("build_Hs: s must be at least max(1, k)");
  if (n < 2 * s - k + 2)
    throw std::invalid_argument("build_Hs: clique part underflows (need n >= 2s - k + 2)");
  const Graph independent = copies(s - k + 1, complete(1));
  const Graph clique = complete(n - 2 * s + k - 1);
  return join(complete(s), disjoint_union(independent, clique));
}

Graph build_Hprime(int n, int delta, int s, int k) {
  if (k < 0) throw std::invalid_argument("build_Hprime: k must be nonnegative");
  if (s < 1 || s < k) throw std::invalid_argument("build_Hprime: need 1 <= s and k <= s");
  if (s >= delta) throw std::invalid_argument("build_Hprime: need s < delta");
  if (n < s + (s - k + 2) * (delta - s + 1))
    throw std::invalid_argument("build_Hprime: n below the family's lower bound");
  const int inner = (s - k + 1) * (delta - s + 1);
  const int rest = n - s - inner;
  if (rest < 1) throw std::invalid_argument("build_Hprime: clique part underflows");
  const Graph small_cliques = copies(s - k + 1, complete(delta - s + 1));
  return join(complete(s), disjoint_union(small_cliques, complete(rest)));
}

std::vector<VertexSet> extremal_partition(const ExtremalParams& p) {
  require_H_params(p);
  return hs_partition(p.n, p.delta, p.k);
}

std::vector<VertexSet> hs_partition(int n, int s, int k) {
  const int indep = s - k + 1;
  return {VertexSet::range(0, s), VertexSet::range(s, s + indep), VertexSet::range(s + indep, n)};
}

std::vector<VertexSet> hprime_partition(int n, int delta, int s, int k) {
  const int inner = (s - k + 1) * (delta - s + 1);
  return {VertexSet::range(0, s), VertexSet::range(s, s + inner), VertexSet::range(s + inner, n)};
}

CubicPoly f_poly(const ExtremalParams& p) {
  const double n = p.n, d = p.delta, k = p.k;
  const double quad = -(n + k - d - 3.0);
  const double linear = -(n + d * d - k * d + k - 2.0);
  const double constant =
      -2.0 * d * d * d + (n + 3.0 * k - 4.0) * d * d + (n + 3.0 * k - n * k - k * k - 2.0) * d;
  return CubicPoly(quad, linear, constant);
}

CubicPoly g_poly(const ExtremalParams& p) {
  const double n = p.n, d = p.delta, k = p.k;
  const double quad = -(3.0 * n - d + 2.0 * k - 6.0);
  const double linear =
      2.0 * n * n + (d + 2.0 * k - 8.0) * n - 4.0 * d * d + 4.0 * (k - 1.0) * d - 4.0 * k + 8.0;
  const double constant = -2.0 * d * d * d + (4.0 * n + 4.0 * k - 10.0) * d * d -
                          (2.0 * n * n + (4.0 * k - 10.0) * n + 2.0 * k * k - 10.0 * k + 12.0) * d;
  return CubicPoly(quad, linear, constant);
}

double largest_real_root(const CubicPoly& c) {
  const double bound =
      1.0 + std::max({std::abs(c.quad()), std::abs(c.linear()), std::abs(c.constant())});

  // Isolate the rightmost root with the critical points of the cubic. With
  // stationary points x1 <= x2, the polynomial increases on [x2, inf); the
  // rightmost root lies in [x2, bound] when c(x2) <= 0 and in [-bound, x1]
  // otherwise (the local maximum value c(x1) is then positive).
  double lo = -bound;
  double hi = bound;
  const double disc = c.quad() * c.quad() - 3.0 * c.linear();
  if (disc > 0.0) {
    const double r = std::sqrt(disc);
    const double x1 = (-c.quad() - r) / 3.0;
    const double x2 = (-c.quad() + r) / 3.0;
    if (c(x2) <= 0.0)
      lo = x2;
    else
      hi = x1;
  }

  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (c(mid) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }

  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 8; ++iter) {
    const double d = c.derivative(x);
    if (d == 0.0) break;
    const double step = c(x) / d;
    const double next = x - step;
    if (next < lo || next > hi) break;
    x = next;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

ThresholdReport thresholds(const ExtremalParams& p, double consistency_tol) {
  require_H_params(p);
  ThresholdReport r;
  r.params = p;

  const Graph h = build_H(p);
  const std::vector<VertexSet> parts = extremal_partition(p);

  r.rho_root = largest_real_root(f_poly(p));
  r.q_root = largest_real_root(g_poly(p));

  const QuotientMatrix bq_rho = quotient_matrix(h, parts, 0);
  const QuotientMatrix bq_q = quotient_matrix(h, parts, 1);
  if (!bq_rho.equitable || !bq_q.equitable)
    throw InternalConsistencyError("thresholds: extremal partition not equitable");
  r.rho_quotient = largest_real_eigenvalue(bq_rho.entries);
  r.q_quotient = largest_real_eigenvalue(bq_q.entries);

  r.rho_dense = largest_eigenvalue(adjacency_matrix(h)).value;
  r.q_dense = largest_eigenvalue(signless_laplacian(h)).value;

  const auto spread = [](double a, double b, double c) {
    return std::max({a, b, c}) - std::min({a, b, c});
  };
  r.max_discrepancy =
      std::max(spread(r.rho_root, r.rho_quotient, r.rho_dense), spread(r.q_root, r.q_quotient, r.q_dense));
  if (!(r.max_discrepancy <= consistency_tol)) {
    std::ostringstream msg;
    msg << "thresholds: routes disagree by " << r.max_discrepancy << " at n=" << p.n
        << " delta=" << p.delta << " k=" << p.k;
    throw InternalConsistencyError(msg.str());
  }
  return r;
}

std::string to_text(const ThresholdReport& r) {
  std::ostringstream out;
  out << std::setprecision(15) << "n=" << r.params.n << " delta=" << r.params.delta
      << " k=" << r.params.k << " rho_root=" << r.rho_root << " rho_quotient=" << r.rho_quotient
      << " rho_dense=" << r.rho_dense << " q_root=" << r.q_root << " q_quotient=" << r.q_quotient
      << " q_dense=" << r.q_dense << " max_discrepancy=" << r.max_discrepancy;
  return out.str();
}

bool recognize_extremal(const Graph& g, const ExtremalParams& p) {
  require_H_params(p);
  if (g.order() != p.n) return false;
  const int n = p.n;
  const int clique_size = n - 2 * p.delta + p.k - 1;
  const int indep_size = p.delta - p.k + 1;

  std::vector<int> dominating;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) dominating.push_back(v);
  if (static_cast<int>(dominating.size()) != p.delta) return false;

  const Graph rest = remove_vertices(g, VertexSet(dominating));

  if (clique_size == 1) {
    // Degenerate split: the clique part is a single vertex of rest-degree 0,
    // indistinguishable from the independent part; any assignment works.
    return rest.edge_count() == 0 && rest.order() == indep_size + 1;
  }

  std::vector<int> clique_part;
  std::vector<int> indep_part;
  for (int v = 0; v < rest.order(); ++v) {
    if (rest.degree(v) == clique_size - 1)
      clique_part.push_back(v);
    else if (rest.degree(v) == 0)
      indep_part.push_back(v);
    else
      return false;
  }
  if (static_cast<int>(clique_part.size()) != clique_size) return false;
  if (static_cast<int>(indep_part.size()) != indep_size) return false;
  for (std::size_t i = 0; i < clique_part.size(); ++i)
    for (std::size_t j = i + 1; j < clique_part.size(); ++j)
      if (!rest.has_edge(clique_part[i], clique_part[j])) return false;
  return true;
}

}  // namespace specfc
