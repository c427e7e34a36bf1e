#include "specfc/spectral.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace specfc {

namespace {

void require_spectral_input(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw std::invalid_argument("largest_eigenvalue: matrix must be square and nonempty");
  if (!m.allFinite())
    throw std::invalid_argument("largest_eigenvalue: non-finite entries");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() != 0.0)
    throw std::invalid_argument("largest_eigenvalue: matrix not symmetric");
}

SpectralResult dense_symmetric_solve(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("largest_eigenvalue: dense eigensolver failed");
  const Eigen::Index last = m.rows() - 1;
  SpectralResult out;
  out.value = solver.eigenvalues()(last);
  out.vector = solver.eigenvectors().col(last);
  if (out.vector.sum() < 0.0) out.vector = -out.vector;
  out.residual = (m * out.vector - out.value * out.vector).norm();
  return out;
}

}  // namespace

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    m(u, v) = 1.0;
    m(v, u) = 1.0;
  }
  return m;
}

Eigen::MatrixXd signless_laplacian(const Graph& g) {
  Eigen::MatrixXd m = adjacency_matrix(g);
  for (int v = 0; v < g.order(); ++v) m(v, v) = static_cast<double>(g.degree(v));
  return m;
}

Eigen::MatrixXd alpha_matrix(const Graph& g, int alpha) {
  if (alpha != 0 && alpha != 1)
    throw std::invalid_argument("alpha_matrix: alpha must be 0 or 1");
  return alpha == 0 ? adjacency_matrix(g) : signless_laplacian(g);
}

SpectralResult largest_eigenvalue(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  require_spectral_input(m);
  const Eigen::Index n = m.rows();

  // The dominance argument for the shifted iteration needs lambda_max = rho(M),
  // which holds for nonnegative matrices; anything else goes straight to the
  // direct solve.
  if (m.minCoeff() < 0.0) return dense_symmetric_solve(m);

  const double shift = 1.0 + m.diagonal().maxCoeff();
  const double residual_bound = kResidualPerDim * static_cast<double>(n);
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double prev = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < kPowerIterationCap; ++iter) {
    const Eigen::VectorXd y = m * x + shift * x;
    const double estimate = x.dot(y);  // Rayleigh quotient of the shifted matrix
    const double residual = (y - estimate * x).norm();
    if (std::abs(estimate - prev) <= kEigenTolerance && residual <= residual_bound) {
      SpectralResult out;
      out.value = estimate - shift;
      out.vector = x;
      out.residual = (m * x - out.value * x).norm();
      return out;
    }
    prev = estimate;
    x = y / y.norm();
  }
  return dense_symmetric_solve(m);
}

SpectralResult perron_vector(const Graph& g, int alpha) {
  if (g.order() < 1) throw std::invalid_argument("perron_vector: empty graph");
  if (!is_connected(g))
    throw std::invalid_argument("perron_vector: graph must be connected");
  SpectralResult out = largest_eigenvalue(alpha_matrix(g, alpha));
  if (out.vector.sum() < 0.0) out.vector = -out.vector;
  if (out.vector.minCoeff() <= 0.0)
    throw std::runtime_error("perron_vector: positivity lost (solver failure)");
  return out;
}

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& parts, int alpha) {
  if (alpha != 0 && alpha != 1)
    throw std::invalid_argument("quotient_matrix: alpha must be 0 or 1");
  const int n = g.order();
  const int s = static_cast<int>(parts.size());
  if (s == 0) throw std::invalid_argument("quotient_matrix: empty partition");

  std::vector<int> part_of(n, -1);
  for (int p = 0; p < s; ++p) {
    if (parts[p].empty()) throw std::invalid_argument("quotient_matrix: empty part");
    for (int v : parts[p]) {
      if (v >= n || part_of[v] != -1)
        throw std::invalid_argument("quotient_matrix: parts do not partition V");
      part_of[v] = p;
    }
  }
  for (int v = 0; v < n; ++v)
    if (part_of[v] == -1)
      throw std::invalid_argument("quotient_matrix: parts do not partition V");

  // Block row sums in exact integer arithmetic; the equitable flag never
  // depends on a floating tolerance.
  QuotientMatrix out;
  out.entries = Eigen::MatrixXd::Zero(s, s);
  out.equitable = true;
  std::vector<long long> row_sums(s);
  for (int p = 0; p < s; ++p) {
    std::vector<long long> block_sum(s, 0);
    std::vector<long long> block_first(s, 0);
    bool first_row = true;
    for (int v : parts[p]) {
      std::fill(row_sums.begin(), row_sums.end(), 0LL);
      for (int w : g.neighbors(v)) ++row_sums[part_of[w]];
      if (alpha == 1) row_sums[p] += g.degree(v);
      for (int q = 0; q < s; ++q) {
        block_sum[q] += row_sums[q];
        if (first_row)
          block_first[q] = row_sums[q];
        else if (block_first[q] != row_sums[q])
          out.equitable = false;
      }
      first_row = false;
    }
    const double size = parts[p].size();
    for (int q = 0; q < s; ++q) out.entries(p, q) = block_sum[q] / size;
  }
  return out;
}

double largest_real_eigenvalue(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw std::invalid_argument("largest_real_eigenvalue: matrix must be square and nonempty");
  if (!m.allFinite())
    throw std::invalid_argument("largest_real_eigenvalue: non-finite entries");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("largest_real_eigenvalue: eigensolver failed");
  bool found = false;
  double best = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const std::complex<double> ev = solver.eigenvalues()(i);
    if (std::abs(ev.imag()) > 1e-8 * std::max(1.0, std::abs(ev))) continue;
    if (!found || ev.real() > best) {
      best = ev.real();
      found = true;
    }
  }
  if (!found) throw std::runtime_error("largest_real_eigenvalue: no real eigenvalue");
  return best;
}

}  // namespace specfc
