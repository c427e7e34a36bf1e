#pragma once

#include <Eigen/Dense>
#include <vector>

#include "specfc/graph.hpp"

namespace specfc {

/// Largest eigenvalue of a symmetric matrix with its unit eigenvector and the
/// explicitly computed residual ||Mx - lambda x||.
struct SpectralResult {
  double value = 0.0;
  Eigen::VectorXd vector;
  double residual = 0.0;
};

/// Quotient of a matrix with respect to a vertex partition. Entries are the
/// average block row sums; `equitable` is decided in exact integer arithmetic.
struct QuotientMatrix {
  Eigen::MatrixXd entries;
  bool equitable = false;
};

inline constexpr double kEigenTolerance = 1e-12;     // successive-estimate stop
inline constexpr double kResidualPerDim = 1e-9;      // residual contract per dimension
inline constexpr int kPowerIterationCap = 100000;    // then fall back to a direct solve

/// 0/1 adjacency matrix, zero diagonal.
Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// D(g) + A(g); the diagonal carries the degree sequence.
Eigen::MatrixXd signless_laplacian(const Graph& g);

/// alpha*D(g) + A(g) for alpha in {0, 1}: the adjacency or signless Laplacian.
Eigen::MatrixXd alpha_matrix(const Graph& g, int alpha);

/// Largest eigenvalue of a symmetric matrix with finite entries.
///
/// Nonnegative matrices go through shifted power iteration on M + cI with
/// c = 1 + max diagonal entry (the shift makes the top eigenvalue strictly
/// dominant in magnitude and suppresses bipartite oscillation), deterministic
/// all-ones start. A result is accepted only once successive estimates agree
/// within kEigenTolerance and the residual meets the per-dimension contract;
/// otherwise, and for matrices with negative entries, a full symmetric
/// eigendecomposition is used.
SpectralResult largest_eigenvalue(const Eigen::Ref<const Eigen::MatrixXd>& m);

/// Unit positive eigenvector at the largest eigenvalue of alpha*D + A.
/// Requires g connected (positivity fails otherwise).
SpectralResult perron_vector(const Graph& g, int alpha);

/// Quotient of alpha*D(g) + A(g) with respect to `parts`, which must
/// partition V(g) into nonempty classes.
QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& parts, int alpha);

/// Largest real eigenvalue of a general square matrix (quotient matrices are
/// not symmetric). Eigenvalues with nonnegligible imaginary part are ignored.
double largest_real_eigenvalue(const Eigen::Ref<const Eigen::MatrixXd>& m);

}  // namespace specfc
