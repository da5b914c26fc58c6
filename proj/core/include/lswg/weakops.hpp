#pragma once

#include <vector>

#include <Eigen/Core>

#include "lswg/dofs.hpp"
#include "lswg/mesh.hpp"

namespace lswg {

/// Local degrees of freedom of one cell, ordered as
///   [interior: dim P_k] ++ [trace: k+1 per edge] ++ [normal flux: k per edge],
/// edges in the cell's loop order.
struct LocalDofLayout {
  int cell = -1;
  int k = 1;
  std::vector<int> edges;
  /// +1 when the stored edge normal is the outward normal of this cell.
  std::vector<int> sigma;

  int num_edges() const { return static_cast<int>(edges.size()); }
  int interior_size() const { return poly_dim(k); }
  int trace_offset(int i) const { return interior_size() + i * (k + 1); }
  int flux_offset(int i) const { return interior_size() + num_edges() * (k + 1) + i * k; }
  int size() const { return interior_size() + num_edges() * (2 * k + 1); }

  /// Positions of the local DOFs in the global vector.
  std::vector<int> global_indices(const DofLayout& layout) const;
  Eigen::VectorXd gather(const WgDofVector& v) const;
};

LocalDofLayout local_layout(const PolytopalMesh& mesh, int c, int k);

/// Per-cell matrices of the discrete weak operators with r = k - 1. All map
/// local DOFs to coefficients in the scaled monomial basis of P_{k-1}(T).
struct LocalWeakOperators {
  LocalDofLayout layout;
  /// Weak gradient, rows [x-component block; y-component block].
  Eigen::MatrixXd gradient;
  Eigen::MatrixXd laplacian;
  Eigen::MatrixXd stabilizer;
  /// Gram matrix of P_{k-1}(T).
  Eigen::MatrixXd gram;

  int test_size() const { return static_cast<int>(gram.rows()); }
  auto gradient_x() const { return gradient.topRows(test_size()); }
  auto gradient_y() const { return gradient.bottomRows(test_size()); }

  /// R = -eps L + bx Gx + by Gy.
  Eigen::MatrixXd residual(double eps, const Eigen::Vector2d& b) const;
  /// R^T M R + S, symmetric to the last bit.
  Eigen::MatrixXd local_matrix(double eps, const Eigen::Vector2d& b) const;
};

LocalWeakOperators build_local_operators(const PolytopalMesh& mesh, int c, int k);

Eigen::MatrixXd weak_gradient_matrix(const PolytopalMesh& mesh, int c, int k);
Eigen::MatrixXd weak_laplacian_matrix(const PolytopalMesh& mesh, int c, int k);
Eigen::MatrixXd stabilizer_matrix(const PolytopalMesh& mesh, int c, int k);
/// Throws InvalidArgument for eps <= 0.
Eigen::MatrixXd residual_operator(const PolytopalMesh& mesh, int c, int k, double eps, const Eigen::Vector2d& b);

}  // namespace lswg
