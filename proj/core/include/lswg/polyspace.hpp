#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "lswg/dofs.hpp"
#include "lswg/geometry.hpp"
#include "lswg/mesh.hpp"
#include "lswg/quadrature.hpp"

namespace lswg {

using ScalarField = std::function<double(const Point&)>;
using VectorField = std::function<Point(const Point&)>;

/// Scaled monomials ((x - xc)/h)^a ((y - yc)/h)^b, a + b <= degree, in graded
/// lexicographic order: 1, X, Y, X^2, XY, Y^2, ...
class CellBasis {
 public:
  CellBasis(int degree, const Point& center, double scale);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(exponents_.size()); }
  const Point& center() const { return center_; }
  double scale() const { return scale_; }
  const std::vector<std::pair<int, int>>& exponents() const { return exponents_; }

  Eigen::VectorXd values(const Point& p) const;
  /// Row 0: d/dx, row 1: d/dy.
  Eigen::Matrix<double, 2, Eigen::Dynamic> gradients(const Point& p) const;
  Eigen::VectorXd laplacians(const Point& p) const;

  double evaluate(const Eigen::Ref<const Eigen::VectorXd>& coeffs, const Point& p) const {
    return values(p).head(coeffs.size()).dot(coeffs);
  }

 private:
  int degree_;
  Point center_;
  double scale_;
  std::vector<std::pair<int, int>> exponents_;
};

/// Monomials (s - 1/2)^j, j <= degree, in the arclength parameter s in [0, 1]
/// measured from the lower-indexed endpoint of the edge.
class EdgeBasis {
 public:
  explicit EdgeBasis(int degree) : degree_(degree) {}
  int degree() const { return degree_; }
  int size() const { return degree_ + 1; }
  Eigen::VectorXd values(double s) const;
  double evaluate(const Eigen::Ref<const Eigen::VectorXd>& coeffs, double s) const {
    return values(s).head(coeffs.size()).dot(coeffs);
  }

 private:
  int degree_;
};

/// Basis used for cell c of a mesh: centered at the area centroid, scaled by the diameter.
CellBasis cell_basis(const PolytopalMesh& mesh, int c, int degree);

/// M_ij = integral of phi_i phi_j. Throws InvalidArgument if the rule is not
/// exact to 2 * degree.
Eigen::MatrixXd mass_matrix(const CellBasis& basis, const QuadRule& rule);
Eigen::MatrixXd mass_matrix(const EdgeBasis& basis, const QuadRule& rule);

struct ProjectionResult {
  Eigen::VectorXd coefficients;
  double relative_residual = 0.0;
};

/// L2 projection onto span(basis) over the region integrated by `rule`.
ProjectionResult project_cell(const ScalarField& f, const CellBasis& basis, const QuadRule& rule);

/// L2 projection onto P_k of a polygon, in cell_basis-style coordinates.
/// quad_degree < 0 selects 2k + 4.
ProjectionResult project_cell(const ScalarField& f, int k, std::span<const Point> polygon, int quad_degree = -1);

/// L2 projection onto P_degree(e) for the edge from a (s = 0) to b (s = 1).
ProjectionResult project_edge(const ScalarField& f, int degree, const Point& a, const Point& b, int quad_degree = -1);

/// Q_h u = {Q0 u, Q_b u, Q_n (grad u . n_e)} with n_e the stored edge normal.
WgDofVector project_exact_solution(const ScalarField& u, const VectorField& grad_u, const PolytopalMesh& mesh, int k,
                                   int quad_degree = -1);

/// Dense SPD solve; throws NumericError when Cholesky fails.
Eigen::MatrixXd cholesky_solve(const Eigen::MatrixXd& gram, const Eigen::MatrixXd& rhs);

}  // namespace lswg
