#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "lswg/assembly.hpp"
#include "lswg/polyspace.hpp"

namespace lswg {

/// Exact solution with closed-form derivatives, from which the source term
/// and Cauchy data of a test problem are derived.
struct ManufacturedSolution {
  std::string name;
  ScalarField u;
  VectorField gradient;
  ScalarField laplacian;

  /// f = -eps lap u + b . grad u
  ScalarField source(double eps, const Eigen::Vector2d& b) const;
  /// g1 = u, g2 = grad u . n
  CauchyData cauchy_data() const;
};

/// u = -(2x^3 + y + 1)^2
ManufacturedSolution smooth_solution();

/// u = (y^2 - y)(1 + tanh(20x - 10)), an internal layer at x = 1/2.
ManufacturedSolution layer_solution();

/// sum_i c_i x^a_i y^b_i with (a_i, b_i) in graded lexicographic order
/// 1, x, y, x^2, xy, y^2, ... The length must be a triangular number.
ManufacturedSolution polynomial_solution(std::vector<double> coefficients);

}  // namespace lswg
