#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "lswg/dofs.hpp"
#include "lswg/mesh.hpp"
#include "lswg/polyspace.hpp"
#include "lswg/weakops.hpp"

namespace lswg {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Diffusion eps and convection b, constant on each cell.
class Coefficients {
 public:
  Coefficients(double eps, const Eigen::Vector2d& b) : uniform_eps_(eps), uniform_b_(b) {}
  Coefficients(std::vector<double> eps, std::vector<Eigen::Vector2d> b);

  double epsilon(int c) const { return eps_.empty() ? uniform_eps_ : eps_[c]; }
  Eigen::Vector2d convection(int c) const { return b_.empty() ? uniform_b_ : b_[c]; }
  /// Same convection field, diffusion replaced by `eps` everywhere.
  Coefficients with_epsilon(double eps) const;

 private:
  double uniform_eps_ = 1.0;
  Eigen::Vector2d uniform_b_ = Eigen::Vector2d::Zero();
  std::vector<double> eps_;
  std::vector<Eigen::Vector2d> b_;
};

/// Local weak operators for every cell of a mesh plus their global DOF
/// indices. Keeps a reference to the mesh, which must outlive it.
class WgSpace {
 public:
  WgSpace(const PolytopalMesh& mesh, int k);

  const PolytopalMesh& mesh() const { return *mesh_; }
  int degree() const { return layout_.degree(); }
  const DofLayout& layout() const { return layout_; }
  int size() const { return layout_.size(); }
  const LocalWeakOperators& local(int c) const { return ops_[c]; }
  const std::vector<int>& global_indices(int c) const { return indices_[c]; }

  Eigen::VectorXd gather(int c, const Eigen::VectorXd& global) const;

 private:
  const PolytopalMesh* mesh_;
  DofLayout layout_;
  std::vector<LocalWeakOperators> ops_;
  std::vector<std::vector<int>> indices_;
};

/// Global numbering plus the Cauchy-constrained set: every trace and flux
/// DOF of a Gamma1 edge.
class GlobalDofMap {
 public:
  GlobalDofMap() = default;
  GlobalDofMap(const PolytopalMesh& mesh, int k);

  const DofLayout& layout() const { return layout_; }
  int size() const { return layout_.size(); }
  int num_free() const { return static_cast<int>(free_dofs_.size()); }
  int num_constrained() const { return size() - num_free(); }
  bool is_constrained(int i) const { return free_index_[i] < 0; }
  /// Position in the reduced system, -1 for constrained DOFs.
  int free_index(int i) const { return free_index_[i]; }
  const std::vector<int>& free_dofs() const { return free_dofs_; }

 private:
  DofLayout layout_;
  std::vector<int> free_index_;
  std::vector<int> free_dofs_;
};

GlobalDofMap build_dof_map(const PolytopalMesh& mesh, int k);

/// Cauchy data on Gamma1: u = g1 and grad u . n = g2 (n the outward normal).
struct CauchyData {
  ScalarField g1;
  std::function<double(const Point& x, const Point& n)> g2;
};

/// Full-length vector holding Q_b g1 and Q_n g2 on the constrained DOFs, zero elsewhere.
Eigen::VectorXd interpolate_cauchy_data(const CauchyData& data, const PolytopalMesh& mesh, const GlobalDofMap& dofs,
                                        int quad_degree = -1);

/// Reduced SPD system on the free DOFs after symmetric elimination.
struct SparseSpdSystem {
  GlobalDofMap dofs;
  SparseMatrix matrix;
  Eigen::VectorXd rhs;
  /// Full-length vector with the prescribed values on constrained DOFs.
  Eigen::VectorXd constrained_values;

  int num_unknowns() const { return static_cast<int>(rhs.size()); }
  /// Free-DOF solution -> full coefficient vector.
  Eigen::VectorXd expand(const Eigen::VectorXd& free_values) const;
  /// Full coefficient vector -> free entries.
  Eigen::VectorXd restrict_to_free(const Eigen::VectorXd& full) const;
};

struct AssemblyOptions {
  /// Exactness of the cell rule used for (f, w); < 0 selects 2k + 4.
  int load_quadrature_degree = -1;
};

SparseSpdSystem assemble(const WgSpace& space, const Coefficients& coeffs, const ScalarField& f,
                         const Eigen::VectorXd& constrained_values, const AssemblyOptions& options = {});

/// Moments (f, w_j)_T against the P_{k-1}(T) basis.
Eigen::VectorXd load_moments(const PolytopalMesh& mesh, int c, int k, const ScalarField& f, int quad_degree = -1);

/// s(u, v) for full coefficient vectors.
double stabilizer_form(const WgSpace& space, const Eigen::VectorXd& u, const Eigen::VectorXd& v);

/// a(u, v) for full coefficient vectors.
double bilinear_form(const WgSpace& space, const Coefficients& coeffs, const Eigen::VectorXd& u,
                     const Eigen::VectorXd& v);

/// sqrt(a(v, v)) with diffusion replaced by eps_norm (convection kept).
double energy_norm(const WgSpace& space, const Coefficients& coeffs, const Eigen::VectorXd& v, double eps_norm = 1.0);

/// sum_T |R v - Q^{k-1} f|_T^2 + s(v, v): the functional the scheme minimizes
/// over the affine space of admissible coefficient vectors.
double least_squares_functional(const WgSpace& space, const Coefficients& coeffs, const ScalarField& f,
                                const Eigen::VectorXd& v, int quad_degree = -1);

/// Debug dump: header "N nnz", then one "i j value" line per stored entry.
void write_matrix_coo(const SparseMatrix& a, std::ostream& out);

}  // namespace lswg
