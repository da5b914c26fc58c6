#include "lswg/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "lswg/errors.hpp"
#include "lswg/quadrature.hpp"

namespace lswg {

Coefficients::Coefficients(std::vector<double> eps, std::vector<Eigen::Vector2d> b)
    : eps_(std::move(eps)), b_(std::move(b)) {
  if (eps_.size() != b_.size()) throw InvalidArgument("per-cell eps and b must have the same length");
}

Coefficients Coefficients::with_epsilon(double eps) const {
  Coefficients c = *this;
  c.uniform_eps_ = eps;
  if (!c.eps_.empty()) c.eps_.assign(c.eps_.size(), eps);
  return c;
}

WgSpace::WgSpace(const PolytopalMesh& mesh, int k)
    : mesh_(&mesh), layout_(mesh.num_cells(), mesh.num_edges(), k) {
  if (k < 1) throw InvalidArgument("weak Galerkin degree k must be >= 1");
  ops_.reserve(mesh.num_cells());
  indices_.reserve(mesh.num_cells());
  for (int c = 0; c < mesh.num_cells(); ++c) {
    ops_.push_back(build_local_operators(mesh, c, k));
    indices_.push_back(ops_.back().layout.global_indices(layout_));
  }
}

Eigen::VectorXd WgSpace::gather(int c, const Eigen::VectorXd& global) const {
  const auto& idx = indices_[c];
  Eigen::VectorXd out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = global[idx[i]];
  return out;
}

GlobalDofMap::GlobalDofMap(const PolytopalMesh& mesh, int k) : layout_(mesh.num_cells(), mesh.num_edges(), k) {
  if (k < 1) throw InvalidArgument("weak Galerkin degree k must be >= 1");
  std::vector<char> constrained(layout_.size(), 0);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (mesh.edge(e).tag != BoundaryTag::Gamma1) continue;
    for (int t = 0; t < layout_.trace_size(); ++t) constrained[layout_.trace_offset(e) + t] = 1;
    for (int t = 0; t < layout_.flux_size(); ++t) constrained[layout_.flux_offset(e) + t] = 1;
  }
  free_index_.assign(layout_.size(), -1);
  for (int i = 0; i < layout_.size(); ++i)
    if (!constrained[i]) {
      free_index_[i] = static_cast<int>(free_dofs_.size());
      free_dofs_.push_back(i);
    }
}

GlobalDofMap build_dof_map(const PolytopalMesh& mesh, int k) { return GlobalDofMap(mesh, k); }

Eigen::VectorXd interpolate_cauchy_data(const CauchyData& data, const PolytopalMesh& mesh, const GlobalDofMap& dofs,
                                        int quad_degree) {
  const DofLayout& lay = dofs.layout();
  const int k = lay.degree();
  Eigen::VectorXd values = Eigen::VectorXd::Zero(lay.size());
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const Edge& edge = mesh.edge(e);
    if (edge.tag != BoundaryTag::Gamma1) continue;
    const Point& a = mesh.vertices()[edge.vertices[0]];
    const Point& b = mesh.vertices()[edge.vertices[1]];
    const Point n = edge.normal;  // outward on the boundary
    values.segment(lay.trace_offset(e), lay.trace_size()) = project_edge(data.g1, k, a, b, quad_degree).coefficients;
    values.segment(lay.flux_offset(e), lay.flux_size()) =
        project_edge([&](const Point& x) { return data.g2(x, n); }, k - 1, a, b, quad_degree).coefficients;
  }
  return values;
}

Eigen::VectorXd SparseSpdSystem::expand(const Eigen::VectorXd& free_values) const {
  Eigen::VectorXd full = constrained_values;
  const auto& free = dofs.free_dofs();
  for (std::size_t i = 0; i < free.size(); ++i) full[free[i]] = free_values[i];
  return full;
}

Eigen::VectorXd SparseSpdSystem::restrict_to_free(const Eigen::VectorXd& full) const {
  const auto& free = dofs.free_dofs();
  Eigen::VectorXd out(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) out[i] = full[free[i]];
  return out;
}

Eigen::VectorXd load_moments(const PolytopalMesh& mesh, int c, int k, const ScalarField& f, int quad_degree) {
  const CellBasis test = cell_basis(mesh, c, k - 1);
  const QuadRule rule = cell_rule(mesh.cell_polygon(c), quad_degree < 0 ? 2 * k + 4 : quad_degree);
  Eigen::VectorXd m = Eigen::VectorXd::Zero(test.size());
  for (std::size_t q = 0; q < rule.size(); ++q) m += rule.weights[q] * f(rule.points[q]) * test.values(rule.points[q]);
  return m;
}

SparseSpdSystem assemble(const WgSpace& space, const Coefficients& coeffs, const ScalarField& f,
                         const Eigen::VectorXd& constrained_values, const AssemblyOptions& options) {
  const PolytopalMesh& mesh = space.mesh();
  const int k = space.degree();
  SparseSpdSystem sys;
  sys.dofs = GlobalDofMap(mesh, k);
  if (constrained_values.size() != sys.dofs.size())
    throw InvalidArgument("constrained value vector has length " + std::to_string(constrained_values.size()) +
                          ", expected " + std::to_string(sys.dofs.size()));
  if (sys.dofs.num_free() == 0) throw InvalidArgument("every degree of freedom is constrained; nothing to solve");
  sys.constrained_values = constrained_values;
  for (int i = 0; i < sys.dofs.size(); ++i)
    if (!sys.dofs.is_constrained(i)) sys.constrained_values[i] = 0.0;

  const int nfree = sys.dofs.num_free();
  sys.rhs = Eigen::VectorXd::Zero(nfree);
  std::vector<Eigen::Triplet<double>> triplets;
  std::size_t est = 0;
  for (int c = 0; c < mesh.num_cells(); ++c) est += space.global_indices(c).size() * space.global_indices(c).size();
  triplets.reserve(est);

  for (int c = 0; c < mesh.num_cells(); ++c) {
    const double eps = coeffs.epsilon(c);
    if (!(eps > 0.0)) throw InvalidArgument("diffusion coefficient must be positive on cell " + std::to_string(c));
    const LocalWeakOperators& ops = space.local(c);
    const Eigen::MatrixXd r = ops.residual(eps, coeffs.convection(c));
    const Eigen::MatrixXd a = ops.local_matrix(eps, coeffs.convection(c));
    const Eigen::VectorXd load = r.transpose() * load_moments(mesh, c, k, f, options.load_quadrature_degree);
    const auto& idx = space.global_indices(c);
    const int n = static_cast<int>(idx.size());
    for (int i = 0; i < n; ++i) {
      const int fi = sys.dofs.free_index(idx[i]);
      if (fi < 0) continue;
      sys.rhs[fi] += load[i];
      for (int j = 0; j < n; ++j) {
        const int fj = sys.dofs.free_index(idx[j]);
        if (fj >= 0)
          triplets.emplace_back(fi, fj, a(i, j));
        else
          sys.rhs[fi] -= a(i, j) * sys.constrained_values[idx[j]];
      }
    }
  }
  sys.matrix.resize(nfree, nfree);
  sys.matrix.setFromTriplets(triplets.begin(), triplets.end());
  sys.matrix.makeCompressed();
  return sys;
}

double stabilizer_form(const WgSpace& space, const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  double s = 0.0;
  for (int c = 0; c < space.mesh().num_cells(); ++c)
    s += space.gather(c, u).dot(space.local(c).stabilizer * space.gather(c, v));
  return s;
}

double bilinear_form(const WgSpace& space, const Coefficients& coeffs, const Eigen::VectorXd& u,
                     const Eigen::VectorXd& v) {
  double s = 0.0;
  for (int c = 0; c < space.mesh().num_cells(); ++c) {
    const LocalWeakOperators& ops = space.local(c);
    const Eigen::VectorXd uc = space.gather(c, u);
    const Eigen::VectorXd vc = space.gather(c, v);
    const Eigen::MatrixXd r = ops.residual(coeffs.epsilon(c), coeffs.convection(c));
    s += (r * uc).dot(ops.gram * (r * vc)) + uc.dot(ops.stabilizer * vc);
  }
  return s;
}

double energy_norm(const WgSpace& space, const Coefficients& coeffs, const Eigen::VectorXd& v, double eps_norm) {
  return std::sqrt(std::max(0.0, bilinear_form(space, coeffs.with_epsilon(eps_norm), v, v)));
}

double least_squares_functional(const WgSpace& space, const Coefficients& coeffs, const ScalarField& f,
                                const Eigen::VectorXd& v, int quad_degree) {
  const int k = space.degree();
  double s = 0.0;
  for (int c = 0; c < space.mesh().num_cells(); ++c) {
    const LocalWeakOperators& ops = space.local(c);
    const Eigen::VectorXd vc = space.gather(c, v);
    const Eigen::VectorXd qf = cholesky_solve(ops.gram, load_moments(space.mesh(), c, k, f, quad_degree));
    const Eigen::VectorXd res = ops.residual(coeffs.epsilon(c), coeffs.convection(c)) * vc - qf;
    s += res.dot(ops.gram * res) + vc.dot(ops.stabilizer * vc);
  }
  return s;
}

void write_matrix_coo(const SparseMatrix& a, std::ostream& out) {
  out << a.rows() << ' ' << a.nonZeros() << '\n';
  char buf[64];
  for (int i = 0; i < a.outerSize(); ++i)
    for (SparseMatrix::InnerIterator it(a, i); it; ++it) {
      std::snprintf(buf, sizeof buf, "%.17g", it.value());
      out << it.row() << ' ' << it.col() << ' ' << buf << '\n';
    }
}

}  // namespace lswg
