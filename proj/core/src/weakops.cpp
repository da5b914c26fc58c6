#include "lswg/weakops.hpp"

#include <cmath>

#include "lswg/errors.hpp"
#include "lswg/polyspace.hpp"
#include "lswg/quadrature.hpp"

namespace lswg {

std::vector<int> LocalDofLayout::global_indices(const DofLayout& g) const {
  std::vector<int> idx(size());
  for (int i = 0; i < interior_size(); ++i) idx[i] = g.interior_offset(cell) + i;
  for (int i = 0; i < num_edges(); ++i) {
    for (int t = 0; t <= k; ++t) idx[trace_offset(i) + t] = g.trace_offset(edges[i]) + t;
    for (int t = 0; t < k; ++t) idx[flux_offset(i) + t] = g.flux_offset(edges[i]) + t;
  }
  return idx;
}

Eigen::VectorXd LocalDofLayout::gather(const WgDofVector& v) const {
  const auto idx = global_indices(v.layout);
  Eigen::VectorXd out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = v.values[idx[i]];
  return out;
}

LocalDofLayout local_layout(const PolytopalMesh& mesh, int c, int k) {
  if (k < 1) throw InvalidArgument("weak Galerkin degree k must be >= 1");
  LocalDofLayout l;
  l.cell = c;
  l.k = k;
  l.edges = mesh.cell_edges(c);
  for (int i = 0; i < l.num_edges(); ++i) l.sigma.push_back(mesh.outward_sign(c, i));
  return l;
}

Eigen::MatrixXd LocalWeakOperators::residual(double eps, const Eigen::Vector2d& b) const {
  return -eps * laplacian + b.x() * gradient_x() + b.y() * gradient_y();
}

Eigen::MatrixXd LocalWeakOperators::local_matrix(double eps, const Eigen::Vector2d& b) const {
  const Eigen::MatrixXd r = residual(eps, b);
  Eigen::MatrixXd a = r.transpose() * gram * r + stabilizer;
  // Mirror the upper triangle so the scatter sees identical (i,j)/(j,i) values.
  a.triangularView<Eigen::StrictlyLower>() = a.transpose().triangularView<Eigen::StrictlyLower>();
  return a;
}

LocalWeakOperators build_local_operators(const PolytopalMesh& mesh, int c, int k) {
  LocalWeakOperators ops;
  ops.layout = local_layout(mesh, c, k);
  const LocalDofLayout& lay = ops.layout;
  const int nk = lay.interior_size();
  const int nr = poly_dim(k - 1);
  const int nloc = lay.size();
  const double h = mesh.cell_diameter(c);

  const CellBasis basis = cell_basis(mesh, c, k);
  const CellBasis test = cell_basis(mesh, c, k - 1);
  const EdgeBasis trace_basis(k);
  const EdgeBasis flux_basis(k - 1);
  const auto poly = mesh.cell_polygon(c);
  const QuadRule cell_q = cell_rule(poly, 2 * k);

  ops.gram = mass_matrix(test, cell_q);
  Eigen::MatrixXd grad_rhs = Eigen::MatrixXd::Zero(2 * nr, nloc);
  Eigen::MatrixXd lap_rhs = Eigen::MatrixXd::Zero(nr, nloc);
  ops.stabilizer = Eigen::MatrixXd::Zero(nloc, nloc);

  // (v0, div psi) and (v0, lap w) volume terms.
  for (std::size_t q = 0; q < cell_q.size(); ++q) {
    const Point& x = cell_q.points[q];
    const double w = cell_q.weights[q];
    const Eigen::VectorXd phi = basis.values(x);
    const auto dtest = test.gradients(x);
    const Eigen::VectorXd ltest = test.laplacians(x);
    grad_rhs.block(0, 0, nr, nk).noalias() -= w * dtest.row(0).transpose() * phi.transpose();
    grad_rhs.block(nr, 0, nr, nk).noalias() -= w * dtest.row(1).transpose() * phi.transpose();
    lap_rhs.block(0, 0, nr, nk).noalias() += w * ltest * phi.transpose();
  }

  const double inv_h3 = 1.0 / (h * h * h);
  const double inv_h = 1.0 / h;
  for (int i = 0; i < lay.num_edges(); ++i) {
    const Edge& edge = mesh.edge(lay.edges[i]);
    const Point& a = mesh.vertices()[edge.vertices[0]];
    const Point& b = mesh.vertices()[edge.vertices[1]];
    const int sigma = lay.sigma[i];
    const Point n = sigma * edge.normal;  // outward for this cell
    const QuadRule eq = edge_rule(a, b, 2 * k);
    const int to = lay.trace_offset(i);
    const int fo = lay.flux_offset(i);

    for (std::size_t q = 0; q < eq.size(); ++q) {
      const Point& x = eq.points[q];
      const double w = eq.weights[q];
      const Eigen::VectorXd chi = trace_basis.values(eq.params[q]);
      const Eigen::VectorXd eta = flux_basis.values(eq.params[q]);
      const Eigen::VectorXd wt = test.values(x);
      const auto dtest = test.gradients(x);
      const Eigen::VectorXd dtest_n = dtest.transpose() * n;

      // <v_b, psi . n>
      grad_rhs.block(0, to, nr, k + 1).noalias() += (w * n.x()) * wt * chi.transpose();
      grad_rhs.block(nr, to, nr, k + 1).noalias() += (w * n.y()) * wt * chi.transpose();
      // -<v_b, grad w . n> + <v_g . n, w>, with v_g . n = sigma v_n
      lap_rhs.block(0, to, nr, k + 1).noalias() -= w * dtest_n * chi.transpose();
      lap_rhs.block(0, fo, nr, k).noalias() += (w * sigma) * wt * eta.transpose();

      // Stabilizer rows: (v0 - v_b) and (grad v0 . n - sigma v_n) at x.
      Eigen::VectorXd jump = Eigen::VectorXd::Zero(nloc);
      jump.head(nk) = basis.values(x);
      jump.segment(to, k + 1) = -chi;
      Eigen::VectorXd flux = Eigen::VectorXd::Zero(nloc);
      flux.head(nk) = basis.gradients(x).transpose() * n;
      flux.segment(fo, k) = -sigma * eta;
      ops.stabilizer.selfadjointView<Eigen::Lower>().rankUpdate(jump, w * inv_h3);
      ops.stabilizer.selfadjointView<Eigen::Lower>().rankUpdate(flux, w * inv_h);
    }
  }
  ops.stabilizer = ops.stabilizer.selfadjointView<Eigen::Lower>();

  ops.gradient.resize(2 * nr, nloc);
  ops.gradient.topRows(nr) = cholesky_solve(ops.gram, grad_rhs.topRows(nr));
  ops.gradient.bottomRows(nr) = cholesky_solve(ops.gram, grad_rhs.bottomRows(nr));
  ops.laplacian = cholesky_solve(ops.gram, lap_rhs);
  return ops;
}

Eigen::MatrixXd weak_gradient_matrix(const PolytopalMesh& mesh, int c, int k) {
  return build_local_operators(mesh, c, k).gradient;
}

Eigen::MatrixXd weak_laplacian_matrix(const PolytopalMesh& mesh, int c, int k) {
  return build_local_operators(mesh, c, k).laplacian;
}

Eigen::MatrixXd stabilizer_matrix(const PolytopalMesh& mesh, int c, int k) {
  return build_local_operators(mesh, c, k).stabilizer;
}

Eigen::MatrixXd residual_operator(const PolytopalMesh& mesh, int c, int k, double eps, const Eigen::Vector2d& b) {
  if (!(eps > 0.0)) throw InvalidArgument("diffusion coefficient must be positive");
  return build_local_operators(mesh, c, k).residual(eps, b);
}

}  // namespace lswg
