#include "lswg/polyspace.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>
#include <cmath>
#include <string>

#include "lswg/errors.hpp"

namespace lswg {

namespace {

// pw[i] = t^i for i = 0..n.
void powers(double t, int n, double* pw) {
  pw[0] = 1.0;
  for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * t;
}

constexpr int kMaxDegree = 32;

}  // namespace

CellBasis::CellBasis(int degree, const Point& center, double scale)
    : degree_(degree), center_(center), scale_(scale) {
  if (degree < 0 || degree > kMaxDegree) throw InvalidArgument("cell basis degree out of range");
  if (!(scale > 0.0)) throw InvalidArgument("cell basis scale must be positive");
  for (int d = 0; d <= degree; ++d)
    for (int a = d; a >= 0; --a) exponents_.emplace_back(a, d - a);
}

Eigen::VectorXd CellBasis::values(const Point& p) const {
  double px[kMaxDegree + 1], py[kMaxDegree + 1];
  powers((p.x() - center_.x()) / scale_, degree_, px);
  powers((p.y() - center_.y()) / scale_, degree_, py);
  Eigen::VectorXd v(size());
  for (int i = 0; i < size(); ++i) v[i] = px[exponents_[i].first] * py[exponents_[i].second];
  return v;
}

Eigen::Matrix<double, 2, Eigen::Dynamic> CellBasis::gradients(const Point& p) const {
  double px[kMaxDegree + 1], py[kMaxDegree + 1];
  powers((p.x() - center_.x()) / scale_, degree_, px);
  powers((p.y() - center_.y()) / scale_, degree_, py);
  Eigen::Matrix<double, 2, Eigen::Dynamic> g(2, size());
  for (int i = 0; i < size(); ++i) {
    const auto [a, b] = exponents_[i];
    g(0, i) = a > 0 ? a * px[a - 1] * py[b] / scale_ : 0.0;
    g(1, i) = b > 0 ? b * px[a] * py[b - 1] / scale_ : 0.0;
  }
  return g;
}

Eigen::VectorXd CellBasis::laplacians(const Point& p) const {
  double px[kMaxDegree + 1], py[kMaxDegree + 1];
  powers((p.x() - center_.x()) / scale_, degree_, px);
  powers((p.y() - center_.y()) / scale_, degree_, py);
  const double s2 = scale_ * scale_;
  Eigen::VectorXd l(size());
  for (int i = 0; i < size(); ++i) {
    const auto [a, b] = exponents_[i];
    double v = 0.0;
    if (a > 1) v += a * (a - 1) * px[a - 2] * py[b];
    if (b > 1) v += b * (b - 1) * px[a] * py[b - 2];
    l[i] = v / s2;
  }
  return l;
}

Eigen::VectorXd EdgeBasis::values(double s) const {
  Eigen::VectorXd v(size());
  const double t = s - 0.5;
  v[0] = 1.0;
  for (int j = 1; j <= degree_; ++j) v[j] = v[j - 1] * t;
  return v;
}

CellBasis cell_basis(const PolytopalMesh& mesh, int c, int degree) {
  return CellBasis(degree, mesh.cell_centroid(c), mesh.cell_diameter(c));
}

Eigen::MatrixXd mass_matrix(const CellBasis& basis, const QuadRule& rule) {
  if (rule.exactness_degree < 2 * basis.degree())
    throw InvalidArgument("quadrature exactness " + std::to_string(rule.exactness_degree) + " below 2 * degree " +
                          std::to_string(2 * basis.degree()));
  const int n = basis.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const Eigen::VectorXd phi = basis.values(rule.points[q]);
    m.selfadjointView<Eigen::Lower>().rankUpdate(phi, rule.weights[q]);
  }
  return m.selfadjointView<Eigen::Lower>();
}

Eigen::MatrixXd mass_matrix(const EdgeBasis& basis, const QuadRule& rule) {
  if (rule.exactness_degree < 2 * basis.degree())
    throw InvalidArgument("quadrature exactness " + std::to_string(rule.exactness_degree) + " below 2 * degree " +
                          std::to_string(2 * basis.degree()));
  if (rule.params.size() != rule.size()) throw InvalidArgument("edge mass matrix needs an edge rule");
  const int n = basis.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const Eigen::VectorXd chi = basis.values(rule.params[q]);
    m.selfadjointView<Eigen::Lower>().rankUpdate(chi, rule.weights[q]);
  }
  return m.selfadjointView<Eigen::Lower>();
}

Eigen::MatrixXd cholesky_solve(const Eigen::MatrixXd& gram, const Eigen::MatrixXd& rhs) {
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) throw NumericError("Gram matrix is not positive definite (degenerate cell or edge?)");
  return llt.solve(rhs);
}

namespace {

// Least-squares form of the projection: with A = W^(1/2) Phi at the
// quadrature points, A = QR gives the Cholesky factor R of the Gram matrix
// A^T A without forming it, so the coefficients carry cond(R) rather than
// cond(R)^2 rounding.
ProjectionResult solve_projection(Eigen::MatrixXd design, Eigen::VectorXd samples) {
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(design);
  const int n = static_cast<int>(design.cols());
  const auto r = qr.matrixQR().topLeftCorner(n, n).triangularView<Eigen::Upper>();
  const double rmax = qr.matrixQR().diagonal().head(n).cwiseAbs().maxCoeff();
  if (!(qr.matrixQR().diagonal().head(n).cwiseAbs().minCoeff() > 1e-14 * rmax))
    throw NumericError("Gram matrix is not positive definite (degenerate cell or edge?)");
  const Eigen::VectorXd qty = (qr.householderQ().transpose() * samples).head(n);
  ProjectionResult result;
  result.coefficients = r.solve(qty);
  const Eigen::VectorXd rhs = design.transpose() * samples;
  const double scale = rhs.norm();
  result.relative_residual =
      scale > 0.0 ? (design.transpose() * (design * result.coefficients) - rhs).norm() / scale : 0.0;
  return result;
}

}  // namespace

ProjectionResult project_cell(const ScalarField& f, const CellBasis& basis, const QuadRule& rule) {
  if (rule.exactness_degree < 2 * basis.degree())
    throw InvalidArgument("quadrature exactness below 2 * projection degree");
  Eigen::MatrixXd design(rule.size(), basis.size());
  Eigen::VectorXd samples(rule.size());
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double sw = std::sqrt(rule.weights[q]);
    design.row(q) = sw * basis.values(rule.points[q]).transpose();
    samples[q] = sw * f(rule.points[q]);
  }
  return solve_projection(std::move(design), std::move(samples));
}

ProjectionResult project_cell(const ScalarField& f, int k, std::span<const Point> polygon, int quad_degree) {
  if (k < 0) throw InvalidArgument("projection degree must be >= 0");
  const CellBasis basis(k, polygon_centroid(polygon), polygon_diameter(polygon));
  return project_cell(f, basis, cell_rule(polygon, quad_degree < 0 ? 2 * k + 4 : std::max(quad_degree, 2 * k)));
}

ProjectionResult project_edge(const ScalarField& f, int degree, const Point& a, const Point& b, int quad_degree) {
  if (degree < 0) throw InvalidArgument("projection degree must be >= 0");
  const QuadRule rule = edge_rule(a, b, quad_degree < 0 ? 2 * degree + 4 : std::max(quad_degree, 2 * degree));
  const EdgeBasis basis(degree);
  Eigen::MatrixXd design(rule.size(), basis.size());
  Eigen::VectorXd samples(rule.size());
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double sw = std::sqrt(rule.weights[q]);
    design.row(q) = sw * basis.values(rule.params[q]).transpose();
    samples[q] = sw * f(rule.points[q]);
  }
  return solve_projection(std::move(design), std::move(samples));
}

WgDofVector project_exact_solution(const ScalarField& u, const VectorField& grad_u, const PolytopalMesh& mesh, int k,
                                   int quad_degree) {
  if (k < 1) throw InvalidArgument("weak Galerkin degree k must be >= 1");
  WgDofVector v(DofLayout(mesh.num_cells(), mesh.num_edges(), k));
  const int qd = quad_degree < 0 ? 2 * k + 4 : quad_degree;
  for (int c = 0; c < mesh.num_cells(); ++c) {
    const auto poly = mesh.cell_polygon(c);
    v.interior(c) = project_cell(u, cell_basis(mesh, c, k), cell_rule(poly, qd)).coefficients;
  }
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const Edge& edge = mesh.edge(e);
    const Point& a = mesh.vertices()[edge.vertices[0]];
    const Point& b = mesh.vertices()[edge.vertices[1]];
    v.trace(e) = project_edge(u, k, a, b, qd).coefficients;
    const Point n = edge.normal;
    v.flux(e) = project_edge([&](const Point& p) { return grad_u(p).dot(n); }, k - 1, a, b, qd).coefficients;
  }
  return v;
}

}  // namespace lswg
