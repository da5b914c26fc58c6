#include "lswg/solver.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <cmath>

#include <Eigen/SparseCholesky>

#include "lswg/errors.hpp"

namespace lswg {

std::string_view method_name(SolveMethod m) { return m == SolveMethod::Cg ? "cg" : "direct"; }

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double relative_residual(const SparseMatrix& a, const Eigen::VectorXd& x, const Eigen::VectorXd& f) {
  const double fn = f.norm();
  const double r = (f - a * x).norm();
  return fn > 0.0 ? r / fn : r;
}

}  // namespace

SolveResult cg_solve(const SparseMatrix& a, const Eigen::VectorXd& f, const CgOptions& options) {
  const auto t0 = Clock::now();
  const Eigen::Index n = f.size();
  if (a.rows() != n || a.cols() != n) throw InvalidArgument("matrix and right-hand side sizes differ");
  if (!f.allFinite()) throw InvalidArgument("right-hand side is not finite");

  Eigen::VectorXd inv_diag = Eigen::VectorXd::Ones(n);
  if (options.preconditioner == Preconditioner::Jacobi) {
    const Eigen::VectorXd d = a.diagonal();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!(d[i] > 0.0)) throw NotPositiveDefinite("matrix not positive definite: diagonal entry " + std::to_string(i) + " <= 0");
      inv_diag[i] = 1.0 / d[i];
    }
  }

  SolveResult out;
  out.report.method = SolveMethod::Cg;
  out.x = Eigen::VectorXd::Zero(n);
  const int max_iter = options.max_iter > 0 ? options.max_iter : static_cast<int>(std::min<long>(50L * n, 2000000000L));
  const double fnorm = f.norm();
  if (fnorm == 0.0) {
    out.report.relative_residual = 0.0;
    out.report.seconds = seconds_since(t0);
    return out;
  }

  Eigen::VectorXd r = f;
  Eigen::VectorXd z = inv_diag.cwiseProduct(r);
  Eigen::VectorXd p = z;
  Eigen::VectorXd ap(n);
  double rz = r.dot(z);
  const double target = options.tol * fnorm;
  int it = 0;
  out.report.status = SolveStatus::MaxIterations;
  while (it < max_iter) {
    ap.noalias() = a * p;
    const double pap = p.dot(ap);
    if (!(pap > 0.0)) throw NotPositiveDefinite("matrix not positive definite: p^T A p = " + std::to_string(pap));
    const double alpha = rz / pap;
    out.x += alpha * p;
    r -= alpha * ap;
    ++it;
    if (options.observer) options.observer(it, out.x);
    if (r.norm() <= target) {
      // Recurrence residual drifts; confirm with the true one.
      r = f - a * out.x;
      if (r.norm() <= target) {
        out.report.status = SolveStatus::Converged;
        break;
      }
    }
    z = inv_diag.cwiseProduct(r);
    const double rz_next = r.dot(z);
    p = z + (rz_next / rz) * p;
    rz = rz_next;
  }
  out.report.iterations = it;
  out.report.relative_residual = relative_residual(a, out.x, f);
  out.report.seconds = seconds_since(t0);
  return out;
}

SolveResult direct_solve(const SparseMatrix& a, const Eigen::VectorXd& f) {
  const auto t0 = Clock::now();
  if (a.rows() != f.size() || a.cols() != f.size()) throw InvalidArgument("matrix and right-hand side sizes differ");
  const Eigen::SparseMatrix<double> col = a;  // Cholesky wants column-major storage
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>, Eigen::Lower> llt(col);
  if (llt.info() != Eigen::Success) throw NotPositiveDefinite("sparse Cholesky breakdown: matrix is not SPD");
  SolveResult out;
  out.report.method = SolveMethod::Direct;
  out.x = llt.solve(f);
  if (llt.info() != Eigen::Success || !out.x.allFinite()) throw NumericError("sparse Cholesky solve failed");
  out.report.iterations = 1;
  out.report.relative_residual = relative_residual(a, out.x, f);
  out.report.seconds = seconds_since(t0);
  return out;
}

bool cholesky_factorizable(const SparseMatrix& a) {
  const Eigen::SparseMatrix<double> col = a;
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>, Eigen::Lower> llt(col);
  return llt.info() == Eigen::Success;
}

double a_norm(const SparseMatrix& a, const Eigen::VectorXd& v) { return std::sqrt(std::max(0.0, v.dot(a * v))); }

}  // namespace lswg
