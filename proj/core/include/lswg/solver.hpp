#pragma once

#include <functional>
#include <string_view>

#include <Eigen/Core>

#include "lswg/assembly.hpp"

namespace lswg {

enum class SolveMethod { Cg, Direct };
enum class SolveStatus { Converged, MaxIterations };

std::string_view method_name(SolveMethod m);

struct SolveReport {
  SolveMethod method = SolveMethod::Direct;
  SolveStatus status = SolveStatus::Converged;
  int iterations = 0;
  /// |A x - F| / |F| (absolute residual when F = 0).
  double relative_residual = 0.0;
  double seconds = 0.0;

  bool converged() const { return status == SolveStatus::Converged; }
};

struct SolveResult {
  Eigen::VectorXd x;
  SolveReport report;
};

enum class Preconditioner { None, Jacobi };

struct CgOptions {
  double tol = 1e-12;
  /// <= 0 selects 50 * N.
  int max_iter = 0;
  Preconditioner preconditioner = Preconditioner::Jacobi;
  /// Called with (iteration, current iterate) after every update.
  std::function<void(int, const Eigen::VectorXd&)> observer;
};

/// Preconditioned conjugate gradients. Throws NotPositiveDefinite when a
/// search direction has p^T A p <= 0; non-convergence is reported in the
/// status, never thrown.
SolveResult cg_solve(const SparseMatrix& a, const Eigen::VectorXd& f, const CgOptions& options = {});

/// Sparse Cholesky (LL^T with fill-reducing ordering). Throws
/// NotPositiveDefinite on breakdown.
SolveResult direct_solve(const SparseMatrix& a, const Eigen::VectorXd& f);

/// True when a sparse Cholesky factorization of `a` succeeds.
bool cholesky_factorizable(const SparseMatrix& a);

/// sqrt(v^T A v).
double a_norm(const SparseMatrix& a, const Eigen::VectorXd& v);

}  // namespace lswg
