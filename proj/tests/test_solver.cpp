#include <gtest/gtest.h>

#include <Eigen/Cholesky>
#include <cmath>

#include "lswg/assembly.hpp"
#include "lswg/errors.hpp"
#include "lswg/manufactured.hpp"
#include "lswg/solver.hpp"
#include "oracles.hpp"

namespace lswg {
namespace {

using testing::Rng;

SparseMatrix diagonal(std::initializer_list<double> d) {
  SparseMatrix a(static_cast<int>(d.size()), static_cast<int>(d.size()));
  int i = 0;
  for (double v : d) {
    a.insert(i, i) = v;
    ++i;
  }
  a.makeCompressed();
  return a;
}

SparseMatrix random_spd(Rng& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = g(rng);
  const Eigen::MatrixXd a = b.transpose() * b + Eigen::MatrixXd::Identity(n, n);
  return a.sparseView();
}

SparseSpdSystem model_system(const WgSpace& space) {
  const auto sol = smooth_solution();
  const auto dofs = build_dof_map(space.mesh(), space.degree());
  return assemble(space, Coefficients(1e-2, {1, 1}), sol.source(1e-2, {1, 1}),
                  interpolate_cauchy_data(sol.cauchy_data(), space.mesh(), dofs));
}

TEST(Cg, IdentityConvergesInOneIteration) {
  const auto a = diagonal({1, 1, 1, 1});
  const Eigen::Vector4d f(1, -2, 3, 0.5);
  const auto r = cg_solve(a, f);
  EXPECT_TRUE(r.report.converged());
  EXPECT_EQ(r.report.iterations, 1);
  EXPECT_LE((r.x - f).norm(), 1e-15);
}

TEST(Cg, DiagonalSystem) {
  const auto r = cg_solve(diagonal({1, 2, 3}), Eigen::Vector3d(1, 1, 1), {1e-14, 0, Preconditioner::None, {}});
  EXPECT_TRUE(r.report.converged());
  EXPECT_LE(r.report.iterations, 3);
  EXPECT_LE((r.x - Eigen::Vector3d(1, 0.5, 1.0 / 3)).norm(), 1e-13);
  const auto s = cg_solve(diagonal({1, 2, 3}), Eigen::Vector3d(1, 2, 3));
  EXPECT_TRUE(s.report.converged());
  EXPECT_LE((s.x - Eigen::Vector3d(1, 1, 1)).norm(), 1e-12);
}

TEST(Cg, ScalarSystem) {
  const auto r = cg_solve(diagonal({2}), Eigen::VectorXd::Constant(1, 4.0));
  EXPECT_EQ(r.x[0], 2.0);
  EXPECT_DOUBLE_EQ(direct_solve(diagonal({2}), Eigen::VectorXd::Constant(1, 4.0)).x[0], 2.0);
}

TEST(Cg, ZeroRightHandSide) {
  const auto r = cg_solve(diagonal({1, 2}), Eigen::Vector2d::Zero());
  EXPECT_TRUE(r.report.converged());
  EXPECT_EQ(r.x.norm(), 0.0);
}

TEST(Cg, RandomSpdMatchesDense) {
  Rng rng(7);
  for (int t = 0; t < 5; ++t) {
    const auto a = random_spd(rng, 50);
    const Eigen::VectorXd f = Eigen::VectorXd::Random(50);
    const Eigen::VectorXd exact = Eigen::MatrixXd(a).llt().solve(f);
    for (auto pc : {Preconditioner::None, Preconditioner::Jacobi}) {
      const auto r = cg_solve(a, f, {1e-12, 0, pc, {}});
      EXPECT_TRUE(r.report.converged());
      EXPECT_LE(r.report.relative_residual, 1e-12);
      EXPECT_LE((r.x - exact).norm(), 1e-8 * exact.norm());
    }
    EXPECT_LE((direct_solve(a, f).x - exact).norm(), 1e-10 * exact.norm());
  }
}

// Property: the A-norm of the error decreases monotonically.
TEST(Cg, ErrorDecreasesInEnergyNorm) {
  Rng rng(11);
  const auto a = random_spd(rng, 40);
  const Eigen::VectorXd f = Eigen::VectorXd::Random(40);
  const Eigen::VectorXd exact = Eigen::MatrixXd(a).llt().solve(f);
  for (auto pc : {Preconditioner::None, Preconditioner::Jacobi}) {
    std::vector<double> errors{a_norm(a, exact)};
    CgOptions opt{1e-12, 0, pc, [&](int, const Eigen::VectorXd& x) { errors.push_back(a_norm(a, x - exact)); }};
    cg_solve(a, f, opt);
    ASSERT_GT(errors.size(), 2u);
    for (std::size_t i = 1; i < errors.size(); ++i)
      EXPECT_LE(errors[i], errors[i - 1] * (1 + 1e-10) + 1e-12) << "iteration " << i;
  }
}

TEST(Cg, MaxIterationsReportedNotThrown) {
  Rng rng(3);
  const auto a = random_spd(rng, 30);
  const auto r = cg_solve(a, Eigen::VectorXd::Ones(30), {1e-14, 2, Preconditioner::None, {}});
  EXPECT_EQ(r.report.status, SolveStatus::MaxIterations);
  EXPECT_EQ(r.report.iterations, 2);
}

TEST(Cg, IndefiniteMatrixThrows) {
  EXPECT_THROW(cg_solve(diagonal({1, -1}), Eigen::Vector2d(1, 1), {1e-12, 0, Preconditioner::None, {}}),
               NotPositiveDefinite);
  EXPECT_THROW(cg_solve(diagonal({1, -1}), Eigen::Vector2d(1, 1)), NotPositiveDefinite);
  EXPECT_THROW(direct_solve(diagonal({1, -1}), Eigen::Vector2d(1, 1)), NotPositiveDefinite);
  EXPECT_FALSE(cholesky_factorizable(diagonal({1, -1})));
  Eigen::MatrixXd s(2, 2);
  s << 1, 2, 2, 1;
  const SparseMatrix sp = s.sparseView();
  EXPECT_THROW(cg_solve(sp, Eigen::Vector2d(1, -1), {1e-12, 0, Preconditioner::None, {}}), NotPositiveDefinite);
}

TEST(Cg, InvalidInput) {
  EXPECT_THROW(cg_solve(diagonal({1, 2}), Eigen::Vector3d(1, 1, 1)), InvalidArgument);
  EXPECT_THROW(cg_solve(diagonal({1, 2}), Eigen::Vector2d(1, std::nan(""))), InvalidArgument);
  EXPECT_THROW(direct_solve(diagonal({1, 2}), Eigen::Vector3d(1, 1, 1)), InvalidArgument);
}

TEST(Cg, AgreesWithDirectOnWgSystems) {
  for (auto family : {MeshFamily::Triangular, MeshFamily::Pentagon})
    for (int k = 1; k <= 3; ++k) {
      const auto m = grid_family(family, 2);
      const WgSpace space(m, k);
      const auto sys = model_system(space);
      const auto d = direct_solve(sys.matrix, sys.rhs);
      const auto c = cg_solve(sys.matrix, sys.rhs);
      EXPECT_TRUE(c.report.converged()) << family_name(family) << " k=" << k;
      EXPECT_LE(a_norm(sys.matrix, c.x - d.x), 1e-8 * a_norm(sys.matrix, d.x)) << family_name(family) << " k=" << k;
      EXPECT_LE(d.report.relative_residual, 1e-10);
    }
}

TEST(ANorm, MatchesQuadraticForm) {
  const auto a = diagonal({1, 4, 9});
  EXPECT_DOUBLE_EQ(a_norm(a, Eigen::Vector3d(1, 1, 1)), std::sqrt(14.0));
  EXPECT_EQ(a_norm(a, Eigen::Vector3d::Zero()), 0.0);
}

}  // namespace
}  // namespace lswg
