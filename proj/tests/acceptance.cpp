// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lswg/assembly.hpp"
#include "lswg/manufactured.hpp"
#include "lswg/postproc.hpp"
#include "lswg/quadrature.hpp"
#include "lswg/solver.hpp"
#include "oracles.hpp"

namespace {

using namespace lswg;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::ostringstream failures;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures << "\n    fail: " << what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct Run {
  double h = 0.0;
  double l2 = 0.0;
  double energy = 0.0;
  int unknowns = 0;
  SparseSpdSystem system;
  Eigen::VectorXd x;
};

Run solve_case(const PolytopalMesh& mesh, int k, const Coefficients& coeffs, const ManufacturedSolution& sol,
               double eps, const Eigen::Vector2d& b) {
  const WgSpace space(mesh, k);
  const auto dofs = build_dof_map(mesh, k);
  Run r;
  r.system = assemble(space, coeffs, sol.source(eps, b), interpolate_cauchy_data(sol.cauchy_data(), mesh, dofs));
  r.x = direct_solve(r.system.matrix, r.system.rhs).x;
  const Eigen::VectorXd uh = r.system.expand(r.x);
  const auto qhu = project_exact_solution(sol.u, sol.gradient, mesh, k);
  r.h = mesh.mesh_size();
  r.l2 = l2_error(mesh, k, uh, sol.u);
  r.energy = energy_error(space, coeffs, uh, qhu.values);
  r.unknowns = r.system.num_unknowns();
  return r;
}

Outcome polynomial_exactness() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto u = polynomial_solution({1, 2, 3, -1, 1, 0});
  const Eigen::Vector2d b(1, 1);
  for (auto family : {MeshFamily::Triangular, MeshFamily::Pentagon}) {
    const auto m = grid_family(family, 3);
    const auto r = solve_case(m, 2, Coefficients(0.1, b), u, 0.1, b);
    o.detail << family_name(family) << ": L2 " << fmt("%.2e", r.l2) << ", energy " << fmt("%.2e", r.energy) << "; ";
    o.check(r.l2 <= 1e-9, std::string(family_name(family)) + " L2 error " + fmt("%.3e", r.l2) + " > 1e-9");
    o.check(r.energy <= 1e-8, std::string(family_name(family)) + " energy error " + fmt("%.3e", r.energy) + " > 1e-8");
  }
  const double t = seconds_since(t0);
  o.check(t < 5.0, "runtime " + fmt("%.2f", t) + " s >= 5 s");
  return o;
}

ManufacturedSolution monomial(int a, int b) {
  std::vector<double> c(poly_dim(a + b), 0.0);
  const auto exps = testing::graded_lex(a + b);
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] == std::make_pair(a, b)) c[i] = 1.0;
  return polynomial_solution(c);
}

Outcome commutativity() {
  Outcome o;
  const auto t0 = Clock::now();
  for (auto family : {MeshFamily::Triangular, MeshFamily::Pentagon}) {
    const auto m = grid_family(family, 3);
    for (int k = 1; k <= 4; ++k) {
      const int nr = poly_dim(k - 1);
      double worst_grad = 0.0, worst_lap = 0.0;
      for (const auto& [a, b] : testing::graded_lex(k)) {
        const auto w = monomial(a, b);
        const auto q = project_exact_solution(w.u, w.gradient, m, k);
        for (int c = 0; c < m.num_cells(); ++c) {
          const auto ops = build_local_operators(m, c, k);
          const Eigen::VectorXd qc = ops.layout.gather(q);
          const Point xc = m.cell_centroid(c);
          const double h = m.cell_diameter(c);
          Eigen::VectorXd gx = Eigen::VectorXd::Zero(nr), gy = Eigen::VectorXd::Zero(nr), lap = Eigen::VectorXd::Zero(nr);
          testing::add_shifted_monomial(gx, k - 1, a, a - 1, b, xc, h);
          testing::add_shifted_monomial(gy, k - 1, b, a, b - 1, xc, h);
          testing::add_shifted_monomial(lap, k - 1, a * (a - 1), a - 2, b, xc, h);
          testing::add_shifted_monomial(lap, k - 1, b * (b - 1), a, b - 2, xc, h);
          worst_grad = std::max({worst_grad, (ops.gradient_x() * qc - gx).cwiseAbs().maxCoeff(),
                                 (ops.gradient_y() * qc - gy).cwiseAbs().maxCoeff()});
          worst_lap = std::max(worst_lap, (ops.laplacian * qc - lap).cwiseAbs().maxCoeff());
        }
      }
      const std::string tag = std::string(family_name(family)) + " k=" + std::to_string(k);
      o.check(worst_grad <= 1e-10, tag + " weak gradient deviation " + fmt("%.2e", worst_grad) + " > 1e-10");
      o.check(worst_lap <= 1e-10, tag + " weak Laplacian deviation " + fmt("%.2e", worst_lap) + " > 1e-10");
      o.detail << "\n    " << tag << ": max grad deviation " << fmt("%.1e", worst_grad) << ", max lap deviation "
               << fmt("%.1e", worst_lap);
    }
  }
  const double t = seconds_since(t0);
  o.check(t < 10.0, "runtime " + fmt("%.2f", t) + " s >= 10 s");
  return o;
}

Outcome spd_verification() {
  Outcome o;
  const auto sol = smooth_solution();
  const Eigen::Vector2d b(1, 1);
  int systems = 0;
  for (auto family : {MeshFamily::Triangular, MeshFamily::Pentagon})
    for (int k = 2; k <= 4; ++k)
      for (double eps : {1e-2, 1e-7})
        for (int level = 1; level <= 4; ++level) {
          const auto m = grid_family(family, level);
          const WgSpace space(m, k);
          const auto dofs = build_dof_map(m, k);
          const auto sys = assemble(space, Coefficients(eps, b), sol.source(eps, b),
                                    interpolate_cauchy_data(sol.cauchy_data(), m, dofs));
          const SparseMatrix at = sys.matrix.transpose();
          SparseMatrix diff = sys.matrix - at;
          diff.prune(0.0, 0.0);
          const std::string tag = std::string(family_name(family)) + " k=" + std::to_string(k) +
                                  " eps=" + fmt("%g", eps) + " G" + std::to_string(level);
          o.check(diff.nonZeros() == 0, tag + " not bitwise symmetric");
          o.check(cholesky_factorizable(sys.matrix), tag + " Cholesky failed");
          ++systems;
        }
  o.detail << systems << " systems checked";
  return o;
}

Outcome error_equation() {
  Outcome o;
  testing::Rng rng(2024);
  const int k = 2;
  // 1 + x - y + x^4 + x^2 y - 2 x y^3
  std::vector<double> c(poly_dim(k + 2), 0.0);
  c[0] = 1;
  c[1] = 1;
  c[2] = -1;
  c[7] = 1;
  c[10] = 1;
  c[13] = -2;
  const auto u = polynomial_solution(c);
  const Eigen::Vector2d b(1, 1);
  const Coefficients coeffs(0.1, b);
  const auto m = grid_family(MeshFamily::Triangular, 2);
  const WgSpace space(m, k);
  const auto dofs = build_dof_map(m, k);
  AssemblyOptions opt;
  opt.load_quadrature_degree = 2 * k + 6;
  const auto sys = assemble(space, coeffs, u.source(0.1, b), interpolate_cauchy_data(u.cauchy_data(), m, dofs), opt);
  const Eigen::VectorXd uh = sys.expand(direct_solve(sys.matrix, sys.rhs).x);
  const Eigen::VectorXd qhu = project_exact_solution(u.u, u.gradient, m, k).values;
  const Eigen::VectorXd e = uh - qhu;
  const double ne = energy_norm(space, coeffs, e, 0.1);
  std::normal_distribution<double> g;
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    Eigen::VectorXd v(dofs.size());
    for (int i = 0; i < v.size(); ++i) v[i] = dofs.is_constrained(i) ? 0.0 : g(rng);
    const double nv = energy_norm(space, coeffs, v, 0.1);
    const double res = std::abs(bilinear_form(space, coeffs, e, v) + stabilizer_form(space, qhu, v));
    const double ratio = res / (1.0 + ne * nv);
    worst = std::max(worst, ratio);
    o.check(ratio <= 1e-8, "sample " + std::to_string(t) + " scaled residual " + fmt("%.2e", ratio));
  }
  o.detail << "worst scaled residual " << fmt("%.2e", worst) << " over 20 samples";
  return o;
}

struct ConvergenceCase {
  MeshFamily family;
  double eps;
  int k;
  std::vector<int> levels;
};

std::vector<ConvergenceCase> convergence_cases() {
  std::vector<ConvergenceCase> cases;
  for (auto family : {MeshFamily::Triangular, MeshFamily::Pentagon})
    for (double eps : {1e-2, 1e-7})
      for (int k = 2; k <= 4; ++k)
        cases.push_back({family, eps, k, k == 4 ? std::vector<int>{2, 3, 4} : std::vector<int>{3, 4, 5}});
  return cases;
}

struct ConvergenceResults {
  Outcome convergence;
  Outcome solvers;
};

ConvergenceResults smooth_convergence() {
  ConvergenceResults out;
  Outcome& o = out.convergence;
  Outcome& s = out.solvers;
  const auto t0 = Clock::now();
  const auto sol = smooth_solution();
  const Eigen::Vector2d b(1, 1);
  int compared = 0;
  double worst_solver = 0.0;
  for (const auto& cs : convergence_cases()) {
    std::vector<Run> runs;
    const std::string tag = std::string(family_name(cs.family)) + " eps=" + fmt("%g", cs.eps) + " k=" + std::to_string(cs.k);
    for (int level : cs.levels) {
      const auto m = grid_family(cs.family, level);
      runs.push_back(solve_case(m, cs.k, Coefficients(cs.eps, b), sol, cs.eps, b));
      Run& r = runs.back();
      if (r.unknowns <= 20000) {
        const auto cg = cg_solve(r.system.matrix, r.system.rhs);
        const double diff = a_norm(r.system.matrix, cg.x - r.x) / a_norm(r.system.matrix, r.x);
        worst_solver = std::max(worst_solver, diff);
        ++compared;
        s.check(diff <= 1e-6, tag + " G" + std::to_string(level) + " CG/direct A-norm difference " + fmt("%.2e", diff) +
                                  (cg.report.converged() ? "" : " (CG hit the iteration cap)"));
      }
      r.system = {};
    }
    const Run& c = runs[runs.size() - 2];
    const Run& f = runs.back();
    const double energy_order = observed_order(c.h, c.energy, f.h, f.energy);
    const double l2_order = observed_order(c.h, c.l2, f.h, f.l2);
    const bool tri = cs.family == MeshFamily::Triangular;
    const double energy_min = cs.k - (tri ? 1.3 : 1.2);
    const double l2_min = cs.k + (tri ? 0.4 : 0.5);
    o.detail << "\n    " << tag << ": energy order " << fmt("%.2f", energy_order) << " (>= " << fmt("%.1f", energy_min)
             << "), L2 order " << fmt("%.2f", l2_order) << " (>= " << fmt("%.1f", l2_min) << ")";
    o.check(energy_order >= energy_min, tag + " energy order " + fmt("%.2f", energy_order));
    o.check(l2_order >= l2_min, tag + " L2 order " + fmt("%.2f", l2_order));
  }
  const double t = seconds_since(t0);
  o.check(t < 600.0, "runtime " + fmt("%.1f", t) + " s >= 600 s");
  s.detail << compared << " runs compared, worst relative A-norm difference " << fmt("%.2e", worst_solver);
  return out;
}

Outcome layer_behavior() {
  Outcome o;
  const auto sol = layer_solution();
  const Eigen::Vector2d b(0, 1);
  std::vector<double> l2;
  for (int level = 4; level <= 6; ++level) {
    const auto m = grid_family(MeshFamily::Triangular, level);
    l2.push_back(solve_case(m, 2, Coefficients(1e-3, b), sol, 1e-3, b).l2);
    o.detail << "G" << level << " L2 " << format_mantissa(l2.back()) << (level < 6 ? ", " : "");
  }
  for (std::size_t i = 1; i < l2.size(); ++i) o.check(l2[i] < l2[i - 1], "L2 error did not decrease");
  return o;
}

Outcome quadrature_oracle() {
  Outcome o;
  testing::Rng rng(8);
  double worst = 0.0;
  // Polygons inside the unit square's positive quadrant keep every monomial integral positive.
  for (int p = 0; p < 100; ++p) {
    const double rmin = (p % 3 == 0) ? 0.4 : 0.1;
    const auto poly = testing::random_star_polygon(rng, 3 + p % 10, {0.6, 0.6}, rmin, 0.5);
    for (int degree = 0; degree <= 8; ++degree) {
      const auto rule = cell_rule(poly, degree);
      for (const auto& [a, b] : testing::graded_lex(degree)) {
        const double exact = testing::monomial_integral(poly, a, b);
        double sum = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q)
          sum += rule.weights[q] * std::pow(rule.points[q].x(), a) * std::pow(rule.points[q].y(), b);
        worst = std::max(worst, std::abs(sum - exact) / std::abs(exact));
      }
    }
  }
  o.detail << "worst relative error " << fmt("%.2e", worst) << " over 100 polygons, degrees 0-8";
  o.check(worst <= 1e-12, "relative error " + fmt("%.2e", worst) + " > 1e-12");
  return o;
}

void report(int id, const char* name, const Outcome& o, double secs, bool& all) {
  std::printf("criterion %d (%s): %s  [%.1f s] %s%s\n", id, name, o.pass ? "PASS" : "FAIL", secs,
              o.detail.str().c_str(), o.failures.str().c_str());
  std::fflush(stdout);
  all = all && o.pass;
}

}  // namespace

int main() {
  bool all = true;
  auto timed = [&](int id, const char* name, const std::function<Outcome()>& fn) {
    const auto t0 = Clock::now();
    const Outcome o = fn();
    report(id, name, o, seconds_since(t0), all);
  };
  timed(1, "polynomial exactness", polynomial_exactness);
  timed(2, "commutativity", commutativity);
  timed(3, "SPD verification", spd_verification);
  timed(4, "error equation", error_equation);
  const auto t0 = Clock::now();
  const ConvergenceResults conv = smooth_convergence();
  const double t5 = seconds_since(t0);
  report(5, "smooth-case convergence", conv.convergence, t5, all);
  timed(6, "layer-case behavior", layer_behavior);
  report(7, "solver cross-check", conv.solvers, 0.0, all);
  timed(8, "quadrature oracle", quadrature_oracle);
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
