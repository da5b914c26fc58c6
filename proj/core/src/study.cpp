#include "lswg/study.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lswg/errors.hpp"

namespace lswg {

ManufacturedSolution make_solution(const StudyConfig& config) {
  switch (config.case_kind) {
    case CaseKind::Smooth: return smooth_solution();
    case CaseKind::Layer: return layer_solution();
    case CaseKind::Polynomial: return polynomial_solution(config.poly);
  }
  throw InvalidArgument("unknown case");
}

SolveMethod choose_method(const StudyConfig& config, int num_unknowns) {
  switch (config.solver) {
    case SolverChoice::Cg: return SolveMethod::Cg;
    case SolverChoice::Direct: return SolveMethod::Direct;
    case SolverChoice::Auto: break;
  }
  return (config.epsilon <= 1e-7 || num_unknowns <= 50000) ? SolveMethod::Direct : SolveMethod::Cg;
}

LevelSolution solve_level(const StudyConfig& config, int level, std::ostream* matrix_dump) {
  const ManufacturedSolution sol = make_solution(config);
  const Eigen::Vector2d b = config.convection();
  const Coefficients coeffs(config.epsilon, b);

  LevelSolution out;
  out.level = level;
  out.mesh = std::make_unique<PolytopalMesh>(grid_family(config.family, level));
  out.space = std::make_unique<WgSpace>(*out.mesh, config.k);
  const GlobalDofMap dofs(*out.mesh, config.k);
  const Eigen::VectorXd data = interpolate_cauchy_data(sol.cauchy_data(), *out.mesh, dofs);
  const SparseSpdSystem sys = assemble(*out.space, coeffs, sol.source(config.epsilon, b), data);
  out.num_dofs = dofs.size();
  out.num_unknowns = sys.num_unknowns();
  if (matrix_dump) write_matrix_coo(sys.matrix, *matrix_dump);

  SolveResult res;
  if (choose_method(config, sys.num_unknowns()) == SolveMethod::Direct) {
    res = direct_solve(sys.matrix, sys.rhs);
  } else {
    res = cg_solve(sys.matrix, sys.rhs);
    if (!res.report.converged())
      throw NumericError("CG did not converge in " + std::to_string(res.report.iterations) +
                         " iterations (relative residual " + std::to_string(res.report.relative_residual) + ")");
  }
  out.solve = res.report;
  out.uh = sys.expand(res.x);
  out.qhu = project_exact_solution(sol.u, sol.gradient, *out.mesh, config.k).values;

  out.record.level = level;
  out.record.h = out.mesh->mesh_size();
  out.record.l2 = l2_error(*out.mesh, config.k, out.uh, sol.u);
  out.record.energy = energy_error(*out.space, coeffs, out.uh, out.qhu);
  return out;
}

std::string study_title(const StudyConfig& config) {
  const Eigen::Vector2d b = config.convection();
  char buf[200];
  std::snprintf(buf, sizeof buf, "case %s, P%d, %s grids, epsilon=%g, b=(%g,%g)", std::string(case_name(config.case_kind)).c_str(),
                config.k, std::string(family_name(config.family)).c_str(), config.epsilon, b.x(), b.y());
  return buf;
}

StudyReport run_study(const StudyConfig& config, std::ostream& log, bool dump_matrices) {
  validate(config);
  StudyReport report;
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  for (int level : config.levels) {
    try {
      std::ofstream dump;
      if (dump_matrices) dump.open(config.out_dir / ("matrix_G" + std::to_string(level) + ".coo"));
      LevelSolution s = solve_level(config, level, dump_matrices && dump ? &dump : nullptr);
      log << "  level " << level << ": N=" << s.num_dofs << " unknowns=" << s.num_unknowns << " solver="
          << method_name(s.solve.method) << " iters=" << s.solve.iterations << " relres=" << s.solve.relative_residual
          << " time=" << s.solve.seconds << "s\n";
      report.records.push_back(s.record);
      report.solves.push_back(s.solve);
      report.num_dofs.push_back(s.num_dofs);
    } catch (const NumericError& e) {
      report.success = false;
      report.failure = "level " + std::to_string(level) + ": " + e.what();
      report.exit_code = kExitSolverFailure;
      log << "  solver failure at " << report.failure << '\n';
      break;
    }
  }
  report.records = convergence_orders(report.records);

  const std::string table = format_error_table(report.records, study_title(config));
  log << table;

  std::ofstream csv(config.out_dir / "errors.csv");
  std::ofstream txt(config.out_dir / "table.txt");
  if (!csv || !txt) {
    log << "warning: cannot write results to '" << config.out_dir.string() << "'\n";
  } else {
    write_error_csv(report.records, csv);
    txt << table;
  }
  return report;
}

}  // namespace lswg
