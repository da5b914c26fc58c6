#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "lswg/config.hpp"
#include "lswg/manufactured.hpp"
#include "lswg/mesh.hpp"
#include "lswg/postproc.hpp"
#include "lswg/solver.hpp"

namespace lswg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitSolverFailure = 3;

ManufacturedSolution make_solution(const StudyConfig& config);

/// auto: direct when eps <= 1e-7 or N <= 50000, CG otherwise.
SolveMethod choose_method(const StudyConfig& config, int num_unknowns);

/// Everything produced for one grid level.
struct LevelSolution {
  int level = 0;
  std::unique_ptr<PolytopalMesh> mesh;
  std::unique_ptr<WgSpace> space;
  Eigen::VectorXd uh;
  Eigen::VectorXd qhu;
  int num_dofs = 0;
  int num_unknowns = 0;
  SolveReport solve;
  ErrorRecord record;
};

/// Build, assemble, solve and measure one level. Throws NumericError (or
/// NotPositiveDefinite) when the solver fails.
LevelSolution solve_level(const StudyConfig& config, int level, std::ostream* matrix_dump = nullptr);

struct StudyReport {
  std::vector<ErrorRecord> records;
  std::vector<SolveReport> solves;
  std::vector<int> num_dofs;
  bool success = true;
  std::string failure;
  int exit_code = kExitOk;
};

/// Runs all levels in order, writes <out>/errors.csv and <out>/table.txt and
/// prints the table to `log`. Stops at the first solver failure; the partial
/// table is still written.
/// With dump_matrices, each reduced matrix goes to <out>/matrix_G<level>.coo.
StudyReport run_study(const StudyConfig& config, std::ostream& log, bool dump_matrices = false);

std::string study_title(const StudyConfig& config);

}  // namespace lswg
