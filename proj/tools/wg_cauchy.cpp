// wg-cauchy: convergence studies for the least-squares weak Galerkin scheme
// on the convection-diffusion Cauchy problem.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lswg/config.hpp"
#include "lswg/errors.hpp"
#include "lswg/mesh.hpp"
#include "lswg/postproc.hpp"
#include "lswg/study.hpp"

namespace {

struct OverrideFlags {
  std::string config;
  std::optional<std::string> case_kind, k, epsilon, bx, by, family, levels, solver, out, poly;

  void attach(CLI::App* app) {
    app->add_option("--config", config, "key=value study file");
    app->add_option("--case", case_kind, "s2 | s5 | poly");
    app->add_option("--k", k, "polynomial degree (1-4)");
    app->add_option("--epsilon", epsilon, "diffusion coefficient");
    app->add_option("--bx", bx, "convection x-component");
    app->add_option("--by", by, "convection y-component");
    app->add_option("--family", family, "triangular | pentagon");
    app->add_option("--levels", levels, "comma-separated grid levels, e.g. 3,4,5");
    app->add_option("--solver", solver, "auto | cg | direct");
    app->add_option("--out", out, "output directory");
    app->add_option("--poly", poly, "graded-lex coefficients for case poly");
  }

  lswg::StudyConfig resolve() const {
    lswg::ConfigOverrides o;
    auto add = [&o](const char* key, const std::optional<std::string>& v) {
      if (v) o.emplace_back(key, *v);
    };
    add("case", case_kind);
    add("k", k);
    add("epsilon", epsilon);
    add("bx", bx);
    add("by", by);
    add("family", family);
    add("levels", levels);
    add("solver", solver);
    add("out", out);
    add("poly", poly);
    return config.empty() ? lswg::parse_config("", o) : lswg::load_config(config, o);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Least-squares weak Galerkin solver for convection-diffusion Cauchy problems"};
  app.require_subcommand(1);

  OverrideFlags run_flags;
  bool dump_matrices = false;
  auto* run = app.add_subcommand("run", "run a convergence study and write errors.csv / table.txt");
  run_flags.attach(run);
  run->add_flag("--dump-matrix", dump_matrices, "write each reduced matrix as <out>/matrix_G<level>.coo");

  std::string family = "triangular";
  int level = 1;
  std::string mesh_out;
  auto* mesh = app.add_subcommand("mesh", "export a grid of a mesh family in POLYMESH format");
  mesh->add_option("--family", family, "triangular | pentagon");
  mesh->add_option("--level", level, "grid index i (n = 2^(i-1) squares per side)")->required();
  mesh->add_option("--out", mesh_out, "output file")->required();

  OverrideFlags sample_flags;
  int resolution = 101;
  auto* sample = app.add_subcommand("sample", "sample the finest-level solution on a uniform lattice (CSV to stdout)");
  sample_flags.attach(sample);
  sample->add_option("--resolution", resolution, "lattice points per side");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lswg::kExitConfigError;
  }

  try {
    if (*run) {
      const lswg::StudyConfig cfg = run_flags.resolve();
      const lswg::StudyReport report = lswg::run_study(cfg, std::cout, dump_matrices);
      if (!report.success) std::cerr << "error: " << report.failure << '\n';
      return report.exit_code;
    }
    if (*mesh) {
      lswg::save_mesh(lswg::grid_family(lswg::parse_family(family), level), mesh_out);
      return lswg::kExitOk;
    }
    if (*sample) {
      const lswg::StudyConfig cfg = sample_flags.resolve();
      const lswg::LevelSolution s = lswg::solve_level(cfg, cfg.levels.back());
      const auto samples = lswg::sample_field(*s.mesh, cfg.k, s.uh, resolution);
      int clamped = 0;
      for (const auto& p : samples) clamped += p.clamped;
      if (clamped > 0) std::cerr << "note: " << clamped << " sample(s) clamped to the nearest cell\n";
      lswg::write_field_csv(samples, std::cout);
      return lswg::kExitOk;
    }
  } catch (const lswg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return lswg::kExitConfigError;
  } catch (const lswg::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return lswg::kExitConfigError;
  } catch (const lswg::NumericError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return lswg::kExitSolverFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return lswg::kExitOk;
}
