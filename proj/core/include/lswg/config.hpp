#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "lswg/mesh.hpp"

namespace lswg {

enum class CaseKind { Smooth, Layer, Polynomial };
enum class SolverChoice { Auto, Cg, Direct };

std::string_view case_name(CaseKind c);
std::string_view solver_choice_name(SolverChoice s);

/// One convergence study: a manufactured case on one mesh family at several levels.
struct StudyConfig {
  CaseKind case_kind = CaseKind::Smooth;
  int k = 2;
  double epsilon = 1e-2;
  /// Unset: the case default, (1,1) for s2 and poly, (0,1) for s5.
  std::optional<Eigen::Vector2d> b;
  MeshFamily family = MeshFamily::Triangular;
  std::vector<int> levels{3, 4, 5};
  SolverChoice solver = SolverChoice::Auto;
  std::filesystem::path out_dir = ".";
  /// Graded-lex monomial coefficients for case poly.
  std::vector<double> poly;

  Eigen::Vector2d convection() const;
};

/// Configuration problem; the message names the offending line or flag.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ConfigOverrides = std::vector<std::pair<std::string, std::string>>;

/// key=value lines, '#' starts a comment. Overrides are applied afterwards,
/// with the same keys. The result is validated.
StudyConfig parse_config(std::string_view text, const ConfigOverrides& overrides = {});
StudyConfig load_config(const std::filesystem::path& path, const ConfigOverrides& overrides = {});

/// Throws ConfigError when a field is out of range.
void validate(const StudyConfig& config);

}  // namespace lswg
