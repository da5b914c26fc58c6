#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "lswg/assembly.hpp"
#include "lswg/mesh.hpp"
#include "lswg/polyspace.hpp"

namespace lswg {

struct ErrorRecord {
  int level = 0;
  double h = 0.0;
  double l2 = 0.0;
  double energy = 0.0;
  std::optional<double> l2_order;
  std::optional<double> energy_order;
};

/// sqrt(sum_T |u - u0|_T^2) with a cell rule of exactness quad_degree (< 0: 2k + 4).
double l2_error(const PolytopalMesh& mesh, int k, const Eigen::VectorXd& uh, const ScalarField& u, int quad_degree = -1);

/// |||Q_h u - u_h||| with eps = 1 and the configured convection.
double energy_error(const WgSpace& space, const Coefficients& coeffs, const Eigen::VectorXd& uh,
                    const Eigen::VectorXd& qhu);

/// r_i = log(e_{i-1}/e_i) / log(h_{i-1}/h_i); the first record gets none.
/// Throws InvalidArgument unless h strictly decreases.
std::vector<ErrorRecord> convergence_orders(std::vector<ErrorRecord> records);

/// Observed order between two (h, error) pairs.
double observed_order(double h_coarse, double e_coarse, double h_fine, double e_fine);

struct FieldSample {
  double x = 0.0;
  double y = 0.0;
  double u = 0.0;
  /// Point was not inside any cell and was evaluated on the nearest one.
  bool clamped = false;
};

/// u0 of the containing cell on a resolution x resolution lattice over [0,1]^2.
std::vector<FieldSample> sample_field(const PolytopalMesh& mesh, int k, const Eigen::VectorXd& uh, int resolution);

/// "level,h,l2,l2_order,energy,energy_order"
void write_error_csv(const std::vector<ErrorRecord>& records, std::ostream& out);
/// "x,y,u"
void write_field_csv(const std::vector<FieldSample>& samples, std::ostream& out);

/// 0.141E-01 style: mantissa in [0.1, 1), three digits.
std::string format_mantissa(double v);

/// Plain-text table: grid level, L2 error, order, energy error, order.
std::string format_error_table(const std::vector<ErrorRecord>& records, const std::string& title = {});

}  // namespace lswg
