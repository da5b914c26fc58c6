#include "lswg/postproc.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "lswg/errors.hpp"
#include "lswg/quadrature.hpp"

namespace lswg {

double l2_error(const PolytopalMesh& mesh, int k, const Eigen::VectorXd& uh, const ScalarField& u, int quad_degree) {
  const DofLayout layout(mesh.num_cells(), mesh.num_edges(), k);
  if (uh.size() != layout.size()) throw InvalidArgument("solution vector does not match the DOF layout");
  const int qd = quad_degree < 0 ? 2 * k + 4 : quad_degree;
  double sum = 0.0;
  for (int c = 0; c < mesh.num_cells(); ++c) {
    const CellBasis basis = cell_basis(mesh, c, k);
    const auto coeffs = uh.segment(layout.interior_offset(c), layout.interior_size());
    const QuadRule rule = cell_rule(mesh.cell_polygon(c), qd);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const double d = u(rule.points[q]) - basis.values(rule.points[q]).dot(coeffs);
      sum += rule.weights[q] * d * d;
    }
  }
  return std::sqrt(sum);
}

double energy_error(const WgSpace& space, const Coefficients& coeffs, const Eigen::VectorXd& uh,
                    const Eigen::VectorXd& qhu) {
  return energy_norm(space, coeffs, qhu - uh, 1.0);
}

double observed_order(double h_coarse, double e_coarse, double h_fine, double e_fine) {
  return std::log(e_coarse / e_fine) / std::log(h_coarse / h_fine);
}

std::vector<ErrorRecord> convergence_orders(std::vector<ErrorRecord> records) {
  for (std::size_t i = 1; i < records.size(); ++i)
    if (!(records[i].h < records[i - 1].h)) throw InvalidArgument("mesh sizes must strictly decrease across records");
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i == 0) {
      records[i].l2_order.reset();
      records[i].energy_order.reset();
      continue;
    }
    const ErrorRecord& p = records[i - 1];
    ErrorRecord& r = records[i];
    r.l2_order = observed_order(p.h, p.l2, r.h, r.l2);
    r.energy_order = observed_order(p.h, p.energy, r.h, r.energy);
  }
  return records;
}

std::vector<FieldSample> sample_field(const PolytopalMesh& mesh, int k, const Eigen::VectorXd& uh, int resolution) {
  if (resolution < 2) throw InvalidArgument("sampling resolution must be >= 2");
  const DofLayout layout(mesh.num_cells(), mesh.num_edges(), k);
  if (uh.size() != layout.size()) throw InvalidArgument("solution vector does not match the DOF layout");

  std::vector<std::vector<Point>> polys;
  std::vector<Eigen::AlignedBox2d> boxes;
  std::vector<CellBasis> bases;
  for (int c = 0; c < mesh.num_cells(); ++c) {
    polys.push_back(mesh.cell_polygon(c));
    Eigen::AlignedBox2d box;
    for (const Point& p : polys.back()) box.extend(p);
    boxes.push_back(box);
    bases.push_back(cell_basis(mesh, c, k));
  }

  std::vector<FieldSample> out;
  out.reserve(static_cast<std::size_t>(resolution) * resolution);
  const double tol = 1e-12;
  for (int j = 0; j < resolution; ++j)
    for (int i = 0; i < resolution; ++i) {
      const Point p(static_cast<double>(i) / (resolution - 1), static_cast<double>(j) / (resolution - 1));
      int owner = -1;
      for (int c = 0; c < mesh.num_cells() && owner < 0; ++c) {
        if (boxes[c].exteriorDistance(p) > tol) continue;
        if (contains_point(polys[c], p, tol)) owner = c;
      }
      FieldSample s{p.x(), p.y(), 0.0, false};
      if (owner < 0) {
        double best = std::numeric_limits<double>::infinity();
        for (int c = 0; c < mesh.num_cells(); ++c) {
          const double d = distance_to_polygon(polys[c], p);
          if (d < best) best = d, owner = c;
        }
        s.clamped = true;
      }
      s.u = bases[owner].values(p).dot(uh.segment(layout.interior_offset(owner), layout.interior_size()));
      out.push_back(s);
    }
  return out;
}

namespace {

std::string real17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string order_text(const std::optional<double>& order) {
  if (!order) return "-";
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.1f", *order);
  return buf;
}

}  // namespace

void write_error_csv(const std::vector<ErrorRecord>& records, std::ostream& out) {
  out << "level,h,l2,l2_order,energy,energy_order\n";
  for (const ErrorRecord& r : records) {
    out << r.level << ',' << real17(r.h) << ',' << real17(r.l2) << ',' << (r.l2_order ? real17(*r.l2_order) : "")
        << ',' << real17(r.energy) << ',' << (r.energy_order ? real17(*r.energy_order) : "") << '\n';
  }
}

void write_field_csv(const std::vector<FieldSample>& samples, std::ostream& out) {
  out << "x,y,u\n";
  for (const FieldSample& s : samples) out << real17(s.x) << ',' << real17(s.y) << ',' << real17(s.u) << '\n';
}

std::string format_mantissa(double v) {
  if (v == 0.0) return "0.000E+00";
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[32];
  // %.2E gives d.ddE+xx; shift one decade to get 0.dddE+(xx+1).
  std::snprintf(buf, sizeof buf, "%.2E", v);
  const std::string s(buf);
  const auto epos = s.find('E');
  const bool neg = s[0] == '-';
  const std::string digits = s.substr(neg ? 1 : 0, epos - (neg ? 1 : 0));  // d.dd
  const int exponent = std::stoi(s.substr(epos + 1)) + 1;
  std::snprintf(buf, sizeof buf, "%s0.%c%c%cE%c%02d", neg ? "-" : "", digits[0], digits[2], digits[3],
                exponent < 0 ? '-' : '+', std::abs(exponent));
  return buf;
}

std::string format_error_table(const std::vector<ErrorRecord>& records, const std::string& title) {
  std::ostringstream os;
  if (!title.empty()) os << title << '\n';
  os << "Grid G_i |  ||u-u_h||_0  O(h^r) |  |||Q_h u-u_h|||_1  O(h^r)\n";
  os << "---------+-----------------------+----------------------------\n";
  char buf[160];
  for (const ErrorRecord& r : records) {
    std::snprintf(buf, sizeof buf, "%8d |  %12s  %5s  |  %16s  %6s\n", r.level, format_mantissa(r.l2).c_str(),
                  order_text(r.l2_order).c_str(), format_mantissa(r.energy).c_str(), order_text(r.energy_order).c_str());
    os << buf;
  }
  return os.str();
}

}  // namespace lswg
