#pragma once

#include <Eigen/Core>

namespace lswg {

inline int poly_dim(int degree) { return degree < 0 ? 0 : (degree + 1) * (degree + 2) / 2; }

/// Global block layout of W_h for degree k:
///   [cell interiors: dim P_k each] [edge traces: k+1 each] [edge normal fluxes: k each].
class DofLayout {
 public:
  DofLayout() = default;
  DofLayout(int num_cells, int num_edges, int k)
      : num_cells_(num_cells), num_edges_(num_edges), k_(k) {}

  int degree() const { return k_; }
  int num_cells() const { return num_cells_; }
  int num_edges() const { return num_edges_; }

  int interior_size() const { return poly_dim(k_); }
  int trace_size() const { return k_ + 1; }
  int flux_size() const { return k_; }

  int interior_offset(int c) const { return c * interior_size(); }
  int trace_offset(int e) const { return num_cells_ * interior_size() + e * trace_size(); }
  int flux_offset(int e) const { return num_cells_ * interior_size() + num_edges_ * trace_size() + e * flux_size(); }
  int size() const { return num_cells_ * interior_size() + num_edges_ * (trace_size() + flux_size()); }

  bool operator==(const DofLayout&) const = default;

 private:
  int num_cells_ = 0;
  int num_edges_ = 0;
  int k_ = 1;
};

/// Coefficient vector of a global weak function {v0, v_b, v_n}; v_n is the
/// normal flux v_g . n_e in each edge's stored normal direction.
struct WgDofVector {
  DofLayout layout;
  Eigen::VectorXd values;

  WgDofVector() = default;
  explicit WgDofVector(const DofLayout& l) : layout(l), values(Eigen::VectorXd::Zero(l.size())) {}

  auto interior(int c) { return values.segment(layout.interior_offset(c), layout.interior_size()); }
  auto interior(int c) const { return values.segment(layout.interior_offset(c), layout.interior_size()); }
  auto trace(int e) { return values.segment(layout.trace_offset(e), layout.trace_size()); }
  auto trace(int e) const { return values.segment(layout.trace_offset(e), layout.trace_size()); }
  auto flux(int e) { return values.segment(layout.flux_offset(e), layout.flux_size()); }
  auto flux(int e) const { return values.segment(layout.flux_offset(e), layout.flux_size()); }
};

}  // namespace lswg
