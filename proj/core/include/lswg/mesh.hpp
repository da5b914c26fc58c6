#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "lswg/geometry.hpp"

namespace lswg {

enum class BoundaryTag : int { Interior = 0, Gamma1 = 1, Gamma2 = 2 };

/// An edge of the partition. Vertex and cell pairs are stored in increasing
/// index order; cells[1] is -1 on the boundary of the domain.
struct Edge {
  std::array<int, 2> vertices{};
  std::array<int, 2> cells{-1, -1};
  /// Unit normal pointing from cells[0] into cells[1]; outward on the boundary.
  Point normal = Point::Zero();
  double length = 0.0;
  BoundaryTag tag = BoundaryTag::Interior;

  bool is_boundary() const { return cells[1] < 0; }
};

/// Splits the boundary into the accessible part Gamma1 (Cauchy data given)
/// and the rest. The predicate sees the midpoint of each boundary edge.
struct BoundarySpec {
  std::function<bool(const Point&)> gamma1;

  /// Gamma1 = {x = 0} U {y = 0}.
  static BoundarySpec left_and_bottom(double tol = 1e-12);
};

/// Counter-clockwise polygonal cells over a shared vertex list. Edges,
/// normals, areas and diameters are derived on construction; the object is
/// immutable apart from boundary retagging.
class PolytopalMesh {
 public:
  PolytopalMesh(std::vector<Point> vertices, std::vector<std::vector<int>> cells,
                const BoundarySpec& spec = BoundarySpec::left_and_bottom());

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_cells() const { return static_cast<int>(cells_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  /// Edge ids of cell c in loop order: entry i joins loop[i] -> loop[i+1].
  const std::vector<int>& cell_edges(int c) const { return cell_edges_[c]; }

  /// +1 when the stored normal of the i-th edge of cell c is outward for c.
  int outward_sign(int c, int local_edge) const;

  std::vector<Point> cell_polygon(int c) const;
  double cell_area(int c) const { return areas_[c]; }
  const Point& cell_centroid(int c) const { return centroids_[c]; }
  double cell_diameter(int c) const { return diameters_[c]; }
  /// max over cells of the diameter.
  double mesh_size() const { return mesh_size_; }

  Point edge_midpoint(int e) const;
  int num_boundary_edges() const;

  void apply_boundary_spec(const BoundarySpec& spec);
  /// Retag one boundary edge; throws InvalidArgument for interior edges or
  /// BoundaryTag::Interior.
  void set_boundary_tag(int e, BoundaryTag tag);

 private:
  void build_edges();

  std::vector<Point> vertices_;
  std::vector<std::vector<int>> cells_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> cell_edges_;
  std::vector<double> areas_;
  std::vector<Point> centroids_;
  std::vector<double> diameters_;
  double mesh_size_ = 0.0;
};

enum class MeshFamily { Triangular, Pentagon };

MeshFamily parse_family(std::string_view name);
std::string_view family_name(MeshFamily family);

/// n x n squares, each cut by the diagonal from lower-left to upper-right.
PolytopalMesh build_triangular(int n, const BoundarySpec& spec = BoundarySpec::left_and_bottom());

/// n x n squares, each cut by the polyline (0,0) -> (1/4,3/4) -> (3/4,1/4) -> (1,1)
/// (local coordinates) into two non-convex pentagons.
PolytopalMesh build_nonconvex_pentagon(int n, const BoundarySpec& spec = BoundarySpec::left_and_bottom());

/// Level i of a family uses n = 2^(i-1) squares per side.
PolytopalMesh grid_family(MeshFamily family, int level,
                          const BoundarySpec& spec = BoundarySpec::left_and_bottom());

// POLYMESH text format.
void write_polymesh(const PolytopalMesh& mesh, std::ostream& out);
PolytopalMesh read_polymesh(std::istream& in);
void save_mesh(const PolytopalMesh& mesh, const std::filesystem::path& path);
PolytopalMesh load_mesh(const std::filesystem::path& path);

}  // namespace lswg
