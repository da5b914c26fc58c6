#include "lswg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lswg/errors.hpp"

namespace lswg {

BoundarySpec BoundarySpec::left_and_bottom(double tol) {
  return BoundarySpec{[tol](const Point& m) { return std::abs(m.x()) <= tol || std::abs(m.y()) <= tol; }};
}

PolytopalMesh::PolytopalMesh(std::vector<Point> vertices, std::vector<std::vector<int>> cells,
                             const BoundarySpec& spec)
    : vertices_(std::move(vertices)), cells_(std::move(cells)) {
  const int nv = num_vertices();
  areas_.reserve(cells_.size());
  centroids_.reserve(cells_.size());
  diameters_.reserve(cells_.size());
  for (int c = 0; c < num_cells(); ++c) {
    const auto& loop = cells_[c];
    if (loop.size() < 3) throw GeometryError("cell " + std::to_string(c) + " has fewer than 3 vertices");
    for (int v : loop)
      if (v < 0 || v >= nv) throw GeometryError("cell " + std::to_string(c) + " references vertex " + std::to_string(v));
    const auto poly = cell_polygon(c);
    const double area = signed_area(poly);
    if (!(area > 0.0)) throw GeometryError("cell " + std::to_string(c) + " is not counter-clockwise");
    areas_.push_back(area);
    centroids_.push_back(polygon_centroid(poly));
    diameters_.push_back(polygon_diameter(poly));
    mesh_size_ = std::max(mesh_size_, diameters_.back());
  }
  build_edges();
  apply_boundary_spec(spec);
}

std::vector<Point> PolytopalMesh::cell_polygon(int c) const {
  std::vector<Point> poly;
  poly.reserve(cells_[c].size());
  for (int v : cells_[c]) poly.push_back(vertices_[v]);
  return poly;
}

void PolytopalMesh::build_edges() {
  // Edge ids follow the sorted vertex pairs so numbering depends only on the
  // geometry, not on the order the cells were listed in.
  std::vector<std::pair<int, int>> keys;
  for (const auto& loop : cells_)
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const int a = loop[i];
      const int b = loop[(i + 1) % loop.size()];
      if (a == b) throw GeometryError("degenerate edge with repeated vertex " + std::to_string(a));
      keys.emplace_back(std::min(a, b), std::max(a, b));
    }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  edges_.assign(keys.size(), Edge{});
  for (std::size_t e = 0; e < keys.size(); ++e) {
    edges_[e].vertices = {keys[e].first, keys[e].second};
    edges_[e].length = (vertices_[keys[e].second] - vertices_[keys[e].first]).norm();
  }

  cell_edges_.assign(cells_.size(), {});
  for (int c = 0; c < num_cells(); ++c) {
    const auto& loop = cells_[c];
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const int a = loop[i];
      const int b = loop[(i + 1) % loop.size()];
      const auto key = std::make_pair(std::min(a, b), std::max(a, b));
      const int e = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), key) - keys.begin());
      Edge& edge = edges_[e];
      if (edge.cells[0] < 0) {
        edge.cells[0] = c;
        const Point t = vertices_[b] - vertices_[a];
        edge.normal = Point(t.y(), -t.x()) / t.norm();
      } else if (edge.cells[1] < 0) {
        if (edge.cells[0] == c)
          throw GeometryError("cell " + std::to_string(c) + " uses edge (" + std::to_string(key.first) + "," +
                              std::to_string(key.second) + ") twice");
        // The second cell must traverse the edge in the opposite direction.
        const Point t = vertices_[b] - vertices_[a];
        if (t.dot(Point(-edge.normal.y(), edge.normal.x())) >= 0.0)
          throw GeometryError("cells " + std::to_string(edge.cells[0]) + " and " + std::to_string(c) +
                              " traverse a shared edge in the same direction");
        edge.cells[1] = c;
      } else {
        throw GeometryError("edge (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                            ") is shared by more than two cells");
      }
      cell_edges_[c].push_back(e);
    }
  }
}

int PolytopalMesh::outward_sign(int c, int local_edge) const {
  return edges_[cell_edges_[c][local_edge]].cells[0] == c ? 1 : -1;
}

Point PolytopalMesh::edge_midpoint(int e) const {
  return 0.5 * (vertices_[edges_[e].vertices[0]] + vertices_[edges_[e].vertices[1]]);
}

int PolytopalMesh::num_boundary_edges() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_boundary(); }));
}

void PolytopalMesh::apply_boundary_spec(const BoundarySpec& spec) {
  for (int e = 0; e < num_edges(); ++e) {
    Edge& edge = edges_[e];
    if (!edge.is_boundary()) {
      edge.tag = BoundaryTag::Interior;
      continue;
    }
    const bool g1 = spec.gamma1 && spec.gamma1(edge_midpoint(e));
    edge.tag = g1 ? BoundaryTag::Gamma1 : BoundaryTag::Gamma2;
  }
}

void PolytopalMesh::set_boundary_tag(int e, BoundaryTag tag) {
  if (e < 0 || e >= num_edges()) throw InvalidArgument("edge index out of range");
  if (!edges_[e].is_boundary()) throw InvalidArgument("cannot tag interior edge " + std::to_string(e));
  if (tag == BoundaryTag::Interior) throw InvalidArgument("boundary edge needs tag Gamma1 or Gamma2");
  edges_[e].tag = tag;
}

MeshFamily parse_family(std::string_view name) {
  if (name == "triangular") return MeshFamily::Triangular;
  if (name == "pentagon") return MeshFamily::Pentagon;
  throw InvalidArgument("unknown mesh family '" + std::string(name) + "'");
}

std::string_view family_name(MeshFamily family) {
  return family == MeshFamily::Triangular ? "triangular" : "pentagon";
}

namespace {

std::vector<Point> lattice(int n) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) pts.emplace_back(static_cast<double>(i) / n, static_cast<double>(j) / n);
  return pts;
}

void require_positive(int n) {
  if (n < 1) throw InvalidArgument("cells per side must be >= 1, got " + std::to_string(n));
}

}  // namespace

PolytopalMesh build_triangular(int n, const BoundarySpec& spec) {
  require_positive(n);
  auto pts = lattice(n);
  auto id = [n](int i, int j) { return j * (n + 1) + i; };
  std::vector<std::vector<int>> cells;
  cells.reserve(2 * static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      cells.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      cells.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  return PolytopalMesh(std::move(pts), std::move(cells), spec);
}

PolytopalMesh build_nonconvex_pentagon(int n, const BoundarySpec& spec) {
  require_positive(n);
  auto pts = lattice(n);
  const int corners = static_cast<int>(pts.size());
  auto id = [n](int i, int j) { return j * (n + 1) + i; };
  std::vector<std::vector<int>> cells;
  cells.reserve(2 * static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const int p = corners + 2 * (j * n + i);
      const int q = p + 1;
      // Zigzag vertices at local (1/4, 3/4) and (3/4, 1/4).
      pts.emplace_back((4.0 * i + 1.0) / (4.0 * n), (4.0 * j + 3.0) / (4.0 * n));
      pts.emplace_back((4.0 * i + 3.0) / (4.0 * n), (4.0 * j + 1.0) / (4.0 * n));
      cells.push_back({id(i, j), p, q, id(i + 1, j + 1), id(i, j + 1)});
      cells.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1), q, p});
    }
  return PolytopalMesh(std::move(pts), std::move(cells), spec);
}

PolytopalMesh grid_family(MeshFamily family, int level, const BoundarySpec& spec) {
  if (level < 1 || level > 24) throw InvalidArgument("grid level must be in [1, 24], got " + std::to_string(level));
  const int n = 1 << (level - 1);
  return family == MeshFamily::Triangular ? build_triangular(n, spec) : build_nonconvex_pentagon(n, spec);
}

}  // namespace lswg
