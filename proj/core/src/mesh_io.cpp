#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "lswg/errors.hpp"
#include "lswg/mesh.hpp"

namespace lswg {

namespace {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::istringstream next(const char* what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return std::istringstream(line);
    }
    throw ParseError(line_no_ + 1, std::string("unexpected end of file, expected ") + what);
  }

  int line() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

void expect_end(std::istringstream& ss, int line) {
  std::string rest;
  if (ss >> rest) throw ParseError(line, "trailing token '" + rest + "'");
}

long read_count(LineReader& r, const char* what) {
  auto ss = r.next(what);
  long n = -1;
  if (!(ss >> n) || n < 0) throw ParseError(r.line(), std::string("expected non-negative ") + what);
  expect_end(ss, r.line());
  return n;
}

}  // namespace

void write_polymesh(const PolytopalMesh& mesh, std::ostream& out) {
  out << "POLYMESH 1\n" << mesh.num_vertices() << '\n';
  for (const Point& p : mesh.vertices()) out << format_real(p.x()) << ' ' << format_real(p.y()) << '\n';
  out << mesh.num_cells() << '\n';
  for (const auto& loop : mesh.cells()) {
    out << loop.size();
    for (int v : loop) out << ' ' << v;
    out << '\n';
  }
  out << mesh.num_boundary_edges() << '\n';
  for (const Edge& e : mesh.edges())
    if (e.is_boundary()) out << e.vertices[0] << ' ' << e.vertices[1] << ' ' << static_cast<int>(e.tag) << '\n';
}

PolytopalMesh read_polymesh(std::istream& in) {
  LineReader r(in);
  {
    auto ss = r.next("header");
    std::string magic;
    int version = 0;
    if (!(ss >> magic >> version) || magic != "POLYMESH" || version != 1)
      throw ParseError(r.line(), "malformed header, expected 'POLYMESH 1'");
    expect_end(ss, r.line());
  }

  const long nv = read_count(r, "vertex count");
  std::vector<Point> vertices;
  vertices.reserve(nv);
  for (long i = 0; i < nv; ++i) {
    auto ss = r.next("vertex");
    std::string xs, ys;
    if (!(ss >> xs >> ys)) throw ParseError(r.line(), "expected 'x y'");
    expect_end(ss, r.line());
    try {
      std::size_t px = 0, py = 0;
      const double x = std::stod(xs, &px);
      const double y = std::stod(ys, &py);
      if (px != xs.size() || py != ys.size()) throw std::invalid_argument("junk");
      vertices.emplace_back(x, y);
    } catch (const std::exception&) {
      throw ParseError(r.line(), "unparsable coordinate");
    }
  }

  const long nc = read_count(r, "cell count");
  std::vector<std::vector<int>> cells;
  cells.reserve(nc);
  for (long c = 0; c < nc; ++c) {
    auto ss = r.next("cell");
    long m = 0;
    if (!(ss >> m) || m < 3) throw ParseError(r.line(), "cell " + std::to_string(c) + ": expected vertex count >= 3");
    std::vector<int> loop(m);
    std::vector<Point> poly;
    for (long i = 0; i < m; ++i) {
      long v = -1;
      if (!(ss >> v)) throw ParseError(r.line(), "cell " + std::to_string(c) + ": expected " + std::to_string(m) + " vertex indices");
      if (v < 0 || v >= nv)
        throw ParseError(r.line(), "cell " + std::to_string(c) + ": vertex index " + std::to_string(v) + " out of range [0, " +
                                       std::to_string(nv) + ")");
      loop[i] = static_cast<int>(v);
      poly.push_back(vertices[v]);
    }
    expect_end(ss, r.line());
    if (!(signed_area(poly) > 0.0))
      throw ParseError(r.line(), "cell " + std::to_string(c) + " is not counter-clockwise");
    cells.push_back(std::move(loop));
  }

  const long nb = read_count(r, "boundary tag count");
  std::map<std::pair<int, int>, std::pair<BoundaryTag, int>> tags;
  for (long i = 0; i < nb; ++i) {
    auto ss = r.next("boundary tag record");
    long a = -1, b = -1, t = 0;
    if (!(ss >> a >> b >> t)) throw ParseError(r.line(), "expected 'ia ib tag'");
    expect_end(ss, r.line());
    if (a < 0 || a >= nv || b < 0 || b >= nv) throw ParseError(r.line(), "boundary record vertex index out of range");
    if (t != 1 && t != 2) throw ParseError(r.line(), "boundary tag must be 1 or 2");
    const auto key = std::make_pair(static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b)));
    if (!tags.emplace(key, std::make_pair(static_cast<BoundaryTag>(t), r.line())).second)
      throw ParseError(r.line(), "duplicate boundary record");
  }

  std::optional<PolytopalMesh> mesh;
  try {
    mesh.emplace(std::move(vertices), std::move(cells), BoundarySpec{});
  } catch (const GeometryError& err) {
    throw ParseError(0, err.what());
  }
  int tagged = 0;
  for (int e = 0; e < mesh->num_edges(); ++e) {
    const Edge& edge = mesh->edge(e);
    const auto it = tags.find({edge.vertices[0], edge.vertices[1]});
    if (it == tags.end()) {
      if (edge.is_boundary())
        throw ParseError(0, "boundary edge (" + std::to_string(edge.vertices[0]) + "," + std::to_string(edge.vertices[1]) +
                                ") has no tag record");
      continue;
    }
    if (!edge.is_boundary()) throw ParseError(it->second.second, "tag record names an interior edge");
    mesh->set_boundary_tag(e, it->second.first);
    ++tagged;
  }
  if (tagged != static_cast<int>(tags.size())) {
    for (const auto& [key, val] : tags) {
      bool found = false;
      for (const Edge& edge : mesh->edges()) found = found || (edge.vertices[0] == key.first && edge.vertices[1] == key.second);
      if (!found) throw ParseError(val.second, "tag record names a non-existent edge");
    }
  }
  return std::move(*mesh);
}

void save_mesh(const PolytopalMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open '" + path.string() + "' for writing");
  write_polymesh(mesh, out);
  if (!out) throw InvalidArgument("write to '" + path.string() + "' failed");
}

PolytopalMesh load_mesh(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  return read_polymesh(in);
}

}  // namespace lswg
