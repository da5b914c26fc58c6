#include "lswg/manufactured.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "lswg/errors.hpp"

namespace lswg {

ScalarField ManufacturedSolution::source(double eps, const Eigen::Vector2d& b) const {
  return [eps, b, grad = gradient, lap = laplacian](const Point& p) { return -eps * lap(p) + b.dot(grad(p)); };
}

CauchyData ManufacturedSolution::cauchy_data() const {
  return CauchyData{u, [grad = gradient](const Point& x, const Point& n) { return grad(x).dot(n); }};
}

ManufacturedSolution smooth_solution() {
  ManufacturedSolution s;
  s.name = "s2";
  s.u = [](const Point& p) {
    const double g = 2.0 * p.x() * p.x() * p.x() + p.y() + 1.0;
    return -g * g;
  };
  s.gradient = [](const Point& p) {
    const double x = p.x();
    const double g = 2.0 * x * x * x + p.y() + 1.0;
    return Point(-12.0 * x * x * g, -2.0 * g);
  };
  s.laplacian = [](const Point& p) {
    const double x = p.x();
    const double g = 2.0 * x * x * x + p.y() + 1.0;
    // u_xx = -24 x g - 72 x^4, u_yy = -2
    return -24.0 * x * g - 72.0 * x * x * x * x - 2.0;
  };
  return s;
}

ManufacturedSolution layer_solution() {
  ManufacturedSolution s;
  s.name = "s5";
  s.u = [](const Point& p) {
    const double y = p.y();
    return (y * y - y) * (1.0 + std::tanh(20.0 * p.x() - 10.0));
  };
  s.gradient = [](const Point& p) {
    const double y = p.y();
    const double t = std::tanh(20.0 * p.x() - 10.0);
    return Point(20.0 * (y * y - y) * (1.0 - t * t), (2.0 * y - 1.0) * (1.0 + t));
  };
  s.laplacian = [](const Point& p) {
    const double y = p.y();
    const double t = std::tanh(20.0 * p.x() - 10.0);
    return -800.0 * t * (1.0 - t * t) * (y * y - y) + 2.0 * (1.0 + t);
  };
  return s;
}

namespace {

struct Polynomial {
  std::vector<double> c;
  std::vector<std::pair<int, int>> exps;

  double eval(double x, double y, int dx, int dy) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto [a, b] = exps[i];
      if (a < dx || b < dy || c[i] == 0.0) continue;
      double coef = c[i];
      for (int j = 0; j < dx; ++j) coef *= a - j;
      for (int j = 0; j < dy; ++j) coef *= b - j;
      sum += coef * std::pow(x, a - dx) * std::pow(y, b - dy);
    }
    return sum;
  }
};

}  // namespace

ManufacturedSolution polynomial_solution(std::vector<double> coefficients) {
  int degree = -1;
  for (int d = 0; d < 64; ++d)
    if (static_cast<std::size_t>((d + 1) * (d + 2) / 2) == coefficients.size()) degree = d;
  if (degree < 0)
    throw InvalidArgument("polynomial coefficient count " + std::to_string(coefficients.size()) +
                          " is not (d+1)(d+2)/2 for any degree d");
  auto poly = std::make_shared<Polynomial>();
  poly->c = std::move(coefficients);
  for (int d = 0; d <= degree; ++d)
    for (int a = d; a >= 0; --a) poly->exps.emplace_back(a, d - a);

  ManufacturedSolution s;
  s.name = "poly";
  s.u = [poly](const Point& p) { return poly->eval(p.x(), p.y(), 0, 0); };
  s.gradient = [poly](const Point& p) { return Point(poly->eval(p.x(), p.y(), 1, 0), poly->eval(p.x(), p.y(), 0, 1)); };
  s.laplacian = [poly](const Point& p) { return poly->eval(p.x(), p.y(), 2, 0) + poly->eval(p.x(), p.y(), 0, 2); };
  return s;
}

}  // namespace lswg
