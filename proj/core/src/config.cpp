#include "lswg/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lswg {

std::string_view case_name(CaseKind c) {
  switch (c) {
    case CaseKind::Smooth: return "s2";
    case CaseKind::Layer: return "s5";
    case CaseKind::Polynomial: return "poly";
  }
  return "?";
}

std::string_view solver_choice_name(SolverChoice s) {
  switch (s) {
    case SolverChoice::Auto: return "auto";
    case SolverChoice::Cg: return "cg";
    case SolverChoice::Direct: return "direct";
  }
  return "?";
}

Eigen::Vector2d StudyConfig::convection() const {
  if (b) return *b;
  return case_kind == CaseKind::Layer ? Eigen::Vector2d(0.0, 1.0) : Eigen::Vector2d(1.0, 1.0);
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double to_real(const std::string& v) {
  if (v.empty()) throw std::invalid_argument("empty number");
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size() || errno == ERANGE || !std::isfinite(x))
    throw std::invalid_argument("unparsable number '" + v + "'");
  return x;
}

int to_int(const std::string& v) {
  if (v.empty()) throw std::invalid_argument("empty integer");
  errno = 0;
  char* end = nullptr;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (end != v.c_str() + v.size() || errno == ERANGE || x < -1000000 || x > 1000000)
    throw std::invalid_argument("unparsable integer '" + v + "'");
  return static_cast<int>(x);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

struct Pending {
  std::optional<double> bx, by;
};

void apply(StudyConfig& cfg, Pending& pend, const std::string& key, const std::string& value) {
  if (key == "case") {
    if (value == "s2") cfg.case_kind = CaseKind::Smooth;
    else if (value == "s5") cfg.case_kind = CaseKind::Layer;
    else if (value == "poly") cfg.case_kind = CaseKind::Polynomial;
    else throw std::invalid_argument("case must be s2, s5 or poly, got '" + value + "'");
  } else if (key == "k") {
    cfg.k = to_int(value);
    if (cfg.k < 1 || cfg.k > 4) throw std::invalid_argument("k must be in [1, 4], got " + value);
  } else if (key == "epsilon") {
    cfg.epsilon = to_real(value);
    if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  } else if (key == "bx") {
    pend.bx = to_real(value);
  } else if (key == "by") {
    pend.by = to_real(value);
  } else if (key == "family") {
    if (value != "triangular" && value != "pentagon")
      throw std::invalid_argument("family must be triangular or pentagon, got '" + value + "'");
    cfg.family = parse_family(value);
  } else if (key == "levels") {
    cfg.levels.clear();
    for (const auto& item : split_list(value)) {
      const int l = to_int(item);
      if (l < 1 || l > 12) throw std::invalid_argument("grid level must be in [1, 12], got " + item);
      cfg.levels.push_back(l);
    }
    if (cfg.levels.empty()) throw std::invalid_argument("levels list is empty");
  } else if (key == "solver") {
    if (value == "auto") cfg.solver = SolverChoice::Auto;
    else if (value == "cg") cfg.solver = SolverChoice::Cg;
    else if (value == "direct") cfg.solver = SolverChoice::Direct;
    else throw std::invalid_argument("solver must be auto, cg or direct, got '" + value + "'");
  } else if (key == "out") {
    if (value.empty()) throw std::invalid_argument("output directory is empty");
    cfg.out_dir = value;
  } else if (key == "poly") {
    cfg.poly.clear();
    for (const auto& item : split_list(value)) cfg.poly.push_back(to_real(item));
  } else {
    throw std::invalid_argument("unknown key '" + key + "'");
  }
}

}  // namespace

void validate(const StudyConfig& cfg) {
  if (cfg.k < 1 || cfg.k > 4) throw ConfigError("k must be in [1, 4]");
  if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon)) throw ConfigError("epsilon must be positive");
  if (cfg.levels.empty()) throw ConfigError("no grid levels given");
  for (std::size_t i = 1; i < cfg.levels.size(); ++i)
    if (cfg.levels[i] <= cfg.levels[i - 1]) throw ConfigError("levels must be strictly increasing");
  if (cfg.case_kind == CaseKind::Polynomial) {
    const std::size_t n = cfg.poly.size();
    bool triangular = false;
    for (std::size_t d = 0; d < 32; ++d) triangular = triangular || (d + 1) * (d + 2) / 2 == n;
    if (n == 0 || !triangular) throw ConfigError("case poly needs poly=<c00,c10,c01,...> with (d+1)(d+2)/2 coefficients");
  }
  const Eigen::Vector2d b = cfg.convection();
  if (!b.allFinite()) throw ConfigError("convection field is not finite");
}

StudyConfig parse_config(std::string_view text, const ConfigOverrides& overrides) {
  StudyConfig cfg;
  Pending pend;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key=value: '" + body + "'");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    try {
      apply(cfg, pend, key, value);
    } catch (const std::exception& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  for (const auto& [key, value] : overrides) {
    try {
      apply(cfg, pend, key, value);
    } catch (const std::exception& e) {
      throw ConfigError("--" + key + ": " + e.what());
    }
  }
  if (pend.bx || pend.by) {
    Eigen::Vector2d b = cfg.convection();
    if (pend.bx) b.x() = *pend.bx;
    if (pend.by) b.y() = *pend.by;
    cfg.b = b;
  }
  validate(cfg);
  return cfg;
}

StudyConfig load_config(const std::filesystem::path& path, const ConfigOverrides& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), overrides);
}

}  // namespace lswg
