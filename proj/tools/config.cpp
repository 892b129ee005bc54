#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>

#include "hybridisc/errors.hpp"

namespace hybridisc::cli {

namespace pt = boost::property_tree;

namespace {

std::vector<std::string> split_list(const std::string& text, const char* separators = ",") {
  std::vector<std::string> parts;
  boost::split(parts, text, boost::is_any_of(separators));
  std::vector<std::string> out;
  for (auto& p : parts) {
    boost::trim(p);
    if (!p.empty()) out.push_back(p);
  }
  return out;
}

double to_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(value)) {
    throw ConfigError(key + ": not a finite number: '" + text + "'");
  }
  return value;
}

int to_int(const std::string& key, const std::string& text) {
  const double v = to_double(key, text);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw ConfigError(key + ": not an integer");
  return static_cast<int>(v);
}

template <typename T, typename F>
void read_opt(const pt::ptree& tree, const std::string& key, T& field, F convert) {
  if (auto v = tree.get_optional<std::string>(key)) field = convert(key, boost::trim_copy(*v));
}

// "5:80:5" (inclusive range) or "5, 10, 20".
std::vector<int> parse_modes(const std::string& key, const std::string& text) {
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split_list(text, ":");
    if (parts.size() != 3) throw ConfigError(key + ": range must be first:last:step");
    const int first = to_int(key, parts[0]);
    const int last = to_int(key, parts[1]);
    const int step = to_int(key, parts[2]);
    if (step < 1 || first < 1 || last < first) throw ConfigError(key + ": bad range");
    for (int n = first; n <= last; n += step) out.push_back(n);
  } else {
    for (const auto& p : split_list(text)) out.push_back(to_int(key, p));
  }
  if (out.empty()) throw ConfigError(key + ": empty mode grid");
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 1 || (i > 0 && out[i] <= out[i - 1])) {
      throw ConfigError(key + ": mode grid must be positive and ascending");
    }
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& p : split_list(text)) out.push_back(to_double(key, p));
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

Complex parse_complex(const std::string& key, const std::string& text) {
  const auto parts = split_list(text);
  if (parts.size() == 1) return {to_double(key, parts[0]), 0.0};
  if (parts.size() == 2) return {to_double(key, parts[0]), to_double(key, parts[1])};
  throw ConfigError(key + ": expected 're' or 're, im'");
}

// "x y; x y; ..."
std::vector<Complex> parse_points(const std::string& key, const std::string& text) {
  std::vector<Complex> out;
  for (const auto& item : split_list(text, ";")) {
    const auto xy = split_list(item, " \t,");
    if (xy.size() != 2) throw ConfigError(key + ": each point needs 'x y'");
    out.emplace_back(to_double(key, xy[0]), to_double(key, xy[1]));
  }
  return out;
}

ExperimentKind parse_kind(const std::string& text) {
  if (text == "two-disc-error") return ExperimentKind::TwoDiscError;
  if (text == "modes-vs-separation") return ExperimentKind::ModesVsSeparation;
  if (text == "nine-disc-dipole") return ExperimentKind::NineDiscDipole;
  if (text == "exact-eval") return ExperimentKind::ExactEval;
  if (text == "decay-diagnostics") return ExperimentKind::DecayDiagnostics;
  throw ConfigError("experiment.kind: unknown experiment '" + text + "'");
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::TwoDiscError: return "two-disc-error";
    case ExperimentKind::ModesVsSeparation: return "modes-vs-separation";
    case ExperimentKind::NineDiscDipole: return "nine-disc-dipole";
    case ExperimentKind::ExactEval: return "exact-eval";
    case ExperimentKind::DecayDiagnostics: return "decay-diagnostics";
  }
  return "unknown";
}

ExperimentConfig parse_config(const pt::ptree& tree) {
  ExperimentConfig cfg;
  const auto kind = tree.get_optional<std::string>("experiment.kind");
  if (!kind) throw ConfigError("missing experiment.kind");
  cfg.kind = parse_kind(boost::trim_copy(*kind));
  cfg.output = boost::trim_copy(tree.get<std::string>("experiment.output", to_string(cfg.kind) + ".csv"));
  if (cfg.output.empty() || cfg.output.find('/') != std::string::npos) {
    throw ConfigError("experiment.output must be a plain file name");
  }

  auto id = [](const std::string&, const std::string& t) { return t; };
  read_opt(tree, "geometry.d", cfg.d, to_double);
  read_opt(tree, "geometry.s", cfg.s, to_double);
  read_opt(tree, "geometry.far_field", cfg.far_field, parse_complex);
  if (auto angle = tree.get_optional<std::string>("geometry.far_field_angle")) {
    cfg.far_field = std::polar(1.0, to_double("geometry.far_field_angle", boost::trim_copy(*angle)));
  }
  std::string boundary = "flow";
  read_opt(tree, "geometry.boundary", boundary, id);
  if (boundary == "flow") {
    cfg.boundary = BoundaryKind::Flow;
  } else if (boundary == "electrostatic") {
    cfg.boundary = BoundaryKind::Electrostatic;
  } else {
    throw ConfigError("geometry.boundary must be flow or electrostatic");
  }

  if (auto schemes = tree.get_optional<std::string>("sweep.schemes")) {
    const std::string text = boost::trim_copy(*schemes);
    if (text != "all") {
      cfg.schemes.clear();
      for (const auto& name : split_list(text)) {
        try {
          cfg.schemes.push_back(parse_scheme(name));
        } catch (const InvalidInput& e) {
          throw ConfigError(std::string("sweep.schemes: ") + e.what());
        }
      }
      if (cfg.schemes.empty()) throw ConfigError("sweep.schemes: empty list");
    }
  }
  read_opt(tree, "sweep.modes", cfg.modes, parse_modes);
  read_opt(tree, "sweep.separations", cfg.separations, parse_doubles);
  read_opt(tree, "sweep.target", cfg.target, to_double);
  read_opt(tree, "sweep.modes_max", cfg.modes_max, to_int);
  read_opt(tree, "sweep.modes_step", cfg.modes_step, to_int);
  read_opt(tree, "sweep.lookahead", cfg.lookahead, to_int);
  read_opt(tree, "sweep.points_per_circle", cfg.points_per_circle, to_int);
  read_opt(tree, "sweep.rank_tol", cfg.rank_tol, to_double);
  read_opt(tree, "sweep.test_points", cfg.test_points, to_int);

  read_opt(tree, "eval.points", cfg.points, parse_points);
  read_opt(tree, "eval.boundary_samples", cfg.boundary_samples, to_int);

  read_opt(tree, "decay.radii", cfg.radii, parse_doubles);
  read_opt(tree, "decay.k_max", cfg.k_max, to_int);
  read_opt(tree, "decay.j_max", cfg.j_max, to_int);
  read_opt(tree, "decay.cutoff", cfg.cutoff, to_double);

  if (!(cfg.target > 0)) throw ConfigError("sweep.target must be positive");
  if (cfg.modes_max < 1 || cfg.modes_step < 1 || cfg.lookahead < 1) {
    throw ConfigError("sweep.modes_max, modes_step and lookahead must be positive");
  }
  if (cfg.test_points < 1) throw ConfigError("sweep.test_points must be positive");
  for (std::size_t i = 0; i < cfg.separations.size(); ++i) {
    if (!(cfg.separations[i] > 0) || (i > 0 && cfg.separations[i] >= cfg.separations[i - 1])) {
      throw ConfigError("sweep.separations must be positive and decreasing");
    }
  }

  switch (cfg.kind) {
    case ExperimentKind::TwoDiscError:
      if (cfg.modes.empty()) throw ConfigError("two-disc-error needs sweep.modes");
      break;
    case ExperimentKind::ModesVsSeparation:
    case ExperimentKind::NineDiscDipole:
      if (cfg.separations.empty()) throw ConfigError("experiment needs sweep.separations");
      break;
    case ExperimentKind::ExactEval:
      if (cfg.points.empty() && cfg.boundary_samples < 1) {
        throw ConfigError("exact-eval needs eval.points or eval.boundary_samples");
      }
      break;
    case ExperimentKind::DecayDiagnostics:
      if (cfg.radii.empty()) throw ConfigError("decay-diagnostics needs decay.radii");
      if (cfg.k_max < 0 || cfg.j_max < 64) throw ConfigError("decay.k_max >= 0, decay.j_max >= 64");
      break;
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  pt::ptree tree;
  try {
    pt::read_ini(path, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(e.what());
  }
  return parse_config(tree);
}

}  // namespace hybridisc::cli
