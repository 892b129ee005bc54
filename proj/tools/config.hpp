#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>

#include "hybridisc/basis.hpp"
#include "hybridisc/geometry.hpp"

namespace hybridisc::cli {

enum class ExperimentKind {
  TwoDiscError,
  ModesVsSeparation,
  NineDiscDipole,
  ExactEval,
  DecayDiagnostics,
};

/// Parsed experiment description. Every field has a default so a config only
/// needs the keys its experiment reads.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::TwoDiscError;
  std::string output;  // file name inside the output directory

  // [geometry]
  double d = 1.0;
  double s = 0.99;
  Complex far_field{1.0, 0.0};
  BoundaryKind boundary = BoundaryKind::Flow;

  // [sweep]
  std::vector<SchemeKind> schemes{SchemeKind::ZScheme, SchemeKind::ZetaScheme,
                                  SchemeKind::Hybrid};
  std::vector<int> modes;
  std::vector<double> separations;
  double target = 1e-6;
  int modes_max = 300;
  int modes_step = 5;
  int lookahead = 5;
  int points_per_circle = 0;
  double rank_tol = 1e-12;
  int test_points = 2048;

  // [eval]
  std::vector<Complex> points;
  int boundary_samples = 0;

  // [decay]
  std::vector<double> radii;
  int k_max = 3;
  int j_max = 512;
  double cutoff = 0;  // <= 0 selects sqrt(T)
};

/// Thrown for anything wrong with the config file itself.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(ExperimentKind kind);
ExperimentConfig parse_config(const boost::property_tree::ptree& tree);
ExperimentConfig load_config(const std::string& path);

}  // namespace hybridisc::cli
