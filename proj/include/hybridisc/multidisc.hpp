#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hybridisc/basis.hpp"
#include "hybridisc/geometry.hpp"
#include "hybridisc/solver.hpp"

namespace hybridisc {

/// Hybrid problem for an arbitrary disc configuration: one Laurent family per
/// disc and one annulus family per close pair.
struct MultiDiscProblem {
  DiscConfiguration config;
  double threshold = kDefaultCloseThreshold;
  int modes = 5;
  int points_per_circle = 0;  // <= 0 selects 2 * modes + 10
  double rank_tol = kDefaultRankTol;

  int effective_points() const { return points_per_circle > 0 ? points_per_circle : 2 * modes + 10; }
};

/// Zero-coefficient hybrid expansion for `problem` (families per close_pairs).
/// Configurations without close pairs get a pure Laurent (ZScheme) layout.
Expansion build_representation(const MultiDiscProblem& problem);

/// Equispaced points on every circle plus, per pair, the images of equispaced
/// points on its two annulus circles; minimum-norm least squares.
SolveReport solve_multidisc(const MultiDiscProblem& problem);

/// Largest |Im w - gamma_j| (Re w for electrostatic) over `n_test` equispaced
/// points per circle.
double multidisc_boundary_residual(const SolveReport& report, const DiscConfiguration& config,
                                   int n_test = 1024);

struct SeparationModes {
  double separation = 0;
  std::optional<int> modes;  // empty when not converged by the mode cap
  double dipole_magnitude = 0;
  Complex dipole;
  std::vector<std::pair<int, double>> trace;  // (modes, |dipole|) for every solve
};

struct ModesScan {
  int first = 1;
  int last = 80;
  int step = 1;
  /// Convergence at N means | |dipole(N)| - |dipole(N + k)| | <= target for k = 1..lookahead.
  int lookahead = 5;
};

/// For each separation, the smallest mode count whose dipole magnitude is stable
/// to `target` over the next `lookahead` mode counts. `make_problem(separation, modes)`
/// builds the problem for one cell. Cells are independent and may run on up to
/// `threads` workers; results keep input order.
std::vector<SeparationModes> modes_vs_separation(
    const std::function<MultiDiscProblem(double, int)>& make_problem, double target,
    const std::vector<double>& separations, ModesScan scan = {}, int threads = 1);

/// The nine-disc benchmark: centre spacing 0.4 (radius 0.2 - separation/2),
/// close-pair threshold between the neighbour and diagonal gaps.
MultiDiscProblem nine_disc_problem(double separation, int modes,
                                   Complex far_field = Complex{1.0, 0.0},
                                   BoundaryKind kind = BoundaryKind::Flow);

}  // namespace hybridisc
