#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "hybridisc/basis.hpp"
#include "hybridisc/geometry.hpp"
#include "hybridisc/special.hpp"

namespace hybridisc {

inline constexpr double kDefaultRankTol = 1e-12;
inline constexpr int kDefaultBoundaryTestPoints = 2048;

/// How a collocation point was generated.
enum class PointSource {
  Physical,      // equispaced in the disc angle
  AnnulusOuter,  // image of an equispaced point on |zeta_p| = 1
  AnnulusInner,  // image of an equispaced point on |zeta_p| = rho_p
};

struct CollocationPoint {
  Complex z;
  std::size_t disc = 0;  // circle the point lies on
  double parameter = 0;  // generating angle
  PointSource source = PointSource::Physical;
  int pair = -1;  // pair family for annulus-sourced points
};

/// Collocation set for `layout`: `per_circle` equispaced points on every physical
/// circle when disc families are present, plus `per_circle` images of equispaced
/// points on both annulus circles of every pair family (these land on the two
/// member discs).
std::vector<CollocationPoint> collocation_points(const BasisLayout& layout, int per_circle);

/// Real unknowns: Re/Im of every non-constant complex coefficient, the free
/// component of the constant, then one gamma per non-reference disc.
struct UnknownLayout {
  std::size_t complex_coefficients = 0;  // excluding the constant
  std::size_t gamma_count = 0;
  std::size_t constant_column() const { return 2 * complex_coefficients; }
  std::size_t gamma_column(std::size_t k) const { return constant_column() + 1 + k; }
  std::size_t columns() const { return 2 * complex_coefficients + 1 + gamma_count; }
};

/// Overdetermined real system  matrix * x = rhs  from the boundary conditions.
struct CollocationSystem {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
  UnknownLayout unknowns;
  std::vector<CollocationPoint> points;
  BasisLayout layout;
  Complex far_field;
  BoundaryKind kind = BoundaryKind::Flow;
  std::size_t reference_index = 0;
  std::size_t disc_count = 0;
};

/// One real row per point: Im w (flow) or Re w (electrostatic) minus gamma of the
/// point's disc, with the U0 z term moved to the right-hand side. The real part
/// of the constant (flow) or its imaginary part (electrostatic) and the gamma of
/// the reference disc are pinned to zero. Throws UnderdeterminedSystem when
/// rows < columns.
CollocationSystem assemble(const DiscConfiguration& config, const BasisLayout& layout,
                           const std::vector<CollocationPoint>& points);

/// Convenience: two-disc layout with `per_circle` points (4N when <= 0).
/// Throws UnderdeterminedSystem when per_circle < 2N + 2.
CollocationSystem assemble(const DiscConfiguration& config, SchemeKind scheme, int N,
                           int per_circle = 0);

struct SolveReport {
  Expansion expansion;
  std::vector<double> gammas;  // one per disc, reference disc = 0
  double residual_norm = 0;
  int rank_estimate = 0;
  std::size_t unknowns = 0;
  std::size_t rows = 0;
  BoundaryKind kind = BoundaryKind::Flow;
  double max_boundary_error = -1;  // negative until boundary_error is run
  double wall_time = 0;            // seconds
};

/// Minimum-norm least-squares solution by SVD, discarding singular values below
/// rank_tol times the largest. Throws DegenerateSystem if nothing survives.
SolveReport solve_least_squares(const CollocationSystem& system,
                                double rank_tol = kDefaultRankTol);

/// Largest |w_num - w_exact| over n_test equispaced angles on each circle, after
/// shifting w_num by the constant that makes it agree with the exact solution at
/// z = to_physical(-1). Also stores the value in report.max_boundary_error.
double boundary_error(SolveReport& report, const ExactSolution& exact,
                      int n_test = kDefaultBoundaryTestPoints);

/// Exact two-disc solution matching a canonical two-disc configuration.
ExactSolution exact_for(const DiscConfiguration& config, KEvalSettings settings = {});

/// Assemble, solve, and measure the boundary error for the two-disc problem.
SolveReport solve_two_disc(const DiscConfiguration& config, SchemeKind scheme, int N,
                           int per_circle = 0, double rank_tol = kDefaultRankTol,
                           int n_test = kDefaultBoundaryTestPoints);

struct ModesSearch {
  std::optional<int> modes;  // empty when not reached
  std::vector<std::pair<int, double>> trace;  // (N, error) for every N tried
};

/// Smallest N in {step, 2 step, ..., N_max} whose boundary error is <= target.
ModesSearch modes_for_accuracy(const DiscConfiguration& config, SchemeKind scheme,
                               double target, int N_max, int step = 5);

}  // namespace hybridisc
