#include "hybridisc/multidisc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "hybridisc/errors.hpp"

namespace hybridisc {

namespace {

BasisLayout layout_for(const MultiDiscProblem& problem) {
  if (!(problem.threshold > 0.0)) throw InvalidInput("close-pair threshold must be positive");
  if (problem.modes < 1) throw InvalidInput("need at least one mode");
  std::vector<PairFrame> pairs = close_pairs(problem.config, problem.threshold);
  const SchemeKind scheme = pairs.empty() ? SchemeKind::ZScheme : SchemeKind::Hybrid;
  return BasisLayout(problem.config.discs(), std::move(pairs), scheme, problem.modes);
}

}  // namespace

Expansion build_representation(const MultiDiscProblem& problem) {
  return Expansion(layout_for(problem), problem.config.far_field());
}

SolveReport solve_multidisc(const MultiDiscProblem& problem) {
  const BasisLayout layout = layout_for(problem);
  const CollocationSystem system =
      assemble(problem.config, layout, collocation_points(layout, problem.effective_points()));
  return solve_least_squares(system, problem.rank_tol);
}

double multidisc_boundary_residual(const SolveReport& report, const DiscConfiguration& config,
                                   int n_test) {
  if (n_test < 1) throw InvalidInput("need at least one test point per circle");
  const bool flow = report.kind == BoundaryKind::Flow;
  double worst = 0.0;
  for (std::size_t j = 0; j < config.size(); ++j) {
    const Disc& disc = config.disc(j);
    for (int k = 0; k < n_test; ++k) {
      const Complex z = disc.center + std::polar(disc.radius, 2.0 * M_PI * (k + 0.5) / n_test);
      const Complex w = report.expansion.eval(z);
      const double value = flow ? w.imag() : w.real();
      worst = std::max(worst, std::abs(value - report.gammas[j]));
    }
  }
  return worst;
}

namespace {

SeparationModes scan_one(const std::function<MultiDiscProblem(double, int)>& make_problem,
                         double target, double separation, const ModesScan& scan) {
  SeparationModes row;
  row.separation = separation;
  std::vector<std::pair<int, Complex>> solved;
  auto dipole_at = [&](int N) {
    for (const auto& [n, dip] : solved) {
      if (n == N) return dip;
    }
    const Complex dip = solve_multidisc(make_problem(separation, N)).expansion.far_field_dipole();
    solved.emplace_back(N, dip);
    row.trace.emplace_back(N, std::abs(dip));
    return dip;
  };
  for (int N = scan.first; N <= scan.last; N += scan.step) {
    // Every N + 1 .. N + lookahead must agree: the dipole oscillates with the
    // parity of N, so a single comparison can report convergence too early.
    const Complex here = dipole_at(N);
    bool stable = true;
    for (int k = 1; k <= scan.lookahead && stable; ++k) {
      stable = std::abs(std::abs(here) - std::abs(dipole_at(N + k))) <= target;
    }
    if (stable) {
      row.modes = N;
      row.dipole = here;
      row.dipole_magnitude = std::abs(here);
      return row;
    }
  }
  return row;
}

}  // namespace

std::vector<SeparationModes> modes_vs_separation(
    const std::function<MultiDiscProblem(double, int)>& make_problem, double target,
    const std::vector<double>& separations, ModesScan scan, int threads) {
  if (!(target > 0.0)) throw InvalidInput("convergence target must be positive");
  if (scan.first < 1 || scan.step < 1 || scan.lookahead < 1 || scan.last < scan.first) {
    throw InvalidInput("invalid mode scan range");
  }
  for (std::size_t i = 1; i < separations.size(); ++i) {
    if (!(separations[i] < separations[i - 1])) {
      throw InvalidInput("separations must be strictly decreasing");
    }
  }
  std::vector<SeparationModes> rows(separations.size());
  std::vector<std::exception_ptr> failures(separations.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < separations.size(); i = next++) {
      try {
        rows[i] = scan_one(make_problem, target, separations[i], scan);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const auto count = static_cast<std::size_t>(std::max(1, threads));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(count, separations.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return rows;
}

MultiDiscProblem nine_disc_problem(double separation, int modes, Complex far_field,
                                   BoundaryKind kind) {
  MultiDiscProblem problem;
  problem.config = nine_disc_array(0.4, separation, far_field, kind);
  // Neighbour gaps are `separation`; diagonal gaps exceed 0.16.
  problem.threshold = 0.1;
  problem.modes = modes;
  return problem;
}

}  // namespace hybridisc
