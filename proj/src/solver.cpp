#include "hybridisc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include <lapacke.h>

#include "hybridisc/errors.hpp"

namespace hybridisc {

std::vector<CollocationPoint> collocation_points(const BasisLayout& layout, int per_circle) {
  if (per_circle < 1) throw UnderdeterminedSystem("need at least one point per circle");
  std::vector<CollocationPoint> points;
  const double step = 2.0 * M_PI / per_circle;
  if (layout.has_disc_families()) {
    for (std::size_t j = 0; j < layout.discs().size(); ++j) {
      const Disc& disc = layout.discs()[j];
      for (int k = 0; k < per_circle; ++k) {
        const double t = step * k;
        points.push_back({disc.center + std::polar(disc.radius, t), j, t,
                          PointSource::Physical, -1});
      }
    }
  }
  for (std::size_t p = 0; p < layout.pairs().size(); ++p) {
    const PairFamily& pair = layout.pairs()[p];
    const double rho = pair.map.rho();
    for (int k = 0; k < per_circle; ++k) {
      const double t = step * k;
      const Complex outer = pair.frame.from_frame(pair.map.to_physical(std::polar(1.0, t)));
      points.push_back({outer, pair.frame.second, t, PointSource::AnnulusOuter,
                        static_cast<int>(p)});
    }
    for (int k = 0; k < per_circle; ++k) {
      const double t = step * k;
      const Complex inner = pair.frame.from_frame(pair.map.to_physical(std::polar(rho, t)));
      points.push_back({inner, pair.frame.first, t, PointSource::AnnulusInner,
                        static_cast<int>(p)});
    }
  }
  return points;
}

CollocationSystem assemble(const DiscConfiguration& config, const BasisLayout& layout,
                           const std::vector<CollocationPoint>& points) {
  CollocationSystem sys;
  sys.layout = layout;
  sys.points = points;
  sys.far_field = config.far_field();
  sys.kind = config.kind();
  sys.reference_index = config.reference_index();
  sys.disc_count = config.size();
  sys.unknowns.complex_coefficients = layout.size() - 1;
  sys.unknowns.gamma_count = config.size() - 1;

  const auto rows = static_cast<Eigen::Index>(points.size());
  const auto cols = static_cast<Eigen::Index>(sys.unknowns.columns());
  if (rows < cols) {
    throw UnderdeterminedSystem("collocation system has " + std::to_string(rows) +
                                " rows for " + std::to_string(cols) + " unknowns");
  }
  sys.matrix = Eigen::MatrixXd::Zero(rows, cols);
  sys.rhs = Eigen::VectorXd::Zero(rows);

  const bool flow = config.kind() == BoundaryKind::Flow;
  const Complex U0 = config.far_field();
  std::vector<Complex> basis(layout.size());
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& pt = points[static_cast<std::size_t>(r)];
    layout.row(pt.z, basis);
    for (std::size_t i = 1; i < basis.size(); ++i) {
      const auto c = static_cast<Eigen::Index>(2 * (i - 1));
      if (flow) {
        sys.matrix(r, c) = basis[i].imag();
        sys.matrix(r, c + 1) = basis[i].real();
      } else {
        sys.matrix(r, c) = basis[i].real();
        sys.matrix(r, c + 1) = -basis[i].imag();
      }
    }
    sys.matrix(r, static_cast<Eigen::Index>(sys.unknowns.constant_column())) = 1.0;
    if (pt.disc != config.reference_index()) {
      const std::size_t g = pt.disc < config.reference_index() ? pt.disc : pt.disc - 1;
      sys.matrix(r, static_cast<Eigen::Index>(sys.unknowns.gamma_column(g))) = -1.0;
    }
    const Complex far = U0 * pt.z;
    sys.rhs[r] = flow ? -far.imag() : -far.real();
  }
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (!std::isfinite(sys.matrix(r, c))) {
        throw DomainViolation("non-finite collocation matrix entry");
      }
    }
  }
  return sys;
}

CollocationSystem assemble(const DiscConfiguration& config, SchemeKind scheme, int N,
                           int per_circle) {
  if (per_circle <= 0) per_circle = 4 * N;
  if (per_circle < 2 * N + 2) {
    throw UnderdeterminedSystem("need at least 2N + 2 collocation points per circle");
  }
  const BasisLayout layout = two_disc_layout(config, scheme, N);
  return assemble(config, layout, collocation_points(layout, per_circle));
}

SolveReport solve_least_squares(const CollocationSystem& system, double rank_tol) {
  const auto start = std::chrono::steady_clock::now();
  const auto m = static_cast<lapack_int>(system.matrix.rows());
  const auto n = static_cast<lapack_int>(system.matrix.cols());

  Eigen::MatrixXd a = system.matrix;  // dgelsd overwrites its inputs
  Eigen::VectorXd b = Eigen::VectorXd::Zero(std::max(m, n));
  b.head(m) = system.rhs;
  Eigen::VectorXd sv(std::min(m, n));
  lapack_int rank = 0;
  const lapack_int info = LAPACKE_dgelsd(LAPACK_COL_MAJOR, m, n, 1, a.data(), m, b.data(),
                                         std::max(m, n), sv.data(), rank_tol, &rank);
  if (info != 0) {
    throw DegenerateSystem("SVD least-squares solve failed (info = " + std::to_string(info) +
                           ")");
  }
  if (rank == 0 || !(sv[0] > 0.0)) {
    throw DegenerateSystem("all singular values below the rank threshold");
  }
  const Eigen::VectorXd x = b.head(n);

  const UnknownLayout& u = system.unknowns;
  Eigen::VectorXcd coeffs(static_cast<Eigen::Index>(u.complex_coefficients + 1));
  const double c0 = x[static_cast<Eigen::Index>(u.constant_column())];
  coeffs[0] = system.kind == BoundaryKind::Flow ? Complex{0.0, c0} : Complex{c0, 0.0};
  for (std::size_t i = 0; i < u.complex_coefficients; ++i) {
    const auto c = static_cast<Eigen::Index>(2 * i);
    coeffs[static_cast<Eigen::Index>(i + 1)] = {x[c], x[c + 1]};
  }

  SolveReport report;
  report.expansion = Expansion(system.layout, system.far_field, std::move(coeffs));
  report.gammas.assign(system.disc_count, 0.0);
  for (std::size_t j = 0, g = 0; j < system.disc_count; ++j) {
    if (j == system.reference_index) continue;
    report.gammas[j] = x[static_cast<Eigen::Index>(u.gamma_column(g++))];
  }
  report.residual_norm = (system.matrix * x - system.rhs).norm();
  report.rank_estimate = static_cast<int>(rank);
  report.unknowns = static_cast<std::size_t>(n);
  report.rows = static_cast<std::size_t>(m);
  report.kind = system.kind;
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ExactSolution exact_for(const DiscConfiguration& config, KEvalSettings settings) {
  if (config.size() != 2) throw InvalidInput("exact solution exists for two discs only");
  const Disc& a = config.disc(0);
  const Disc& b = config.disc(1);
  const double d = b.center.real();
  if (a.center != Complex{-d, 0.0} || b.center.imag() != 0.0 || a.radius != b.radius) {
    throw UnsupportedGeometry("exact solution needs the canonical discs at -d and +d");
  }
  // Electrostatic w equals i times the flow potential with U0 = -i E0.
  const Complex U0 = config.kind() == BoundaryKind::Flow ? config.far_field()
                                                          : Complex{0, -1} * config.far_field();
  return ExactSolution(AnnulusMap(d, a.radius), U0, settings);
}

double boundary_error(SolveReport& report, const ExactSolution& exact, int n_test) {
  if (n_test < 1) throw InvalidInput("boundary_error needs n_test >= 1");
  const AnnulusMap& map = exact.map();
  const Complex rot = report.kind == BoundaryKind::Flow ? Complex{1, 0} : Complex{0, 1};
  auto exact_w = [&](Complex z) { return rot * exact.w(z); };

  const Complex z_ref = map.to_physical(Complex{-1.0, 0.0});
  const Complex shift = report.expansion.eval(z_ref) - rot * exact.W(Complex{-1.0, 0.0});

  double worst = 0.0;
  for (const double centre : {map.d(), -map.d()}) {
    for (int k = 0; k < n_test; ++k) {
      const double t = 2.0 * M_PI * (k + 0.5) / n_test;
      const Complex z = centre + std::polar(map.s(), t);
      worst = std::max(worst, std::abs(report.expansion.eval(z) - shift - exact_w(z)));
    }
  }
  report.max_boundary_error = worst;
  return worst;
}

SolveReport solve_two_disc(const DiscConfiguration& config, SchemeKind scheme, int N,
                           int per_circle, double rank_tol, int n_test) {
  const CollocationSystem system = assemble(config, scheme, N, per_circle);
  SolveReport report = solve_least_squares(system, rank_tol);
  boundary_error(report, exact_for(config), n_test);
  return report;
}

ModesSearch modes_for_accuracy(const DiscConfiguration& config, SchemeKind scheme,
                               double target, int N_max, int step) {
  if (!(target > 0.0)) throw InvalidInput("target accuracy must be positive");
  if (step < 1) throw InvalidInput("mode step must be positive");
  ModesSearch out;
  for (int N = step; N <= N_max; N += step) {
    const SolveReport report = solve_two_disc(config, scheme, N);
    out.trace.emplace_back(N, report.max_boundary_error);
    if (report.max_boundary_error <= target) {
      out.modes = N;
      break;
    }
  }
  return out;
}

}  // namespace hybridisc
