#include "experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "hybridisc/diagnostics.hpp"
#include "hybridisc/errors.hpp"
#include "hybridisc/multidisc.hpp"
#include "hybridisc/solver.hpp"
#include "hybridisc/special.hpp"

namespace hybridisc::cli {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15e", v);
  return buf;
}

// Runs body(i) for i in [0, n) on up to `threads` workers. Exceptions are
// rethrown in index order after every worker has stopped.
template <typename F>
void parallel_for(std::size_t n, int threads, F body) {
  std::vector<std::exception_ptr> failures(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const auto count = static_cast<std::size_t>(std::max(1, threads));
  for (std::size_t t = 1; t < std::min(count, n); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

json report_json(const SolveReport& r) {
  json gammas = json::array();
  for (double g : r.gammas) gammas.push_back(g);
  json coeffs = json::array();
  for (const Complex& c : r.expansion.coefficients()) coeffs.push_back({c.real(), c.imag()});
  return {{"scheme", to_string(r.expansion.scheme())},
          {"modes", r.expansion.layout().truncation()},
          {"rows", r.rows},
          {"unknowns", r.unknowns},
          {"rank", r.rank_estimate},
          {"residual_norm", r.residual_norm},
          {"max_boundary_error", r.max_boundary_error},
          {"wall_time", r.wall_time},
          {"gammas", gammas},
          {"coefficients", coeffs}};
}

DiscConfiguration two_disc(const ExperimentConfig& cfg, double s) {
  return two_disc_configuration(cfg.d, s, cfg.far_field, cfg.boundary);
}

struct Output {
  std::string csv;
  json reports = json::array();
};

Output run_two_disc_error(const ExperimentConfig& cfg, int threads, bool dump) {
  struct Cell {
    SchemeKind scheme;
    int N;
  };
  std::vector<Cell> cells;
  for (SchemeKind scheme : cfg.schemes) {
    for (int N : cfg.modes) cells.push_back({scheme, N});
  }
  std::vector<SolveReport> reports(cells.size());
  const DiscConfiguration config = two_disc(cfg, cfg.s);
  parallel_for(cells.size(), threads, [&](std::size_t i) {
    reports[i] = solve_two_disc(config, cells[i].scheme, cells[i].N, cfg.points_per_circle,
                                cfg.rank_tol, cfg.test_points);
  });
  Output out;
  out.csv = "scheme,N,max_error\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out.csv += to_string(cells[i].scheme) + "," + std::to_string(cells[i].N) + "," +
               fmt(reports[i].max_boundary_error) + "\n";
    if (dump) out.reports.push_back(report_json(reports[i]));
  }
  return out;
}

Output run_modes_vs_separation(const ExperimentConfig& cfg, int threads, bool dump) {
  struct Cell {
    SchemeKind scheme;
    double separation;
  };
  std::vector<Cell> cells;
  for (SchemeKind scheme : cfg.schemes) {
    for (double sep : cfg.separations) cells.push_back({scheme, sep});
  }
  std::vector<ModesSearch> found(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t i) {
    // Separation is the gap 2(d - s) between the two discs.
    const DiscConfiguration config = two_disc(cfg, cfg.d - 0.5 * cells[i].separation);
    found[i] = modes_for_accuracy(config, cells[i].scheme, cfg.target, cfg.modes_max,
                                  cfg.modes_step);
  });
  Output out;
  out.csv = "scheme,separation,modes\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& m = found[i].modes;
    out.csv += to_string(cells[i].scheme) + "," + fmt(cells[i].separation) + "," +
               (m ? std::to_string(*m) : std::string("NA")) + "\n";
    if (dump) {
      json trace = json::array();
      for (const auto& [n, err] : found[i].trace) trace.push_back({n, err});
      out.reports.push_back({{"scheme", to_string(cells[i].scheme)},
                             {"separation", cells[i].separation},
                             {"trace", trace}});
    }
  }
  return out;
}

Output run_nine_disc(const ExperimentConfig& cfg, int threads, bool dump) {
  auto make = [&](double sep, int N) {
    MultiDiscProblem p = nine_disc_problem(sep, N, cfg.far_field, cfg.boundary);
    p.points_per_circle = cfg.points_per_circle;
    p.rank_tol = cfg.rank_tol;
    return p;
  };
  ModesScan scan;
  scan.last = cfg.modes_max;
  scan.lookahead = cfg.lookahead;
  const double target = cfg.target;
  const auto rows = modes_vs_separation(make, target, cfg.separations, scan, threads);
  Output out;
  out.csv = "separation,dipole_magnitude,modes\n";
  for (const auto& row : rows) {
    out.csv += fmt(row.separation) + "," + (row.modes ? fmt(row.dipole_magnitude) : "NA") + "," +
               (row.modes ? std::to_string(*row.modes) : std::string("NA")) + "\n";
    if (dump && row.modes) {
      json r = report_json(solve_multidisc(make(row.separation, *row.modes)));
      r["separation"] = row.separation;
      json trace = json::array();
      for (const auto& [n, mag] : row.trace) trace.push_back({n, mag});
      r["trace"] = trace;
      out.reports.push_back(r);
    }
  }
  return out;
}

Output run_exact_eval(const ExperimentConfig& cfg) {
  const DiscConfiguration config = two_disc(cfg, cfg.s);
  const ExactSolution exact = exact_for(config);
  const Complex rot = cfg.boundary == BoundaryKind::Flow ? Complex{1, 0} : Complex{0, 1};
  std::vector<Complex> points = cfg.points;
  for (int k = 0; k < cfg.boundary_samples; ++k) {
    const double t = 2.0 * M_PI * k / cfg.boundary_samples;
    for (const Disc& disc : config.discs()) points.push_back(disc.center + std::polar(disc.radius, t));
  }
  Output out;
  out.csv = "x,y,re_w,im_w,re_dw,im_dw\n";
  for (const Complex& z : points) {
    const Complex w = rot * exact.w(z);
    const Complex dw = rot * exact.dw_dz(z);
    out.csv += fmt(z.real()) + "," + fmt(z.imag()) + "," + fmt(w.real()) + "," + fmt(w.imag()) +
               "," + fmt(dw.real()) + "," + fmt(dw.imag()) + "\n";
  }
  return out;
}

Output run_decay(const ExperimentConfig& cfg) {
  Output out;
  out.csv = "s,T,k,omega_c,omega_d,split_omega1,split_omega2,single_zeta\n";
  for (double s : cfg.radii) {
    const AnnulusMap map(cfg.d, s);
    const ExactSolution exact(map, cfg.far_field);
    const OmegaCoefficients oc = omega_coeffs(exact, cfg.j_max);
    CutoffSpec spec;
    spec.delta = cfg.cutoff > 0 ? cfg.cutoff : std::sqrt(map.T());
    const HybridSplit split = hybrid_split_w21(map, spec, std::max(cfg.j_max, 4096));
    const auto pc = decay_profile(oc.c, map.T(), cfg.k_max);
    const auto pd = decay_profile(oc.d, map.T(), cfg.k_max);
    const auto pa = decay_profile(std::vector<double>(split.a.begin() + 1, split.a.end()),
                                  map.T(), cfg.k_max);
    const auto pb = decay_profile(std::vector<double>(split.b.begin() + 1, split.b.end()),
                                  map.T(), cfg.k_max);
    const auto pw = decay_profile(w21_zeta_coefficients(map, 1 << 20), map.T(), cfg.k_max);
    for (int k = 0; k <= cfg.k_max; ++k) {
      const auto K = static_cast<std::size_t>(k);
      out.csv += fmt(s) + "," + fmt(map.T()) + "," + std::to_string(k) + "," + fmt(pc.sups[K]) +
                 "," + fmt(pd.sups[K]) + "," + fmt(pa.sups[K]) + "," + fmt(pb.sups[K]) + "," +
                 fmt(pw.sups[K]) + "\n";
    }
  }
  return out;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg, int threads, bool dump_reports) {
  Output out;
  switch (cfg.kind) {
    case ExperimentKind::TwoDiscError: out = run_two_disc_error(cfg, threads, dump_reports); break;
    case ExperimentKind::ModesVsSeparation:
      out = run_modes_vs_separation(cfg, threads, dump_reports);
      break;
    case ExperimentKind::NineDiscDipole: out = run_nine_disc(cfg, threads, dump_reports); break;
    case ExperimentKind::ExactEval: out = run_exact_eval(cfg); break;
    case ExperimentKind::DecayDiagnostics: out = run_decay(cfg); break;
  }
  RunResult result;
  result.csv = std::move(out.csv);
  if (dump_reports) result.reports_json = out.reports.dump(2) + "\n";
  return result;
}

}  // namespace hybridisc::cli
