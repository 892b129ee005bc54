// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "hybridisc/diagnostics.hpp"
#include "hybridisc/multidisc.hpp"
#include "hybridisc/solver.hpp"
#include "hybridisc/special.hpp"

using namespace hybridisc;

namespace {

const Complex kU0 = std::polar(1.0, M_PI / 4);

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = dt <= budget_s;
  const bool pass = out.pass && in_time;
  if (!pass) ++failures;
  std::printf("[%s] criterion %d: %s | %s | %.1f s (budget %.0f s%s)\n", pass ? "PASS" : "FAIL", id,
              title, out.detail.c_str(), dt, budget_s, in_time ? "" : ", exceeded");
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Random point in the closed annulus rho <= |zeta| <= 1, kept 0.05 away from
// the pole at zeta = 1.
Complex annulus_point(std::mt19937& rng, double rho) {
  std::uniform_real_distribution<double> u(0, 1);
  for (;;) {
    const Complex z = std::polar(rho + (1 - rho) * u(rng), 2 * M_PI * u(rng));
    if (std::abs(z - 1.0) >= 0.05) return z;
  }
}

double r_squared(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i] / n;
    my += y[i] / n;
  }
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy * sxy / (sxx * syy);
}

// Final solves kept for the dipole comparison.
std::vector<Expansion> solved;

DiscConfiguration gap_config(double separation) {
  return two_disc_configuration(1.0, 1.0 - 0.5 * separation, kU0);
}

}  // namespace

int main() {
  const int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  run(1, "K functional relations", 5, [] {
    std::mt19937 rng(1);
    double worst = 0;
    for (double rho : {0.3, 0.75, 0.95, 0.99}) {
      for (int i = 0; i < 1000; ++i) {
        const Complex z = annulus_point(rng, rho);
        const Complex k = k_value(z, rho);
        worst = std::max(worst, std::abs(k_value(rho * rho * z, rho) - k + 1.0));
        worst = std::max(worst, std::abs(k_value(1.0 / z, rho) + k - 1.0));
      }
    }
    return Outcome{worst <= 1e-11, "max residual " + fmt("%.2e", worst) + " (tol 1e-11)"};
  });

  run(2, "dual K representations", 5, [] {
    std::mt19937 rng(2);
    double worst = 0;
    for (double rho = 0.5; rho <= 0.97 + 1e-12; rho += 0.01) {
      for (int i = 0; i < 100; ++i) {
        const Complex z = annulus_point(rng, rho);
        worst = std::max(worst, std::abs(k_sum(z, rho) - k_modular(z, rho)));
      }
    }
    return Outcome{worst <= 1e-10, "max |K_sum - K_mod| " + fmt("%.2e", worst) + " (tol 1e-10)"};
  });

  run(3, "exact solution normalisation and boundary values", 5, [] {
    double w_at_minus_one = 0, spread = 0;
    for (double s : {0.99, 0.999}) {
      const ExactSolution sol(AnnulusMap(1.0, s), kU0);
      w_at_minus_one = std::max(w_at_minus_one, std::abs(sol.W(-1.0)));
      for (double radius : {1.0, sol.map().rho()}) {
        std::vector<double> v(1024);
        double mean = 0;
        for (int k = 0; k < 1024; ++k) {
          v[k] = sol.W(std::polar(radius, 2 * M_PI * (k + 0.5) / 1024)).imag();
          mean += v[k] / 1024;
        }
        for (double x : v) spread = std::max(spread, std::abs(x - mean));
      }
    }
    return Outcome{w_at_minus_one <= 1e-10 && spread <= 1e-10,
                   "|W(-1)| " + fmt("%.2e", w_at_minus_one) + ", max |Im W - mean| " +
                       fmt("%.2e", spread) + " (tol 1e-10)"};
  });

  run(4, "first Laurent coefficients match the log strength", 10, [] {
    double worst = 0;
    for (double s : {0.9, 0.99, 0.999}) {
      const ExactSolution sol(AnnulusMap(1.0, s), kU0);
      const auto oc = omega_coeffs(sol, 64);
      const Complex L = sol.log_strength();
      worst = std::max(worst, std::abs(s * oc.c[0] - L) / std::abs(L));
      worst = std::max(worst, std::abs(s * oc.d[0] + L) / std::abs(L));
    }
    return Outcome{worst <= 1e-10, "max relative mismatch " + fmt("%.2e", worst) + " (tol 1e-10)"};
  });

  run(5, "hybrid needs at most a fifth of the z-scheme modes at s = 0.99", 300, [] {
    const auto config = two_disc_configuration(1.0, 0.99, kU0);
    const auto hybrid = modes_for_accuracy(config, SchemeKind::Hybrid, 1e-6, 300, 5);
    const auto z = modes_for_accuracy(config, SchemeKind::ZScheme, 1e-6, 300, 5);
    if (hybrid.modes) solved.push_back(solve_two_disc(config, SchemeKind::Hybrid, *hybrid.modes).expansion);
    if (z.modes) solved.push_back(solve_two_disc(config, SchemeKind::ZScheme, *z.modes).expansion);
    const bool pass = hybrid.modes && (!z.modes || 5 * *hybrid.modes <= *z.modes);
    const std::string zs = z.modes ? std::to_string(*z.modes) : std::string("not reached by 300");
    const std::string hs = hybrid.modes ? std::to_string(*hybrid.modes) : std::string("not reached");
    return Outcome{pass, "hybrid N* " + hs + ", z-scheme N* " + zs};
  });

  run(6, "hybrid reaches 1e-6 with N <= 140 at separation 1e-6", 600, [] {
    const auto config = gap_config(1e-6);
    const auto found = modes_for_accuracy(config, SchemeKind::Hybrid, 1e-6, 140, 5);
    if (found.modes) solved.push_back(solve_two_disc(config, SchemeKind::Hybrid, *found.modes).expansion);
    const double last = found.trace.back().second;
    return Outcome{found.modes.has_value(),
                   found.modes ? "N* " + std::to_string(*found.modes)
                               : "not reached; error at N=140 is " + fmt("%.2e", last)};
  });

  const std::vector<double> seps{1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
  std::vector<SeparationModes> nine;
  run(7, "nine-disc dipole table", 900, [&] {
    const double table[] = {0.39194, 0.43722, 0.44964, 0.45337, 0.45453, 0.45490};
    const int listed[] = {5, 8, 15, 20, 25, 35};
    nine = modes_vs_separation(
        [](double sep, int N) { return nine_disc_problem(sep, N); }, 1e-4, seps, ModesScan{},
        threads);
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < nine.size(); ++i) {
      const auto& row = nine[i];
      const bool ok = row.modes && std::abs(row.dipole_magnitude - table[i]) <= 1e-4 &&
                      *row.modes <= 2 * listed[i];
      pass = pass && ok;
      detail += fmt("%.0e:", row.separation) +
                (row.modes ? fmt("%.5f", row.dipole_magnitude) + "@N=" + std::to_string(*row.modes)
                           : std::string("NA")) +
                (ok ? " " : "(x) ");
      if (row.modes) solved.push_back(solve_multidisc(nine_disc_problem(row.separation, *row.modes)).expansion);
    }
    return Outcome{pass, detail + "(tol 1e-4, N <= 2x listed)"};
  });

  run(8, "linear growth of modes in -log10(separation)", 900, [&] {
    std::vector<double> x;
    std::vector<double> two, multi;
    std::string detail = "two-disc N*";
    bool complete = true;
    for (std::size_t i = 0; i < 5; ++i) {
      x.push_back(-std::log10(seps[i]));
      const auto found = modes_for_accuracy(gap_config(seps[i]), SchemeKind::Hybrid, 1e-6, 300, 5);
      complete = complete && found.modes && nine.size() > i && nine[i].modes;
      two.push_back(found.modes ? *found.modes : NAN);
      multi.push_back(nine.size() > i && nine[i].modes ? *nine[i].modes : NAN);
      detail += " " + (found.modes ? std::to_string(*found.modes) : std::string("NA"));
    }
    if (!complete) return Outcome{false, detail + "; incomplete table"};
    const bool mono = std::is_sorted(two.begin(), two.end()) && std::is_sorted(multi.begin(), multi.end());
    const double r2_two = r_squared(x, two), r2_multi = r_squared(x, multi);
    detail += " R^2 " + fmt("%.3f", r2_two) + "; nine-disc modes";
    for (double m : multi) detail += " " + std::to_string(static_cast<int>(m));
    detail += " R^2 " + fmt("%.3f", r2_multi) + (mono ? "; monotone" : "; not monotone") +
              " (need R^2 >= 0.95 on both)";
    return Outcome{mono && r2_two >= 0.95 && r2_multi >= 0.95, detail};
  });

  run(9, "closed-form dipole against contour quadrature", 10, [] {
    auto mismatch = [](const Expansion& e) {
      double reach = 0;
      for (const auto& d : e.layout().discs()) reach = std::max(reach, std::abs(d.center) + d.radius);
      return std::abs(e.far_field_dipole() - dipole_quadrature(e, 4 * reach, 1024));
    };
    double worst_solved = 0, worst_random = 0;
    for (const auto& e : solved) worst_solved = std::max(worst_solved, mismatch(e));
    std::mt19937 rng(9);
    std::normal_distribution<double> g;
    const auto nine_cfg = nine_disc_array(0.4, 1e-3, 1.0);
    const std::vector<BasisLayout> layouts{
        two_disc_layout(two_disc_configuration(1.0, 0.99, kU0), SchemeKind::Hybrid, 10),
        two_disc_layout(two_disc_configuration(1.0, 0.9, kU0), SchemeKind::ZScheme, 10),
        two_disc_layout(two_disc_configuration(1.0, 0.999, kU0), SchemeKind::ZetaScheme, 10),
        BasisLayout(nine_cfg.discs(), close_pairs(nine_cfg, 0.1), SchemeKind::Hybrid, 6)};
    for (int trial = 0; trial < 50; ++trial) {
      const auto& layout = layouts[static_cast<std::size_t>(trial) % layouts.size()];
      Eigen::VectorXcd c(static_cast<Eigen::Index>(layout.size()));
      for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = {g(rng), g(rng)};
      worst_random = std::max(worst_random, mismatch(Expansion(layout, kU0, c)));
    }
    return Outcome{!solved.empty() && worst_solved <= 1e-8 && worst_random <= 1e-8,
                   std::to_string(solved.size()) + " solved cases max " + fmt("%.2e", worst_solved) +
                       ", 50 random max " + fmt("%.2e", worst_random) + " (tol 1e-8)"};
  });

  run(10, "two-scale decay ordering", 120, [] {
    const std::vector<double> radii{0.99, 0.999, 0.9999};
    std::vector<double> T, omega_sup, ratio2, ratio3, hyb2, single2;
    double recon = 0;
    for (double s : radii) {
      const AnnulusMap map(1.0, s);
      T.push_back(map.T());
      omega_sup.push_back(decay_profile(omega_coeffs(ExactSolution(map, kU0), 512).c, map.T(), 1).sups[1]);
      const auto split = hybrid_split_w21(map, CutoffSpec{std::sqrt(map.T()), false}, 4096);
      recon = std::max(recon, split_reconstruction_error(map, split));
      const auto pa = decay_profile(std::vector<double>(split.a.begin() + 1, split.a.end()), map.T(), 3);
      const auto pb = decay_profile(std::vector<double>(split.b.begin() + 1, split.b.end()), map.T(), 3);
      const auto pw = decay_profile(w21_zeta_coefficients(map, 1 << 16), map.T(), 3);
      const double h2 = std::max(pa.sups[2], pb.sups[2]);
      const double h3 = std::max(pa.sups[3], pb.sups[3]);
      hyb2.push_back(h2);
      single2.push_back(pw.sups[2]);
      ratio2.push_back(h2 / pw.sups[2]);
      ratio3.push_back(h3 / pw.sups[3]);
    }
    // (a) across the decade s = 0.99 -> 0.9999
    const double sup_ratio = omega_sup[2] / omega_sup[0];
    const double t_ratio = T[0] / T[2];
    const bool a = sup_ratio >= t_ratio / 3 && sup_ratio <= 3 * t_ratio;
    // (b) hybrid/single ratio at k = 2 must fall strictly as T decreases
    const bool b = ratio2[1] < ratio2[0] && ratio2[2] < ratio2[1];
    const bool c = recon <= 1e-9;
    std::string detail = "(a) k=1 sup ratio " + fmt("%.3f", sup_ratio) + " vs 1/T ratio " +
                         fmt("%.2f", t_ratio) + (a ? " ok" : " FAIL") + "; (b) k=2 hybrid/single";
    for (double r : ratio2) detail += " " + fmt("%.3f", r);
    detail += " growth " + fmt("%.2f", hyb2[2] / hyb2[0]) + "x vs " + fmt("%.2f", single2[2] / single2[0]) +
              "x" + (b ? " ok" : " FAIL") + " [k=3 info:";
    for (double r : ratio3) detail += " " + fmt("%.3f", r);
    detail += "]; (c) reconstruction " + fmt("%.2e", recon) + (c ? " ok" : " FAIL");
    return Outcome{a && b && c, detail};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
