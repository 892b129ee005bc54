#include "hybridisc/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <unsupported/Eigen/FFT>

#include "hybridisc/errors.hpp"
#include "hybridisc/special.hpp"

namespace hybridisc {

DecayProfile decay_profile(const std::vector<Complex>& coefficients, double T, int k_max,
                           int first_order) {
  if (coefficients.empty()) throw InvalidInput("decay profile needs coefficients");
  if (k_max < 0) throw InvalidInput("k_max must be non-negative");
  if (first_order < 0) throw InvalidInput("first order must be non-negative");
  DecayProfile profile;
  profile.coefficients = coefficients;
  profile.first_order = first_order;
  profile.T = T;
  profile.sups.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const double j = static_cast<double>(first_order) + static_cast<double>(i);
    const double mag = std::abs(coefficients[i]);
    for (int k = 0; k <= k_max; ++k) {
      const double weighted = (k == 0 ? 1.0 : std::pow(j, k)) * mag;
      auto& sup = profile.sups[static_cast<std::size_t>(k)];
      sup = std::max(sup, weighted);
    }
  }
  return profile;
}

DecayProfile decay_profile(const std::vector<double>& coefficients, double T, int k_max,
                           int first_order) {
  return decay_profile(std::vector<Complex>(coefficients.begin(), coefficients.end()), T,
                       k_max, first_order);
}

void write_decay_csv(std::ostream& os, const DecayProfile& profile) {
  os << "j,abs_coef";
  for (std::size_t k = 0; k < profile.sups.size(); ++k) os << ",w" << k;
  os << '\n';
  char buf[64];
  for (std::size_t i = 0; i < profile.coefficients.size(); ++i) {
    const int j = profile.first_order + static_cast<int>(i);
    const double mag = std::abs(profile.coefficients[i]);
    std::snprintf(buf, sizeof buf, "%d,%.15e", j, mag);
    os << buf;
    for (std::size_t k = 0; k < profile.sups.size(); ++k) {
      std::snprintf(buf, sizeof buf, ",%.15e", std::pow(static_cast<double>(j), k) * mag);
      os << buf;
    }
    os << '\n';
  }
}

void CutoffSpec::validate() const {
  if (disabled) return;
  if (!(delta > 0.0 && delta < M_PI / 2)) {
    throw InvalidInput("cut-off width must lie in (0, pi/2)");
  }
}

namespace {

double bump(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

// 0 for x <= 0, 1 for x >= 1.
double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double f = bump(x);
  return f / (f + bump(1.0 - x));
}

// Real-data cosine coefficients c_0 + sum 2 Re(X_j/n) cos(j t) for samples at t = 2 pi k/n.
std::vector<double> cosine_coefficients(const std::vector<double>& samples, int j_max) {
  Eigen::FFT<double> fft;
  std::vector<Complex> spectrum;
  fft.fwd(spectrum, samples);
  const double n = static_cast<double>(samples.size());
  std::vector<double> out(static_cast<std::size_t>(j_max) + 1);
  out[0] = spectrum[0].real() / n;
  for (int j = 1; j <= j_max; ++j) out[static_cast<std::size_t>(j)] = 2.0 * spectrum[j].real() / n;
  return out;
}

}  // namespace

double cutoff_phi(const CutoffSpec& spec, double nu) {
  if (spec.disabled) return 0.0;
  const double x = std::abs(nu);
  return smooth_step((2.0 * spec.delta - x) / spec.delta);
}

double HybridSplit::real_part(const AnnulusMap& map, Complex z) const {
  const Complex zeta = map.to_annulus(z);
  const Complex eta = map.s() / (z - map.d());
  double total = 0.0;
  Complex zp{1.0, 0.0};
  for (const double aj : a) {
    total += aj * zp.real();
    zp *= zeta;
  }
  Complex ep{1.0, 0.0};
  for (const double bj : b) {
    total += bj * ep.real();
    ep *= eta;
  }
  return total;
}

HybridSplit hybrid_split_w21(const AnnulusMap& map, const CutoffSpec& spec, int j_max) {
  spec.validate();
  if (j_max < 64 || j_max > kSplitSamples / 4) {
    throw InvalidInput("j_max must lie in [64, samples/4]");
  }
  const int n = kSplitSamples;
  std::vector<double> h(n), h2(n);
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * M_PI * k / n;
    // omega1 side: zeta = -e^{i nu}, nu = t.
    const double nu = t <= M_PI ? t : t - 2.0 * M_PI;
    const Complex z = map.to_physical(-std::polar(1.0, nu));
    h[k] = (1.0 - cutoff_phi(spec, nu)) * w21(map, z).real();
    // omega2 side: z = d + s e^{i t}, i.e. theta = -t.
    const Complex zc = map.d() + std::polar(map.s(), t);
    const double nu_c = map.nu_from_theta(t <= M_PI ? -t : 2.0 * M_PI - t);
    h2[k] = cutoff_phi(spec, nu_c) * w21(map, zc).real();
  }
  HybridSplit split;
  split.T = map.T();
  split.cutoff = spec;
  split.a = cosine_coefficients(h, j_max);
  for (std::size_t j = 1; j < split.a.size(); j += 2) split.a[j] = -split.a[j];
  split.b = cosine_coefficients(h2, j_max);
  return split;
}

double split_reconstruction_error(const AnnulusMap& map, const HybridSplit& split,
                                  int n_test) {
  if (n_test < 1) throw InvalidInput("need at least one test point");
  double worst = 0.0;
  for (int k = 0; k < n_test; ++k) {
    const double nu = -M_PI + 2.0 * M_PI * (k + 0.5) / n_test;
    const Complex z = map.to_physical(-std::polar(1.0, nu));
    worst = std::max(worst, std::abs(split.real_part(map, z) - w21(map, z).real()));
  }
  return worst;
}

std::vector<double> w21_zeta_coefficients(const AnnulusMap& map, int j_max) {
  if (j_max < 1) throw InvalidInput("j_max must be positive");
  std::vector<double> out(static_cast<std::size_t>(j_max));
  const double r = map.sqrt_rho();
  double p = 1.0;
  for (int j = 1; j <= j_max; ++j) {
    p *= -r;
    out[static_cast<std::size_t>(j - 1)] = p / j;
  }
  return out;
}

}  // namespace hybridisc
