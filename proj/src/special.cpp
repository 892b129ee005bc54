#include "hybridisc/special.hpp"

#include <cmath>
#include <string>

#include "hybridisc/errors.hpp"

namespace hybridisc {

namespace {

void check_rho(double rho) {
  if (!(rho > 0.0) || !(rho < 1.0)) {
    throw InvalidInput("rho must lie in (0, 1), got " + std::to_string(rho));
  }
}

void check_zeta(Complex zeta) {
  if (zeta == Complex{}) throw InvalidInput("zeta = 0 is outside the domain of K");
  if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag())) {
    throw InvalidInput("zeta must be finite");
  }
}

// exp(z) - 1 without cancellation for small |z|.
Complex expm1(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

double modular_T(double rho) { return -std::log1p(rho - 1.0) / M_PI; }

// log(chi) = i log(zeta)/T on the principal branch of log(zeta).
Complex log_chi(Complex zeta, double T) {
  return Complex{-std::arg(zeta), std::log(std::abs(zeta))} / T;
}

}  // namespace

Complex prime_p(Complex zeta, double rho, const KEvalSettings& settings) {
  check_rho(rho);
  check_zeta(zeta);
  const double reach = std::max(std::abs(zeta), 1.0 / std::abs(zeta));
  const Complex inv = 1.0 / zeta;
  const double rho2 = rho * rho;
  Complex product = 1.0 - zeta;
  double r = rho2;
  for (long k = 1; k <= settings.max_terms; ++k) {
    product *= (1.0 - r * zeta) * (1.0 - r * inv);
    if (r * reach < settings.tol) return product;
    r *= rho2;
  }
  throw ConvergenceFailure("prime function product not converged within max_terms");
}

Complex k_sum(Complex zeta, double rho, const KEvalSettings& settings) {
  check_rho(rho);
  check_zeta(zeta);
  const double reach = std::max(std::abs(zeta), 1.0 / std::abs(zeta));
  const Complex inv = 1.0 / zeta;
  const double rho2 = rho * rho;
  Complex total = -zeta / (1.0 - zeta);
  double r = rho2;
  for (long k = 1; k <= settings.max_terms; ++k) {
    const Complex a = r * zeta;
    const Complex b = r * inv;
    total += -a / (1.0 - a) + b / (1.0 - b);
    if (r * reach < settings.tol) return total;
    r *= rho2;
  }
  throw ConvergenceFailure("K partial-fraction sum not converged within max_terms");
}

Complex k_log_derivative_sum(Complex zeta, double rho, const KEvalSettings& settings) {
  check_rho(rho);
  check_zeta(zeta);
  const double reach = std::max(std::abs(zeta), 1.0 / std::abs(zeta));
  const Complex inv = 1.0 / zeta;
  const double rho2 = rho * rho;
  Complex total = -zeta / ((1.0 - zeta) * (1.0 - zeta));
  double r = rho2;
  for (long k = 1; k <= settings.max_terms; ++k) {
    const Complex a = r * zeta;
    const Complex b = r * inv;
    total -= a / ((1.0 - a) * (1.0 - a)) + b / ((1.0 - b) * (1.0 - b));
    if (r * reach < settings.tol) return total;
    r *= rho2;
  }
  throw ConvergenceFailure("zeta K' sum not converged within max_terms");
}

Complex k_modular(Complex zeta, double rho, const KEvalSettings& settings) {
  check_rho(rho);
  check_zeta(zeta);
  const double T = modular_T(rho);
  const Complex I{0.0, 1.0};
  const Complex xi = Complex{std::log(std::abs(zeta)), std::arg(zeta)} / M_PI;
  const Complex X = log_chi(zeta, T);

  // chi/(chi - 1), written in whichever of chi, 1/chi is bounded by one.
  Complex lead;
  if (X.real() > 0.0) {
    lead = -1.0 / expm1(-X);
  } else {
    lead = std::exp(X) / expm1(X);
  }

  const double step = 2.0 * M_PI / T;
  Complex series{};
  for (long m = 1; m <= settings.max_terms; ++m) {
    const double decay = -step * static_cast<double>(m);
    const Complex x = std::exp(decay - X);  // mu^m / chi
    const Complex y = std::exp(decay + X);  // mu^m chi
    series += x / (1.0 - x) - y / (1.0 - y);
    if (std::max(std::abs(x), std::abs(y)) < settings.tol) {
      return xi / (2.0 * T) + (0.5 - I / (2.0 * T)) + (I / T) * (lead + series);
    }
  }
  throw ConvergenceFailure("K modular series not converged within max_terms");
}

Complex k_log_derivative_modular(Complex zeta, double rho, const KEvalSettings& settings) {
  check_rho(rho);
  check_zeta(zeta);
  const double T = modular_T(rho);
  const Complex X = log_chi(zeta, T);

  // chi/(chi - 1)^2 is symmetric under chi -> 1/chi.
  const Complex Xs = X.real() > 0.0 ? -X : X;
  const Complex em1 = expm1(Xs);
  const Complex lead = std::exp(Xs) / (em1 * em1);

  const double step = 2.0 * M_PI / T;
  Complex series{};
  for (long m = 1; m <= settings.max_terms; ++m) {
    const double decay = -step * static_cast<double>(m);
    const Complex x = std::exp(decay - X);
    const Complex y = std::exp(decay + X);
    series += x / ((1.0 - x) * (1.0 - x)) + y / ((1.0 - y) * (1.0 - y));
    if (std::max(std::abs(x), std::abs(y)) < settings.tol) {
      return 1.0 / (2.0 * M_PI * T) + (lead + series) / (T * T);
    }
  }
  throw ConvergenceFailure("zeta K' modular series not converged within max_terms");
}

Complex k_value(Complex zeta, double rho, const KEvalSettings& settings) {
  check_rho(rho);
  return rho <= settings.rho_switch ? k_sum(zeta, rho, settings)
                                    : k_modular(zeta, rho, settings);
}

Complex k_log_derivative(Complex zeta, double rho, const KEvalSettings& settings) {
  check_rho(rho);
  return rho <= settings.rho_switch ? k_log_derivative_sum(zeta, rho, settings)
                                    : k_log_derivative_modular(zeta, rho, settings);
}

// ---------------------------------------------------------------------------

ExactSolution::ExactSolution(AnnulusMap map, Complex far_field, KEvalSettings settings)
    : map_(map), U0_(far_field), settings_(settings) {}

Complex ExactSolution::W(Complex zeta) const {
  const double rho = map_.rho();
  const double sr = map_.sqrt_rho();
  const double inv_sr = 1.0 / sr;
  const double twoA = 2.0 * map_.A();
  const Complex outer = k_value(Complex{inv_sr, 0.0}, rho, settings_) -
                        k_value(-zeta * inv_sr, rho, settings_);
  const Complex inner =
      k_value(Complex{sr, 0.0}, rho, settings_) - k_value(-zeta * sr, rho, settings_);
  return -twoA * U0_ * outer + twoA * std::conj(U0_) * inner;
}

Complex ExactSolution::w(Complex z) const { return W(map_.to_annulus(z)); }

Complex ExactSolution::dw_dz(Complex z) const {
  const Complex zeta = map_.to_annulus(z);
  const double rho = map_.rho();
  const double sr = map_.sqrt_rho();
  const double twoA = 2.0 * map_.A();
  const Complex zeta_dW = twoA * U0_ * k_log_derivative(-zeta / sr, rho, settings_) -
                          twoA * std::conj(U0_) * k_log_derivative(-zeta * sr, rho, settings_);
  return zeta_dW * map_.log_derivative(z);
}

Complex ExactSolution::log_strength() const {
  return map_.A() * (U0_ - std::conj(U0_)) / (M_PI * map_.T());
}

Complex ExactSolution::omega(Complex z) const {
  const double A = map_.A();
  return dw_dz(z) - U0_ + 2.0 * A * log_strength() / ((z - A) * (z + A));
}

Complex ExactSolution::w2_log_part(Complex z) const {
  return log_strength() * (w22(map_, z) - w21(map_, z));
}

Complex w21(const AnnulusMap& map, Complex z) {
  return std::log(1.0 + map.sqrt_rho() * map.s() / (z - map.d()));
}

Complex w22(const AnnulusMap& map, Complex z) {
  return std::log(1.0 - map.sqrt_rho() * map.s() / (z + map.d()));
}

OmegaCoefficients omega_coeffs(const ExactSolution& sol, int j_max, int n_quad) {
  if (j_max < 1) throw InvalidInput("omega_coeffs needs j_max >= 1");
  if (n_quad <= 0) n_quad = std::max(1024, 8 * j_max);
  if (n_quad < 4 * j_max) throw InvalidInput("omega_coeffs needs n_quad >= 4 j_max");

  const double d = sol.map().d();
  const double s = sol.map().s();
  std::vector<Complex> right(n_quad);
  std::vector<Complex> left(n_quad);
  for (int m = 0; m < n_quad; ++m) {
    const double theta = 2.0 * M_PI * m / n_quad;
    const Complex e = std::polar(1.0, theta);
    right[m] = sol.omega(d + s * std::conj(e));
    left[m] = sol.omega(-d - s * e);
  }

  OmegaCoefficients out;
  out.c.assign(j_max, Complex{});
  out.d.assign(j_max, Complex{});
  for (int j = 1; j <= j_max; ++j) {
    Complex cj{};
    Complex dj{};
    for (int m = 0; m < n_quad; ++m) {
      // exponent j m reduced mod n_quad keeps the node angle exact
      const long phase = (static_cast<long>(j) * m) % n_quad;
      const Complex e = std::polar(1.0, 2.0 * M_PI * static_cast<double>(phase) / n_quad);
      cj += right[m] * std::conj(e);
      dj += left[m] * e;
    }
    out.c[j - 1] = cj / static_cast<double>(n_quad);
    out.d[j - 1] = (j % 2 == 0 ? 1.0 : -1.0) * dj / static_cast<double>(n_quad);
  }
  return out;
}

}  // namespace hybridisc
