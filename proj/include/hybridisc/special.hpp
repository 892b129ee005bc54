#pragma once

#include <complex>
#include <vector>

#include "hybridisc/conformal.hpp"

namespace hybridisc {

using Complex = std::complex<double>;

/// Truncation controls for P and K.
///
/// K is evaluated from its geometric sum when rho <= rho_switch (terms decay
/// like rho^{2k}) and from the modular series otherwise (terms decay like
/// exp(-2 pi m / T)).
struct KEvalSettings {
  double tol = 1e-14;
  double rho_switch = 0.8;
  long max_terms = 1'000'000;
};

/// P(zeta, rho) = (1 - zeta) prod_{k>=1} (1 - rho^{2k} zeta)(1 - rho^{2k}/zeta).
/// Throws ConvergenceFailure when the product is not converged after max_terms factors.
Complex prime_p(Complex zeta, double rho, const KEvalSettings& settings = {});

/// K = zeta P'(zeta)/P(zeta) from its partial-fraction sum.
Complex k_sum(Complex zeta, double rho, const KEvalSettings& settings = {});

/// K from the series in mu = exp(-2 pi/T) and chi = exp(i log(zeta)/T), using the
/// principal branch of log(zeta) so every exponential stays bounded.
Complex k_modular(Complex zeta, double rho, const KEvalSettings& settings = {});

/// Dispatches to k_sum or k_modular according to settings.rho_switch.
Complex k_value(Complex zeta, double rho, const KEvalSettings& settings = {});

/// zeta K'(zeta); invariant under zeta -> rho^2 zeta and zeta -> 1/zeta.
Complex k_log_derivative_sum(Complex zeta, double rho, const KEvalSettings& settings = {});
Complex k_log_derivative_modular(Complex zeta, double rho,
                                 const KEvalSettings& settings = {});
Complex k_log_derivative(Complex zeta, double rho, const KEvalSettings& settings = {});

/// Exact uniform-flow potential past the two discs of `map`, normalised so
/// that W(zeta = -1) = 0. Im W is constant on each boundary circle.
class ExactSolution {
 public:
  ExactSolution(AnnulusMap map, Complex far_field, KEvalSettings settings = {});

  const AnnulusMap& map() const { return map_; }
  Complex far_field() const { return U0_; }
  const KEvalSettings& settings() const { return settings_; }

  /// W as a function of the annulus variable.
  Complex W(Complex zeta) const;
  /// w(z) = W(zeta(z)).
  Complex w(Complex z) const;
  /// dw/dz at a physical point.
  Complex dw_dz(Complex z) const;

  /// dw/dz - U0 + 2A^2 (U0 - conj U0) / (pi T (z^2 - A^2)); analytic in the
  /// exterior and vanishing at infinity.
  Complex omega(Complex z) const;

  /// A (U0 - conj U0) / (pi T), the strength of the logarithmic part.
  Complex log_strength() const;

  /// Logarithmic part [log((z-d)/(z-A)) + log((z+A)/(z+d))] * log_strength().
  Complex w2_log_part(Complex z) const;

 private:
  AnnulusMap map_;
  Complex U0_;
  KEvalSettings settings_;
};

/// log(1 + sqrt(rho) s/(z - d)) = log((z - A)/(z - d)), cut inside the disc at +d.
Complex w21(const AnnulusMap& map, Complex z);
/// log(1 - sqrt(rho) s/(z + d)) = log((z + A)/(z + d)), cut inside the disc at -d.
Complex w22(const AnnulusMap& map, Complex z);

/// Laurent coefficients of omega about the two centres,
///   omega = sum_j c_j s^j/(z-d)^j + sum_j d_j s^j/(z+d)^j,
/// stored with index 0 holding j = 1.
struct OmegaCoefficients {
  std::vector<Complex> c;
  std::vector<Complex> d;
};

/// Trapezoidal quadrature of the boundary integrals with n_quad nodes per
/// circle; n_quad <= 0 selects max(1024, 8 j_max). Throws InvalidInput when
/// n_quad < 4 j_max.
OmegaCoefficients omega_coeffs(const ExactSolution& sol, int j_max, int n_quad = 0);

}  // namespace hybridisc
