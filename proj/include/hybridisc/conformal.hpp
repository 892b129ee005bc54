#pragma once

#include <complex>
#include <utility>

namespace hybridisc {

using Complex = std::complex<double>;

/// Moebius map between the annulus rho < |zeta| < 1 and the exterior of the
/// two discs |z -/+ d| = s:
///
///   z(zeta) = A (zeta - sqrt(rho)) / (zeta + sqrt(rho)),
///   zeta(z) = sqrt(rho) (A + z) / (A - z).
///
/// |zeta| = 1 is the disc at +d and |zeta| = rho the disc at -d; zeta = -sqrt(rho)
/// is the preimage of infinity. T = log(1/rho)/pi is the small parameter of the
/// near-touching limit.
class AnnulusMap {
 public:
  /// Throws InvalidGeometry unless 0 < s < d.
  AnnulusMap(double d, double s);

  double d() const { return d_; }
  double s() const { return s_; }
  double rho() const { return rho_; }
  double sqrt_rho() const { return sqrt_rho_; }
  /// 1 - rho, computed without cancellation.
  double one_minus_rho() const { return one_minus_rho_; }
  double A() const { return A_; }
  double T() const { return T_; }

  /// Throws PoleAtInfinity at zeta = -sqrt(rho).
  Complex to_physical(Complex zeta) const;
  /// Throws PoleInDisc at z = A.
  Complex to_annulus(Complex z) const;
  /// d zeta / dz divided by zeta: 2A / (A^2 - z^2).
  Complex log_derivative(Complex z) const;

  /// Angle nu on |zeta| = 1 (zeta = -e^{i nu}) for z = d + s e^{-i theta}.
  double nu_from_theta(double theta) const;
  double theta_from_nu(double nu) const;

 private:
  double d_;
  double s_;
  double q_;  // sqrt(1 - (s/d)^2)
  double rho_;
  double sqrt_rho_;
  double one_minus_rho_;
  double one_minus_sqrt_rho_;
  double A_;
  double T_;
};

inline AnnulusMap annulus_map(double d, double s) { return AnnulusMap(d, s); }

/// Accumulation points of the image sequence for two discs of radius s
/// centred at z1, z2; the first lies in the disc at z1.
std::pair<Complex, Complex> image_limit_points(Complex z1, Complex z2, double s);

}  // namespace hybridisc
