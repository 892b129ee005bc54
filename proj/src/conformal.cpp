#include "hybridisc/conformal.hpp"

#include <cmath>
#include <limits>

#include "hybridisc/errors.hpp"

namespace hybridisc {

AnnulusMap::AnnulusMap(double d, double s) : d_(d), s_(s) {
  if (!(s > 0.0) || !(s < d) || !std::isfinite(d)) {
    throw InvalidGeometry("annulus map needs 0 < s < d");
  }
  // 1 - (s/d)^2 = (d - s)(d + s)/d^2 keeps full relative precision as s -> d.
  q_ = std::sqrt((d - s) * (d + s)) / d;
  one_minus_rho_ = 2.0 * q_ / (1.0 + q_);
  rho_ = (1.0 - q_) / (1.0 + q_);
  sqrt_rho_ = std::sqrt(rho_);
  one_minus_sqrt_rho_ = one_minus_rho_ / (1.0 + sqrt_rho_);
  A_ = d * q_;
  // log(1/rho) = log((1+q)/(1-q)) = 2 atanh(q)
  T_ = 2.0 * std::atanh(q_) / M_PI;
}

Complex AnnulusMap::to_physical(Complex zeta) const {
  const Complex den = zeta + sqrt_rho_;
  if (std::abs(den) <= 4.0 * std::numeric_limits<double>::epsilon() * sqrt_rho_) {
    throw PoleAtInfinity("zeta = -sqrt(rho) maps to infinity");
  }
  return A_ * (zeta - sqrt_rho_) / den;
}

Complex AnnulusMap::to_annulus(Complex z) const {
  const Complex den = A_ - z;
  if (std::abs(den) <= 4.0 * std::numeric_limits<double>::epsilon() * A_) {
    throw PoleInDisc("z = A maps to zeta = infinity");
  }
  return sqrt_rho_ * (A_ + z) / den;
}

Complex AnnulusMap::log_derivative(Complex z) const {
  return 2.0 * A_ / ((A_ - z) * (A_ + z));
}

double AnnulusMap::nu_from_theta(double theta) const {
  const double kappa = one_minus_sqrt_rho_ / (1.0 + sqrt_rho_);
  return 2.0 * std::atan2(kappa * std::sin(0.5 * theta), std::cos(0.5 * theta));
}

double AnnulusMap::theta_from_nu(double nu) const {
  const double kappa = one_minus_sqrt_rho_ / (1.0 + sqrt_rho_);
  return 2.0 * std::atan2(std::sin(0.5 * nu), kappa * std::cos(0.5 * nu));
}

std::pair<Complex, Complex> image_limit_points(Complex z1, Complex z2, double s) {
  const Complex axis = z2 - z1;
  const double dist = std::abs(axis);
  const double dhat = dist - 2.0 * s;
  const Complex mid = 0.5 * (z1 + z2);
  const Complex offset = std::sqrt(s * dhat + 0.25 * dhat * dhat) * (axis / dist);
  return {mid - offset, mid + offset};
}

}  // namespace hybridisc
