#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "hybridisc/conformal.hpp"

namespace hybridisc {

/// Weighted sups sup_j j^k |coef_j| for k = 0..k_max.
struct DecayProfile {
  std::vector<Complex> coefficients;
  int first_order = 1;       // j of coefficients[0]
  std::vector<double> sups;  // sups[k]
  double T = 0;
};

/// Throws InvalidInput for empty input or negative k_max.
DecayProfile decay_profile(const std::vector<Complex>& coefficients, double T, int k_max,
                           int first_order = 1);
DecayProfile decay_profile(const std::vector<double>& coefficients, double T, int k_max,
                           int first_order = 1);

/// CSV with columns j,abs_coef,w0,...,wk (w_k = j^k |coef_j|).
void write_decay_csv(std::ostream& os, const DecayProfile& profile);

/// Even cut-off: 1 for |nu| <= delta, 0 for |nu| >= 2 delta, with an
/// exp(-1/x) smooth step between. `disabled` selects the zero function.
struct CutoffSpec {
  double delta = 0.1;
  bool disabled = false;

  /// Throws InvalidInput unless 0 < delta < pi/2 (ignored when disabled).
  void validate() const;
};

double cutoff_phi(const CutoffSpec& spec, double nu);

/// Split of W21 = log(1 + sqrt(rho) s/(z - d)) into
///   omega1(zeta)    = sum_j a_j zeta^j,              Re = (1 - Phi(nu)) Re W21 on |zeta| = 1,
///   omega2(s/(z-d)) = sum_j b_j (s/(z - d))^j,       Re = Phi(nu) Re W21,
/// with zeta = -e^{i nu}. Both coefficient sets are real and indexed from j = 0.
struct HybridSplit {
  std::vector<double> a;
  std::vector<double> b;
  double T = 0;
  CutoffSpec cutoff;

  /// Re omega1 + Re omega2 at a physical point outside the disc at +d.
  double real_part(const AnnulusMap& map, Complex z) const;
};

inline constexpr int kSplitSamples = 1 << 14;

/// Fourier cosine coefficients from kSplitSamples equispaced samples.
/// Requires 64 <= j_max <= kSplitSamples / 4.
HybridSplit hybrid_split_w21(const AnnulusMap& map, const CutoffSpec& spec, int j_max);

/// Largest |Re omega1 + Re omega2 - Re W21| over n_test points of |zeta| = 1.
double split_reconstruction_error(const AnnulusMap& map, const HybridSplit& split,
                                  int n_test = 1024);

/// Taylor coefficients of W21 in zeta, (-1)^j rho^{j/2}/j, j = 1..j_max
/// (the constant term is dropped).
std::vector<double> w21_zeta_coefficients(const AnnulusMap& map, int j_max);

}  // namespace hybridisc
