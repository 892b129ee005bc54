#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hybridisc/conformal.hpp"
#include "hybridisc/geometry.hpp"

namespace hybridisc {

enum class SchemeKind {
  ZScheme,     // Laurent series about each disc centre
  ZetaScheme,  // Laurent series in the annulus variable of each pair
  Hybrid,      // both families together (overcomplete)
};

std::string to_string(SchemeKind kind);
/// Accepts "z", "zeta", "hybrid" (and the enum names); throws InvalidInput.
SchemeKind parse_scheme(const std::string& name);

/// Annulus variable of one disc pair: zeta_pair(z) = map.to_annulus(frame.to_frame(z)).
struct PairFamily {
  PairFrame frame;
  AnnulusMap map;

  explicit PairFamily(const PairFrame& f) : frame(f), map(f.half_distance, f.radius) {}
  Complex zeta(Complex z) const { return map.to_annulus(frame.to_frame(z)); }
};

/// Shape of a truncated expansion: which families are present and their truncation.
///
/// Basis ordering (the coefficient file contract):
///   index 0                      constant
///   then, disc by disc           (r_j/(z - c_j))^k,           k = 1..N
///   then, pair by pair           zeta_p(z)^k,                 k = 1..N
///                                (rho_p/zeta_p(z))^k,         k = 1..N
class BasisLayout {
 public:
  BasisLayout() = default;
  /// `pairs` is ignored for ZScheme; disc families are omitted for ZetaScheme.
  BasisLayout(std::vector<Disc> discs, std::vector<PairFrame> pairs, SchemeKind scheme,
              int N);

  SchemeKind scheme() const { return scheme_; }
  int truncation() const { return N_; }
  const std::vector<Disc>& discs() const { return discs_; }
  const std::vector<PairFamily>& pairs() const { return pairs_; }
  bool has_disc_families() const { return scheme_ != SchemeKind::ZetaScheme; }
  bool has_pair_families() const { return scheme_ != SchemeKind::ZScheme; }

  std::size_t disc_family_count() const { return has_disc_families() ? discs_.size() : 0; }
  std::size_t size() const;
  std::size_t disc_offset(std::size_t disc) const;
  std::size_t pair_positive_offset(std::size_t pair) const;
  std::size_t pair_negative_offset(std::size_t pair) const;

  /// Fills `out` (length size()) with the basis values at z.
  /// Throws DomainViolation when z lies strictly inside a disc.
  void row(Complex z, std::span<Complex> out) const;
  std::vector<Complex> row(Complex z) const;

  /// FNV-1a over the disc and pair data, used to tag coefficient files.
  std::uint64_t geometry_hash() const;

 private:
  std::vector<Disc> discs_;
  std::vector<PairFamily> pairs_;
  SchemeKind scheme_ = SchemeKind::ZScheme;
  int N_ = 0;
};

/// Two-disc layout for the canonical configuration (pair (0, 1) for annulus families).
BasisLayout two_disc_layout(const DiscConfiguration& config, SchemeKind scheme, int N);

/// w(z) = U0 z + sum_i coefficient_i * basis_i(z), where basis_0 = 1.
class Expansion {
 public:
  Expansion() = default;
  /// Zero coefficients.
  Expansion(BasisLayout layout, Complex far_field);
  /// Throws InvalidInput when coefficients.size() != layout.size().
  Expansion(BasisLayout layout, Complex far_field, Eigen::VectorXcd coefficients);

  const BasisLayout& layout() const { return layout_; }
  SchemeKind scheme() const { return layout_.scheme(); }
  Complex far_field() const { return U0_; }
  Complex constant() const { return coefficients_[0]; }
  const Eigen::VectorXcd& coefficients() const { return coefficients_; }
  Eigen::VectorXcd& coefficients() { return coefficients_; }

  std::span<const Complex> disc_coefficients(std::size_t disc) const;
  std::span<const Complex> pair_positive(std::size_t pair) const;
  std::span<const Complex> pair_negative(std::size_t pair) const;

  Complex eval(Complex z) const;

  /// Coefficient of 1/z in w - U0 z - const as z -> infinity, in closed form.
  Complex far_field_dipole() const;

 private:
  BasisLayout layout_;
  Complex U0_{1.0, 0.0};
  Eigen::VectorXcd coefficients_;
};

/// (1/2 pi i) * contour integral over |z| = R of (w - U0 z) dz by the
/// trapezoidal rule. Throws DomainViolation unless R >= 2 max(|c_j| + r_j),
/// and InvalidInput for n < 64.
Complex dipole_quadrature(const Expansion& expansion, double R, int n);

/// Coefficient file: a header (scheme, N, geometry hash, far field, sizes)
/// followed by one `family index re im` line per coefficient.
void write_expansion(std::ostream& os, const Expansion& expansion);
/// Reads coefficients for `layout`; throws InvalidInput on any mismatch.
Expansion read_expansion(std::istream& is, const BasisLayout& layout);

}  // namespace hybridisc
