#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hybridisc {

using Complex = std::complex<double>;

/// Default gap below which two discs are treated as a close pair.
inline constexpr double kDefaultCloseThreshold = 1e-2;

struct Disc {
  Complex center;
  double radius = 1.0;

  Disc() = default;
  /// Throws InvalidGeometry unless radius > 0.
  Disc(Complex c, double r);
};

/// Edge-to-edge gap |c_i - c_j| - r_i - r_j.
double gap(const Disc& a, const Disc& b);

/// Which part of w is constant on the disc boundaries.
enum class BoundaryKind {
  Flow,           // Im w = gamma_j (streamline)
  Electrostatic,  // Re w = gamma_j (equipotential)
};

class DiscConfiguration {
 public:
  DiscConfiguration() = default;
  /// Validates disjointness and the reference index; throws InvalidGeometry.
  DiscConfiguration(std::vector<Disc> discs, Complex far_field,
                    BoundaryKind kind = BoundaryKind::Flow,
                    std::size_t reference_index = 0);

  const std::vector<Disc>& discs() const { return discs_; }
  std::size_t size() const { return discs_.size(); }
  const Disc& disc(std::size_t i) const { return discs_.at(i); }
  Complex far_field() const { return far_field_; }
  BoundaryKind kind() const { return kind_; }
  std::size_t reference_index() const { return reference_index_; }

 private:
  std::vector<Disc> discs_;
  Complex far_field_{1.0, 0.0};
  BoundaryKind kind_ = BoundaryKind::Flow;
  std::size_t reference_index_ = 0;
};

/// Similarity frame that places a pair of equal discs at -d and +d on the real axis.
struct PairFrame {
  std::size_t first = 0;
  std::size_t second = 1;
  Complex midpoint;
  Complex rotation{1.0, 0.0};  // unit modulus, points from first to second
  double half_distance = 1.0;
  double radius = 0.5;

  /// Physical point -> canonical pair coordinates.
  Complex to_frame(Complex z) const { return std::conj(rotation) * (z - midpoint); }
  /// Canonical pair coordinates -> physical point.
  Complex from_frame(Complex w) const { return midpoint + rotation * w; }
};

/// Canonical frame for discs a (mapped to -d) and b (mapped to +d).
/// Throws UnsupportedGeometry for unequal radii and InvalidGeometry for overlap.
PairFrame pair_frame(const Disc& a, const Disc& b, std::size_t first = 0,
                     std::size_t second = 1);

/// Every unordered pair (i < j) with gap below `threshold`, ordered by (i, j).
std::vector<PairFrame> close_pairs(const DiscConfiguration& config,
                                   double threshold = kDefaultCloseThreshold);

/// Two discs of radius s centred at -d (index 0) and +d (index 1).
DiscConfiguration two_disc_configuration(double d, double s, Complex far_field,
                                         BoundaryKind kind = BoundaryKind::Flow);

/// 3x3 square array with centre spacing `spacing` and edge gap `gap` between
/// neighbours, i.e. radius (spacing - gap)/2. Disc 0 is the central disc.
DiscConfiguration nine_disc_array(double spacing, double gap, Complex far_field,
                                  BoundaryKind kind = BoundaryKind::Flow);

}  // namespace hybridisc
