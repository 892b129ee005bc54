#include "hybridisc/geometry.hpp"

#include <cmath>
#include <string>

#include "hybridisc/errors.hpp"

namespace hybridisc {

Disc::Disc(Complex c, double r) : center(c), radius(r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw InvalidGeometry("disc radius must be positive, got " + std::to_string(r));
  }
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw InvalidGeometry("disc centre must be finite");
  }
}

double gap(const Disc& a, const Disc& b) {
  return std::abs(b.center - a.center) - a.radius - b.radius;
}

DiscConfiguration::DiscConfiguration(std::vector<Disc> discs, Complex far_field,
                                     BoundaryKind kind, std::size_t reference_index)
    : discs_(std::move(discs)),
      far_field_(far_field),
      kind_(kind),
      reference_index_(reference_index) {
  if (discs_.empty()) throw InvalidGeometry("configuration has no discs");
  if (reference_index_ >= discs_.size()) {
    throw InvalidGeometry("reference index " + std::to_string(reference_index_) +
                          " out of range");
  }
  for (std::size_t i = 0; i < discs_.size(); ++i) {
    if (!(discs_[i].radius > 0.0)) throw InvalidGeometry("disc radius must be positive");
    for (std::size_t j = i + 1; j < discs_.size(); ++j) {
      if (!(gap(discs_[i], discs_[j]) > 0.0)) {
        throw InvalidGeometry("discs " + std::to_string(i) + " and " + std::to_string(j) +
                              " overlap or touch");
      }
    }
  }
}

PairFrame pair_frame(const Disc& a, const Disc& b, std::size_t first, std::size_t second) {
  const double rmax = std::max(a.radius, b.radius);
  if (std::abs(a.radius - b.radius) > 1e-12 * rmax) {
    throw UnsupportedGeometry("pair frames need equal radii");
  }
  if (!(gap(a, b) > 0.0)) throw InvalidGeometry("pair discs overlap or touch");

  const Complex axis = b.center - a.center;
  const double length = std::abs(axis);
  PairFrame frame;
  frame.first = first;
  frame.second = second;
  frame.midpoint = 0.5 * (a.center + b.center);
  frame.rotation = axis / length;
  frame.half_distance = 0.5 * length;
  frame.radius = a.radius;
  return frame;
}

std::vector<PairFrame> close_pairs(const DiscConfiguration& config, double threshold) {
  if (!(threshold > 0.0)) throw InvalidInput("close-pair threshold must be positive");
  std::vector<PairFrame> out;
  const auto& discs = config.discs();
  for (std::size_t i = 0; i < discs.size(); ++i) {
    for (std::size_t j = i + 1; j < discs.size(); ++j) {
      if (gap(discs[i], discs[j]) < threshold) {
        out.push_back(pair_frame(discs[i], discs[j], i, j));
      }
    }
  }
  return out;
}

DiscConfiguration two_disc_configuration(double d, double s, Complex far_field,
                                         BoundaryKind kind) {
  if (!(s > 0.0) || !(s < d)) {
    throw InvalidGeometry("two-disc geometry needs 0 < s < d");
  }
  return DiscConfiguration({Disc{{-d, 0.0}, s}, Disc{{d, 0.0}, s}}, far_field, kind, 0);
}

DiscConfiguration nine_disc_array(double spacing, double gap_width, Complex far_field,
                                  BoundaryKind kind) {
  if (!(gap_width > 0.0) || !(gap_width < spacing)) {
    throw InvalidGeometry("nine-disc array needs 0 < gap < spacing");
  }
  const double r = 0.5 * (spacing - gap_width);
  const double h = spacing;
  std::vector<Disc> discs;
  discs.reserve(9);
  discs.emplace_back(Complex{0.0, 0.0}, r);
  for (const Complex c : {Complex{h, 0}, Complex{-h, 0}, Complex{0, h}, Complex{0, -h},
                          Complex{h, h}, Complex{-h, h}, Complex{-h, -h}, Complex{h, -h}}) {
    discs.emplace_back(c, r);
  }
  return DiscConfiguration(std::move(discs), far_field, kind, 0);
}

}  // namespace hybridisc
