#include "hybridisc/basis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "hybridisc/errors.hpp"

namespace hybridisc {

namespace {

// Points within this relative distance of a circle count as on the boundary.
constexpr double kBoundarySlack = 1e-9;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Fnv1a {
 public:
  void add(double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
      hash_ ^= (bits >> (8 * i)) & 0xffu;
      hash_ *= 0x100000001b3ull;
    }
  }
  void add(std::uint64_t v) { add(std::bit_cast<double>(v)); }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ull;
};

}  // namespace

std::string to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::ZScheme:
      return "z";
    case SchemeKind::ZetaScheme:
      return "zeta";
    case SchemeKind::Hybrid:
      return "hybrid";
  }
  return "?";
}

SchemeKind parse_scheme(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
  if (n == "z" || n == "zscheme" || n == "z-scheme") return SchemeKind::ZScheme;
  if (n == "zeta" || n == "zetascheme" || n == "zeta-scheme") return SchemeKind::ZetaScheme;
  if (n == "hybrid") return SchemeKind::Hybrid;
  throw InvalidInput("unknown scheme '" + name + "'");
}

BasisLayout::BasisLayout(std::vector<Disc> discs, std::vector<PairFrame> pairs,
                         SchemeKind scheme, int N)
    : discs_(std::move(discs)), scheme_(scheme), N_(N) {
  if (N < 1) throw InvalidInput("truncation N must be at least 1");
  if (discs_.empty()) throw InvalidInput("layout needs at least one disc");
  if (scheme_ != SchemeKind::ZScheme) {
    if (pairs.empty()) throw InvalidInput("annulus families need at least one disc pair");
    for (const auto& p : pairs) pairs_.emplace_back(p);
  }
}

std::size_t BasisLayout::size() const {
  const std::size_t n = static_cast<std::size_t>(N_);
  return 1 + disc_family_count() * n + pairs_.size() * 2 * n;
}

std::size_t BasisLayout::disc_offset(std::size_t disc) const {
  return 1 + disc * static_cast<std::size_t>(N_);
}

std::size_t BasisLayout::pair_positive_offset(std::size_t pair) const {
  const std::size_t n = static_cast<std::size_t>(N_);
  return 1 + disc_family_count() * n + 2 * pair * n;
}

std::size_t BasisLayout::pair_negative_offset(std::size_t pair) const {
  return pair_positive_offset(pair) + static_cast<std::size_t>(N_);
}

void BasisLayout::row(Complex z, std::span<Complex> out) const {
  if (out.size() != size()) throw InvalidInput("basis row buffer has wrong length");
  for (const auto& disc : discs_) {
    if (std::abs(z - disc.center) < disc.radius * (1.0 - kBoundarySlack)) {
      throw DomainViolation("evaluation point lies inside a disc");
    }
  }
  out[0] = 1.0;
  std::size_t idx = 1;
  if (has_disc_families()) {
    for (const auto& disc : discs_) {
      const Complex t = disc.radius / (z - disc.center);
      Complex p = 1.0;
      for (int k = 0; k < N_; ++k) {
        p *= t;
        out[idx++] = p;
      }
    }
  }
  for (const auto& pair : pairs_) {
    const Complex zeta = pair.zeta(z);
    const Complex inner = pair.map.rho() / zeta;
    Complex p = 1.0;
    for (int k = 0; k < N_; ++k) {
      p *= zeta;
      out[idx++] = p;
    }
    p = 1.0;
    for (int k = 0; k < N_; ++k) {
      p *= inner;
      out[idx++] = p;
    }
  }
}

std::vector<Complex> BasisLayout::row(Complex z) const {
  std::vector<Complex> out(size());
  row(z, out);
  return out;
}

std::uint64_t BasisLayout::geometry_hash() const {
  Fnv1a h;
  h.add(static_cast<std::uint64_t>(discs_.size()));
  for (const auto& d : discs_) {
    h.add(d.center.real());
    h.add(d.center.imag());
    h.add(d.radius);
  }
  h.add(static_cast<std::uint64_t>(pairs_.size()));
  for (const auto& p : pairs_) {
    h.add(static_cast<std::uint64_t>(p.frame.first));
    h.add(static_cast<std::uint64_t>(p.frame.second));
  }
  return h.value();
}

BasisLayout two_disc_layout(const DiscConfiguration& config, SchemeKind scheme, int N) {
  if (config.size() != 2) throw InvalidInput("two-disc layout needs exactly two discs");
  std::vector<PairFrame> pairs;
  if (scheme != SchemeKind::ZScheme) {
    pairs.push_back(pair_frame(config.disc(0), config.disc(1), 0, 1));
  }
  return BasisLayout(config.discs(), std::move(pairs), scheme, N);
}

// ---------------------------------------------------------------------------

Expansion::Expansion(BasisLayout layout, Complex far_field)
    : layout_(std::move(layout)),
      U0_(far_field),
      coefficients_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(layout_.size()))) {}

Expansion::Expansion(BasisLayout layout, Complex far_field, Eigen::VectorXcd coefficients)
    : layout_(std::move(layout)), U0_(far_field), coefficients_(std::move(coefficients)) {
  if (static_cast<std::size_t>(coefficients_.size()) != layout_.size()) {
    throw InvalidInput("coefficient vector does not match the basis layout");
  }
}

std::span<const Complex> Expansion::disc_coefficients(std::size_t disc) const {
  if (!layout_.has_disc_families()) return {};
  return {coefficients_.data() + layout_.disc_offset(disc),
          static_cast<std::size_t>(layout_.truncation())};
}

std::span<const Complex> Expansion::pair_positive(std::size_t pair) const {
  return {coefficients_.data() + layout_.pair_positive_offset(pair),
          static_cast<std::size_t>(layout_.truncation())};
}

std::span<const Complex> Expansion::pair_negative(std::size_t pair) const {
  return {coefficients_.data() + layout_.pair_negative_offset(pair),
          static_cast<std::size_t>(layout_.truncation())};
}

Complex Expansion::eval(Complex z) const {
  const auto basis = layout_.row(z);
  Complex w = U0_ * z;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    w += coefficients_[static_cast<Eigen::Index>(i)] * basis[i];
  }
  return w;
}

Complex Expansion::far_field_dipole() const {
  Complex dipole{};
  if (layout_.has_disc_families()) {
    for (std::size_t j = 0; j < layout_.discs().size(); ++j) {
      dipole += disc_coefficients(j)[0] * layout_.discs()[j].radius;
    }
  }
  // zeta_p(z) = zeta_inf + beta/z + O(1/z^2) with zeta_inf = -sqrt(rho) and
  // beta = -2 A sqrt(rho) e, e the frame rotation.
  const int N = layout_.truncation();
  for (std::size_t p = 0; p < layout_.pairs().size(); ++p) {
    const auto& pair = layout_.pairs()[p];
    const double rho = pair.map.rho();
    const double zeta_inf = -pair.map.sqrt_rho();
    const Complex beta = -2.0 * pair.map.A() * pair.map.sqrt_rho() * pair.frame.rotation;
    const auto pos = pair_positive(p);
    const auto neg = pair_negative(p);
    double pow_prev = 1.0;            // zeta_inf^{k-1}
    double neg_pow = 1.0 / zeta_inf;  // rho^k zeta_inf^{-k-1}, k = 0
    for (int k = 1; k <= N; ++k) {
      neg_pow *= rho / zeta_inf;
      dipole += pos[k - 1] * (static_cast<double>(k) * pow_prev) * beta;
      dipole -= neg[k - 1] * (static_cast<double>(k) * neg_pow) * beta;
      pow_prev *= zeta_inf;
    }
  }
  return dipole;
}

Complex dipole_quadrature(const Expansion& expansion, double R, int n) {
  if (n < 64) throw InvalidInput("dipole quadrature needs at least 64 nodes");
  double reach = 0.0;
  for (const auto& d : expansion.layout().discs()) {
    reach = std::max(reach, std::abs(d.center) + d.radius);
  }
  if (R < 2.0 * reach) throw DomainViolation("quadrature radius too close to the discs");
  Complex total{};
  for (int m = 0; m < n; ++m) {
    const Complex z = std::polar(R, 2.0 * M_PI * m / n);
    total += (expansion.eval(z) - expansion.far_field() * z) * z;
  }
  return total / static_cast<double>(n);
}

// ---------------------------------------------------------------------------

void write_expansion(std::ostream& os, const Expansion& expansion) {
  const auto& layout = expansion.layout();
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(layout.geometry_hash()));
  os << "# hybridisc expansion v1\n";
  os << "scheme " << to_string(layout.scheme()) << '\n';
  os << "N " << layout.truncation() << '\n';
  os << "geometry " << hash << '\n';
  os << "discs " << layout.discs().size() << '\n';
  os << "pairs " << layout.pairs().size() << '\n';
  os << "far_field " << format_double(expansion.far_field().real()) << ' '
     << format_double(expansion.far_field().imag()) << '\n';
  os << "coefficients " << layout.size() << '\n';

  const auto& c = expansion.coefficients();
  auto line = [&](const std::string& family, int index, Complex v) {
    os << family << ' ' << index << ' ' << format_double(v.real()) << ' '
       << format_double(v.imag()) << '\n';
  };
  line("const", 0, c[0]);
  const int N = layout.truncation();
  if (layout.has_disc_families()) {
    for (std::size_t j = 0; j < layout.discs().size(); ++j) {
      const auto off = static_cast<Eigen::Index>(layout.disc_offset(j));
      for (int k = 0; k < N; ++k) line("disc" + std::to_string(j), k + 1, c[off + k]);
    }
  }
  for (std::size_t p = 0; p < layout.pairs().size(); ++p) {
    const auto pos = static_cast<Eigen::Index>(layout.pair_positive_offset(p));
    const auto neg = static_cast<Eigen::Index>(layout.pair_negative_offset(p));
    for (int k = 0; k < N; ++k) line("pair" + std::to_string(p) + "+", k + 1, c[pos + k]);
    for (int k = 0; k < N; ++k) line("pair" + std::to_string(p) + "-", k + 1, c[neg + k]);
  }
}

Expansion read_expansion(std::istream& is, const BasisLayout& layout) {
  std::string line;
  std::string scheme;
  std::string hash;
  long N = -1;
  long count = -1;
  Complex far_field{1.0, 0.0};
  std::vector<std::string> body;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "scheme") {
      ls >> scheme;
    } else if (key == "N") {
      ls >> N;
    } else if (key == "geometry") {
      ls >> hash;
    } else if (key == "far_field") {
      double re = 0, im = 0;
      ls >> re >> im;
      far_field = {re, im};
    } else if (key == "coefficients") {
      ls >> count;
    } else if (key == "discs" || key == "pairs") {
      continue;
    } else {
      body.push_back(line);
    }
  }
  if (scheme.empty() || parse_scheme(scheme) != layout.scheme()) {
    throw InvalidInput("coefficient file scheme does not match layout");
  }
  if (N != layout.truncation()) throw InvalidInput("coefficient file N does not match layout");
  char expect[32];
  std::snprintf(expect, sizeof expect, "%016llx",
                static_cast<unsigned long long>(layout.geometry_hash()));
  if (hash != expect) throw InvalidInput("coefficient file geometry hash mismatch");
  if (count != static_cast<long>(layout.size()) ||
      body.size() != static_cast<std::size_t>(count)) {
    throw InvalidInput("coefficient file has the wrong number of entries");
  }
  Eigen::VectorXcd coeffs(count);
  for (long i = 0; i < count; ++i) {
    std::istringstream ls(body[static_cast<std::size_t>(i)]);
    std::string family;
    int index = 0;
    double re = 0, im = 0;
    if (!(ls >> family >> index >> re >> im)) {
      throw InvalidInput("malformed coefficient line: " + body[static_cast<std::size_t>(i)]);
    }
    coeffs[i] = {re, im};
  }
  return Expansion(layout, far_field, std::move(coeffs));
}

}  // namespace hybridisc
