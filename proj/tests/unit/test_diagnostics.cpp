#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hybridisc/diagnostics.hpp"
#include "hybridisc/errors.hpp"
#include "hybridisc/special.hpp"

using namespace hybridisc;

namespace {

double ratio_error(double measured, double predicted) {
  return std::max(measured / predicted, predicted / measured);
}

}  // namespace

TEST_CASE("decay profile") {
  const double r = 0.9;
  std::vector<double> geo;
  for (int j = 1; j <= 400; ++j) geo.push_back(std::pow(r, j));
  const auto p = decay_profile(geo, 1.0, 2);
  // sup_j j r^j sits at j = 1/ln(1/r) (9.49), so at j = 9 or 10.
  const double best = std::max(9 * std::pow(r, 9), 10 * std::pow(r, 10));
  CHECK(p.sups[1] == doctest::Approx(best).epsilon(1e-14));
  CHECK(p.sups[0] == doctest::Approx(r));

  std::vector<double> scaled;
  for (double g : geo) scaled.push_back(-3.0 * g);
  const auto q = decay_profile(scaled, 1.0, 2);
  for (int k = 0; k <= 2; ++k) CHECK(q.sups[k] == doctest::Approx(3.0 * p.sups[k]));

  CHECK_THROWS_AS(decay_profile(std::vector<double>{}, 1.0, 1), InvalidInput);

  std::ostringstream os;
  write_decay_csv(os, decay_profile(std::vector<double>{0.5, 0.25}, 1.0, 1));
  CHECK(os.str() ==
        "j,abs_coef,w0,w1\n"
        "1,5.000000000000000e-01,5.000000000000000e-01,5.000000000000000e-01\n"
        "2,2.500000000000000e-01,2.500000000000000e-01,5.000000000000000e-01\n");
}

TEST_CASE("cut-off function") {
  const CutoffSpec spec{0.1, false};
  CHECK(cutoff_phi(spec, 0.0) == 1.0);
  CHECK(cutoff_phi(spec, M_PI) == 0.0);
  CHECK(cutoff_phi(spec, 0.1) == 1.0);
  CHECK(cutoff_phi(spec, 0.2) == 0.0);
  CHECK(cutoff_phi(spec, 0.15) == doctest::Approx(0.5));
  for (double nu = -3; nu < 3; nu += 0.013) {
    CHECK(cutoff_phi(spec, nu) == cutoff_phi(spec, -nu));
    const double phi = cutoff_phi(spec, nu);
    CHECK(phi >= 0.0);
    CHECK(phi <= 1.0);
    CHECK(phi + (1.0 - phi) == 1.0);
  }
  CHECK(cutoff_phi(CutoffSpec{0.1, true}, 0.0) == 0.0);
  const CutoffSpec wide{2.0, false};
  CHECK_THROWS_AS(wide.validate(), InvalidInput);

  // max |Phi'| * delta is the same for every width.
  std::vector<double> scaled;
  for (double delta : {0.1, 0.05, 0.025}) {
    const CutoffSpec c{delta, false};
    double best = 0;
    const double h = delta * 1e-5;
    for (double nu = delta; nu <= 2 * delta; nu += delta / 2000) {
      best = std::max(best, std::abs(cutoff_phi(c, nu + h) - cutoff_phi(c, nu - h)) / (2 * h));
    }
    scaled.push_back(best * delta);
  }
  CHECK(scaled[1] == doctest::Approx(scaled[0]).epsilon(1e-3));
  CHECK(scaled[2] == doctest::Approx(scaled[0]).epsilon(1e-3));
}

TEST_CASE("hybrid split reconstructs W21") {
  for (double s : {0.9, 0.99, 0.999}) {
    const AnnulusMap m(1.0, s);
    for (double delta : {std::sqrt(m.T()), 0.3}) {
      const auto split = hybrid_split_w21(m, CutoffSpec{delta, false}, 4096);
      CHECK(split_reconstruction_error(m, split) <= 1e-9);
    }
  }
  const AnnulusMap m(1.0, 0.99);
  const auto none = hybrid_split_w21(m, CutoffSpec{0.1, true}, 256);
  for (double b : none.b) CHECK(b == 0.0);
  // With the cut-off disabled omega1 is the plain series of W21.
  const auto plain = w21_zeta_coefficients(m, 255);
  for (std::size_t j = 1; j < 40; ++j) CHECK(std::abs(none.a[j] - plain[j - 1]) < 1e-12);
  CHECK(none.a[0] == doctest::Approx(std::log(2 * m.A() / (1.0 + m.A()))).epsilon(1e-12));
  CHECK_THROWS_AS(hybrid_split_w21(m, CutoffSpec{0.1, false}, 32), InvalidInput);
}

TEST_CASE("single-basis coefficients of W21") {
  const AnnulusMap a(1.0, 0.99), b(1.0, 0.999);
  const auto pa = decay_profile(w21_zeta_coefficients(a, 100000), a.T(), 2);
  const auto pb = decay_profile(w21_zeta_coefficients(b, 100000), b.T(), 2);
  CHECK(ratio_error(pb.sups[1] / pa.sups[1], 1.0) < 3.0);
  CHECK(ratio_error(pb.sups[2] / pa.sups[2], a.T() / b.T()) < 3.0);
}

TEST_CASE("split coefficient decay with the square-root cut-off") {
  const AnnulusMap a(1.0, 0.99), b(1.0, 0.999);
  const auto sa = hybrid_split_w21(a, CutoffSpec{std::sqrt(a.T()), false}, 4096);
  const auto sb = hybrid_split_w21(b, CutoffSpec{std::sqrt(b.T()), false}, 4096);
  const double predicted = std::sqrt(a.T() / b.T());
  for (int set = 0; set < 2; ++set) {
    const auto& ca = set == 0 ? sa.a : sa.b;
    const auto& cb = set == 0 ? sb.a : sb.b;
    const auto pa = decay_profile(std::vector<double>(ca.begin() + 1, ca.end()), a.T(), 1);
    const auto pb = decay_profile(std::vector<double>(cb.begin() + 1, cb.end()), b.T(), 1);
    CHECK(ratio_error(pb.sups[1] / pa.sups[1], predicted) < 3.0);
  }
}

TEST_CASE("omega coefficients are bounded uniformly in T") {
  // The sups respect the M/T bound and in fact stay O(1) as T falls.
  const Complex U0 = std::polar(1.0, M_PI / 4);
  std::vector<double> sups, ts;
  for (double s : {0.99, 0.999, 0.9999}) {
    const AnnulusMap m(1.0, s);
    const auto oc = omega_coeffs(ExactSolution(m, U0), 256);
    sups.push_back(decay_profile(oc.c, m.T(), 1).sups[1]);
    ts.push_back(m.T());
  }
  for (std::size_t i = 1; i < sups.size(); ++i) {
    CHECK(sups[i] * ts[i] <= sups[0] * ts[0]);
    CHECK(ratio_error(sups[i], sups[0]) < 1.1);
  }
}
