#include "doctest.h"

#include <cmath>

#include "hyperspec/extremal.hpp"
#include "hyperspec/families.hpp"
#include "oracles.hpp"

using namespace hyperspec;

namespace {

const TheoremClaim& claim(const OrderingCertificate& cert, const std::string& name) {
  for (const auto& c : cert.claims) {
    if (c.name == name) return c;
  }
  REQUIRE(false);
  static TheoremClaim dummy;
  return dummy;
}

}  // namespace

TEST_SUITE("extremal") {

TEST_CASE("verify_ordering at (3,3)") {
  const OrderingCertificate cert = verify_ordering(3, 3);
  REQUIRE(cert.ranked.size() == 2);
  CHECK(cert.ranked.front().first == canonical_form(loose_path(7, 3)));
  CHECK(cert.ranked.back().first == canonical_form(hyperstar(7, 3)));
  CHECK(claim(cert, "max").verdict == Verdict::StrictPass);
  CHECK(claim(cert, "max").matches);
  CHECK(claim(cert, "min").verdict == Verdict::StrictPass);
  CHECK(!claim(cert, "second-max").applicable);
  CHECK(claim(cert, "second-min").applicable);       // D_{7,1} is P_{7,3} here
  CHECK(claim(cert, "second-min").verdict == Verdict::StrictPass);  // vacuous
}

TEST_CASE("verify_ordering at (2,5)") {
  const OrderingCertificate cert = verify_ordering(2, 5);
  REQUIRE(cert.ranked.size() == 6);
  CHECK(claim(cert, "max").matches);
  CHECK(claim(cert, "min").matches);
  CHECK(claim(cert, "second-max").verdict == Verdict::StrictPass);
  CHECK(claim(cert, "second-min").verdict == Verdict::StrictPass);
}

TEST_CASE("verify_ordering at (3,4) pins the second extremes") {
  const OrderingCertificate cert = verify_ordering(3, 4);
  const auto& smax = claim(cert, "second-max");
  CHECK(smax.applicable);
  CHECK(smax.verdict == Verdict::StrictPass);
  CHECK(smax.matches);
  CHECK(smax.expected_code == canonical_form(f_graph(9, 3)).str());
  const auto& smin = claim(cert, "second-min");
  CHECK(smin.applicable);
  CHECK(smin.verdict == Verdict::StrictPass);
  CHECK(smin.matches);
  CHECK(smin.expected_code == canonical_form(double_broom(9, 3, 1)).str());
}

TEST_CASE("verify_broom_chain at (13,3)") {
  const BroomChainReport r = verify_broom_chain(13, 3);
  REQUIRE(r.chain.size() == 5);  // delta = 2..6
  CHECK(r.decreasing == Verdict::StrictPass);
  for (size_t i = 0; i + 1 < r.chain.size(); ++i) {
    CHECK(r.chain[i].rho > r.chain[i + 1].rho);
  }
  CHECK(r.chain.front().rho ==
        doctest::Approx(spectral_radius(loose_path(13, 3)).rho).epsilon(1e-10));
  CHECK(r.chain.back().rho ==
        doctest::Approx(spectral_radius(hyperstar(13, 3)).rho).epsilon(1e-10));
  CHECK(r.argmax_checked);
  CHECK(r.argmax == Verdict::StrictPass);
}

TEST_CASE("verify_f_vs_b3") {
  // boundary (n-1)/(k-1) = 3: F collapses to P while B^3 is the hyperstar,
  // so the inequality is the max-theorem gap
  const GraftReport boundary = verify_f_vs_b3(7, 3);
  CHECK(boundary.verdict == Verdict::StrictPass);
  CHECK(boundary.after_rho ==
        doctest::Approx(spectral_radius(loose_path(7, 3)).rho).epsilon(1e-10));
  CHECK(boundary.before_rho ==
        doctest::Approx(spectral_radius(hyperstar(7, 3)).rho).epsilon(1e-10));

  CHECK(verify_f_vs_b3(9, 3).verdict == Verdict::StrictPass);
  CHECK(verify_f_vs_b3(13, 4).verdict == Verdict::StrictPass);
  CHECK_THROWS_AS(verify_f_vs_b3(7, 2), PreconditionViolated);
}

TEST_CASE("verify_orbit_symmetry") {
  CHECK(verify_orbit_symmetry(hyperstar(7, 3)) <= 1e-8);
  CHECK(verify_orbit_symmetry(double_broom(13, 3, 2)) <= 1e-8);

  // asymmetric spider: singleton orbits, deviation exactly zero
  Hypergraph spider = build(1, {}, 2);
  spider = attach_pendant_path(spider, 0, 1);
  spider = attach_pendant_path(spider, 0, 2);
  spider = attach_pendant_path(spider, 0, 3);
  CHECK(verify_orbit_symmetry(spider) == 0.0);
}

TEST_CASE("orbit values match the proof's alpha/beta/gamma classes") {
  const Hypergraph d = double_broom(13, 3, 2);  // a=2, b=3, bridge w_1
  const SpectralResult r = spectral_radius(d);
  // labels: u=0, a-leaves 1..4, v=5, b-leaves 6..11, bridge 12
  for (int v = 2; v <= 4; ++v) CHECK(std::abs(r.perron[v] - r.perron[1]) <= 1e-8);
  for (int v = 7; v <= 11; ++v) CHECK(std::abs(r.perron[v] - r.perron[6]) <= 1e-8);
}

TEST_CASE("quintic_spec and quintic_eval") {
  const QuinticSpec spec = quintic_spec(6, 2, 1);
  CHECK(spec.b == 3);
  CHECK(spec.coeff[5] == -1);
  CHECK(spec.coeff[0] == 20);  // (1+a+b) k^2 (k-1)
  CHECK(quintic_eval(spec, 0.0) == 20.0);
  CHECK(quintic_eval(spec, 1e6) < 0.0);

  const double rho = spectral_radius(double_broom(6, 2, 1)).rho;
  CHECK(std::abs(quintic_eval(spec, rho)) <= 1e-6 * std::pow(rho, 5));

  CHECK_THROWS_AS(quintic_spec(6, 2, 3), BadA);
}

TEST_CASE("quintic_largest_root agrees with rho across routes") {
  for (const auto& [n, k, a] : std::vector<std::array<int, 3>>{
           {6, 2, 1}, {8, 2, 3}, {12, 2, 3}, {13, 3, 2}, {15, 3, 2}, {19, 4, 2}}) {
    const double root = quintic_largest_root(quintic_spec(n, k, a));
    const double rho = spectral_radius(double_broom(n, k, a)).rho;
    CHECK(std::abs(root - rho) <= 1e-6);
    const double oracle = oracles::largest_eigenvalue(distance_matrix(double_broom(n, k, a)));
    CHECK(std::abs(root - oracle) <= 1e-6);
  }
}

TEST_CASE("quintic_largest_root reports a bracketing failure") {
  QuinticSpec doctored = quintic_spec(6, 2, 1);
  doctored.coeff = {0, 0, 0, 0, 0, -1};  // -t^5 has no positive root
  CHECK_THROWS_AS(quintic_largest_root(doctored), NoRootFound);
}

TEST_CASE("quintic difference identity") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = k + 2 * (k - 1); n <= 20; n += k - 1) {
      if ((n - 1) % (k - 1) != 0) continue;
      const int amax = (n - k) / (2 * (k - 1));
      for (int a = 2; a <= amax; ++a) {
        CHECK(quintic_difference_identity_holds(n, k, a));
      }
    }
  }
  CHECK_THROWS(quintic_difference_identity_holds(12, 2, 1));
}

TEST_CASE("verify_quintic_monotone") {
  const QuinticMonotoneReport r = verify_quintic_monotone(12, 2);
  REQUIRE(r.entries.size() == 5);
  CHECK(r.increasing == Verdict::StrictPass);
  CHECK(r.max_route_gap <= 1e-6);
  for (size_t i = 0; i + 1 < r.entries.size(); ++i) {
    CHECK(r.entries[i].rho_power < r.entries[i + 1].rho_power);
  }

  const QuinticMonotoneReport r3 = verify_quintic_monotone(15, 3);
  REQUIRE(r3.entries.size() == 3);
  CHECK(r3.increasing == Verdict::StrictPass);

  // a single admissible value leaves nothing to compare
  const QuinticMonotoneReport lone = verify_quintic_monotone(9, 3);
  CHECK(lone.entries.size() == 1);
  CHECK(lone.increasing == Verdict::StrictPass);
}

}  // TEST_SUITE
