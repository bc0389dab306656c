#include "hyperspec/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "hyperspec/families.hpp"

namespace hyperspec {

namespace {

// margin of "target beats every competitor" (min over competitors); empty
// competitor set reports an absent gap and passes vacuously
TheoremClaim extremal_claim(const std::string& name, bool applicable,
                            const CanonicalForm& expected,
                            const std::map<CanonicalForm, double>& rho_by_class,
                            bool maximal, const CanonicalForm& witness,
                            const std::vector<CanonicalForm>& excluded,
                            double threshold) {
  TheoremClaim claim;
  claim.name = name;
  claim.applicable = applicable;
  if (!applicable) return claim;
  claim.expected_code = expected.str();
  claim.witness_code = witness.str();
  claim.matches = witness == expected;

  const double target = rho_by_class.at(expected);
  double best_other = maximal ? -std::numeric_limits<double>::infinity()
                              : std::numeric_limits<double>::infinity();
  bool has_other = false;
  for (const auto& [code, rho] : rho_by_class) {
    if (code == expected) continue;
    if (std::find(excluded.begin(), excluded.end(), code) != excluded.end()) continue;
    has_other = true;
    best_other = maximal ? std::max(best_other, rho) : std::min(best_other, rho);
  }
  if (!has_other) {
    claim.verdict = Verdict::StrictPass;  // vacuous
    return claim;
  }
  claim.gap = maximal ? target - best_other : best_other - target;
  claim.verdict = strict_verdict(0.0, *claim.gap, threshold);
  return claim;
}

}  // namespace

OrderingCertificate verify_ordering(int k, int m, SpectralOptions opts) {
  if (m < 1) throw std::invalid_argument("verify_ordering: need m >= 1");
  const std::vector<Hypergraph> classes = generate_hypertrees(k, m);
  const int n = 1 + (k - 1) * m;

  OrderingCertificate cert;
  cert.k = k;
  cert.m = m;
  cert.n = n;

  const std::vector<SpectralResult> rhos = batch_spectral_radius(classes, opts);
  std::map<CanonicalForm, double> rho_by_class;
  for (size_t i = 0; i < classes.size(); ++i) {
    const CanonicalForm code = canonical_form(classes[i]);
    rho_by_class.emplace(code, rhos[i].rho);
    cert.ranked.emplace_back(code, rhos[i].rho);
  }
  std::sort(cert.ranked.begin(), cert.ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });

  const double threshold = strictness_threshold(opts);
  const CanonicalForm path_code = canonical_form(loose_path(n, k));
  const CanonicalForm star_code = canonical_form(hyperstar(n, k));
  const CanonicalForm& arg_max = cert.ranked.front().first;
  const CanonicalForm& arg_min = cert.ranked.back().first;

  cert.claims.push_back(extremal_claim("max", true, path_code, rho_by_class,
                                       /*maximal=*/true, arg_max, {}, threshold));
  cert.claims.push_back(extremal_claim("min", true, star_code, rho_by_class,
                                       /*maximal=*/false, arg_min, {}, threshold));

  // second maximum: F_{n,k}, hypothesis (n-1)/(k-1) >= 4
  if (m >= 4) {
    const CanonicalForm f_code = canonical_form(f_graph(n, k));
    CanonicalForm second_max = cert.ranked[1].first;
    cert.claims.push_back(extremal_claim("second-max", true, f_code, rho_by_class,
                                         /*maximal=*/true, second_max, {path_code},
                                         threshold));
  } else {
    cert.claims.push_back(extremal_claim("second-max", false, {}, rho_by_class, true,
                                         {}, {}, threshold));
  }

  // second minimum among T != S: D_{n,1}, hypothesis (n-1)/(k-1) >= 3
  if (m >= 3) {
    const CanonicalForm d_code = canonical_form(double_broom(n, k, 1));
    CanonicalForm second_min = cert.ranked[cert.ranked.size() - 2].first;
    cert.claims.push_back(extremal_claim("second-min", true, d_code, rho_by_class,
                                         /*maximal=*/false, second_min,
                                         {star_code}, threshold));
  } else {
    cert.claims.push_back(extremal_claim("second-min", false, {}, rho_by_class, false,
                                         {}, {}, threshold));
  }
  return cert;
}

BroomChainReport verify_broom_chain(int n, int k, SpectralOptions opts) {
  BroomChainReport report;
  report.n = n;
  report.k = k;
  const int m = (n - 1) / (k - 1);
  std::vector<Hypergraph> brooms;
  for (int delta = 2; delta <= m; ++delta) brooms.push_back(broom(n, k, delta));
  const std::vector<SpectralResult> rhos = batch_spectral_radius(brooms, opts);
  for (size_t i = 0; i < brooms.size(); ++i) {
    report.chain.push_back({static_cast<int>(i) + 2, rhos[i].rho});
  }

  const double threshold = strictness_threshold(opts);
  report.decreasing = Verdict::StrictPass;
  for (size_t i = 0; i + 1 < report.chain.size(); ++i) {
    const Verdict step = strict_verdict(report.chain[i + 1].rho, report.chain[i].rho, threshold);
    if (step == Verdict::Violation) {
      report.decreasing = Verdict::Violation;
      break;
    }
    if (step == Verdict::Indistinguishable) report.decreasing = Verdict::Indistinguishable;
  }

  if (enumeration_feasible(k, m)) {
    report.argmax_checked = true;
    report.argmax = Verdict::StrictPass;
    const std::vector<Hypergraph> classes = generate_hypertrees(k, m);
    const std::vector<SpectralResult> rhos_all = batch_spectral_radius(classes, opts);
    std::map<int, std::vector<std::pair<CanonicalForm, double>>> by_degree;
    for (size_t i = 0; i < classes.size(); ++i) {
      by_degree[max_degree(classes[i])].emplace_back(canonical_form(classes[i]),
                                                     rhos_all[i].rho);
    }
    for (int delta = 2; delta <= m; ++delta) {
      const CanonicalForm b_code = canonical_form(broom(n, k, delta));
      double b_rho = 0.0, best_other = -std::numeric_limits<double>::infinity();
      for (const auto& [code, rho] : by_degree.at(delta)) {
        if (code == b_code) {
          b_rho = rho;
        } else {
          best_other = std::max(best_other, rho);
        }
      }
      if (by_degree.at(delta).size() == 1) continue;  // vacuous
      const Verdict v = strict_verdict(best_other, b_rho, threshold);
      if (v == Verdict::Violation) {
        report.argmax = Verdict::Violation;
        break;
      }
      if (v == Verdict::Indistinguishable) report.argmax = Verdict::Indistinguishable;
    }
  }
  return report;
}

GraftReport verify_f_vs_b3(int n, int k, SpectralOptions opts) {
  if (k < 3) throw PreconditionViolated("verify_f_vs_b3: need k >= 3");
  const double b3 = spectral_radius(broom(n, k, 3), opts).rho;
  const double f = spectral_radius(f_graph(n, k), opts).rho;
  GraftReport r;
  r.before_rho = b3;
  r.after_rho = f;
  r.gap = f - b3;
  r.verdict = strict_verdict(b3, f, strictness_threshold(opts));
  r.before.kind = FamilyKind::Broom;
  r.before.params = {{"n", n}, {"k", k}, {"delta", 3}};
  r.after.kind = FamilyKind::FGraph;
  r.after.params = {{"n", n}, {"k", k}};
  return r;
}

double verify_orbit_symmetry(const Hypergraph& g, SpectralOptions opts) {
  const OrbitPartition orbits = automorphism_orbits(g);
  const SpectralResult r = spectral_radius(g, opts);
  double deviation = 0.0;
  for (const auto& orbit : orbits.orbits) {
    double lo = r.perron[orbit.front()], hi = lo;
    for (int v : orbit) {
      lo = std::min(lo, r.perron[v]);
      hi = std::max(hi, r.perron[v]);
    }
    deviation = std::max(deviation, hi - lo);
  }
  return deviation;
}

QuinticSpec quintic_spec(int n, int k, int a) {
  double_broom(n, k, a);  // validates (n, k, a)
  QuinticSpec spec;
  spec.k = k;
  spec.n = n;
  spec.a = a;
  spec.b = (n - k) / (k - 1) - a;
  const long long K = k, A = a, B = spec.b;
  spec.coeff[5] = -1;
  spec.coeff[4] = 2 * A * K + 2 * B * K - K - 2 * A - 2 * B - 3;
  spec.coeff[3] = K * K + 4 * A * K * K + 4 * B * K * K + 5 * A * B * K * K -
                  10 * A * B * K - A * K - B * K - 4 * K + 5 * A * B - 3 * A - 3 * B - 3;
  spec.coeff[2] = K * K * K + 3 * A * B * K * K * K + 2 * A * K * K * K + 2 * B * K * K * K +
                  K * K - 3 * A * B * K * K + 4 * A * K * K + 4 * B * K * K - 3 * A * B * K -
                  5 * A * K - 5 * B * K - 5 * K + 3 * A * B - A - B - 1;
  spec.coeff[1] = 2 * K * K * K + 2 * A * B * K * K * K + 3 * A * K * K * K +
                  3 * B * K * K * K - K * K - 4 * A * B * K * K - A * K * K - B * K * K +
                  2 * A * B * K - 2 * A * K - 2 * B * K - 2 * K;
  spec.coeff[0] = K * K * K + A * K * K * K + B * K * K * K - K * K - A * K * K - B * K * K;
  return spec;
}

double quintic_eval(const QuinticSpec& spec, double t) {
  double acc = 0.0;
  for (int i = 5; i >= 0; --i) acc = acc * t + static_cast<double>(spec.coeff[i]);
  return acc;
}

double quintic_largest_root(const QuinticSpec& spec) {
  const Hypergraph d = double_broom(spec.n, spec.k, spec.a);
  const double upper = static_cast<double>(spec.n - 1) * diameter(d);

  // descending scan: g < 0 above the largest root, first sign change brackets it
  const int steps = 10000;
  const double h = upper / steps;
  double hi = upper;
  double lo = upper;
  bool found = false;
  for (int i = 1; i <= steps; ++i) {
    lo = upper - i * h;
    if (quintic_eval(spec, lo) > 0.0) {
      found = true;
      break;
    }
    hi = lo;
  }
  if (!found) {
    throw NoRootFound("quintic_largest_root: no sign change in (0, " +
                      std::to_string(upper) + "]");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (quintic_eval(spec, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool quintic_difference_identity_holds(int n, int k, int a) {
  if (a < 2) throw std::invalid_argument("quintic_difference_identity_holds: need a >= 2");
  const QuinticSpec cur = quintic_spec(n, k, a);
  const QuinticSpec prev = quintic_spec(n, k, a - 1);  // b grows by one
  const long long factor = (cur.b + 1 - cur.a) * static_cast<long long>(k - 1) * (k - 1);
  const std::array<long long, 6> rhs{0, factor * 2 * k, factor * (3 * k + 3),
                                     factor * 5, 0, 0};
  for (int i = 0; i < 6; ++i) {
    if (cur.coeff[i] - prev.coeff[i] != rhs[i]) return false;
  }
  return true;
}

QuinticMonotoneReport verify_quintic_monotone(int n, int k, SpectralOptions opts) {
  if (k < 2 || n < 1 || (n - 1) % (k - 1) != 0) {
    throw BadDivisibility("verify_quintic_monotone: n-1 must be divisible by k-1");
  }
  QuinticMonotoneReport report;
  report.n = n;
  report.k = k;
  const int amax = (n - k) / (2 * (k - 1));
  for (int a = 1; a <= amax; ++a) {
    QuinticMonotoneEntry entry;
    entry.a = a;
    entry.rho_power = spectral_radius(double_broom(n, k, a), opts).rho;
    entry.rho_root = quintic_largest_root(quintic_spec(n, k, a));
    report.max_route_gap = std::max(report.max_route_gap,
                                    std::abs(entry.rho_power - entry.rho_root));
    report.entries.push_back(entry);
  }
  const double threshold = strictness_threshold(opts);
  for (size_t i = 0; i + 1 < report.entries.size(); ++i) {
    const Verdict by_power = strict_verdict(report.entries[i].rho_power,
                                            report.entries[i + 1].rho_power, threshold);
    const Verdict by_root = strict_verdict(report.entries[i].rho_root,
                                           report.entries[i + 1].rho_root, threshold);
    for (Verdict v : {by_power, by_root}) {
      if (v == Verdict::Violation) {
        report.increasing = Verdict::Violation;
      } else if (v == Verdict::Indistinguishable &&
                 report.increasing != Verdict::Violation) {
        report.increasing = Verdict::Indistinguishable;
      }
    }
  }
  return report;
}

}  // namespace hyperspec
