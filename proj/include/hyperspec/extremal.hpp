#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyperspec/enumeration.hpp"
#include "hyperspec/grafts.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

struct NoRootFound : Error { using Error::Error; };

/// One extremal claim checked against the full enumeration. gap is the
/// margin between the predicted class and its best competitor (absent when
/// there is no competitor).
struct TheoremClaim {
  std::string name;          // max | min | second-max | second-min
  bool applicable = false;   // hypothesis holds at this (k, m)
  Verdict verdict = Verdict::Indistinguishable;
  std::string witness_code;  // class that actually achieved the extremum
  std::string expected_code; // predicted family
  bool matches = false;
  std::optional<double> gap;
};

struct OrderingCertificate {
  int k = 0;
  int m = 0;
  int n = 0;
  std::vector<std::pair<CanonicalForm, double>> ranked;  // rho descending
  std::vector<TheoremClaim> claims;
};

/// Enumerates every class at (k, m), computes rho for each, and checks:
/// unique max is P_{n,k}; unique min is S_{n,k}; for m >= 4 the second max
/// is F_{n,k}; for m >= 3 the second min among T != S is D_{n,1}.
OrderingCertificate verify_ordering(int k, int m, SpectralOptions opts = {});

struct BroomChainEntry {
  int delta = 0;
  double rho = 0.0;
};

struct BroomChainReport {
  int n = 0;
  int k = 0;
  std::vector<BroomChainEntry> chain;  // delta = 2 .. (n-1)/(k-1)
  Verdict decreasing = Verdict::Indistinguishable;
  bool argmax_checked = false;  // enumeration cross-check ran
  Verdict argmax = Verdict::Indistinguishable;
};

/// rho(B^delta) strictly decreasing in delta; when enumeration is feasible,
/// also checks B^delta is the unique argmax among hypertrees of maximum
/// degree delta.
BroomChainReport verify_broom_chain(int n, int k, SpectralOptions opts = {});

/// rho(B^3_{n,k}) < rho(F_{n,k}) for k >= 3; at (n-1)/(k-1) = 3 the two
/// coincide with P_{n,k} and the report is Indistinguishable.
GraftReport verify_f_vs_b3(int n, int k, SpectralOptions opts = {});

/// Max over automorphism orbits of (max - min) Perron entry.
double verify_orbit_symmetry(const Hypergraph& g, SpectralOptions opts = {});

/// Characteristic quintic of D_{n,a}: coefficients are exact integers in
/// (k, a, b) with b = (n-k)/(k-1) - a; leading coefficient is -1.
struct QuinticSpec {
  int k = 0;
  int n = 0;
  int a = 0;
  long long b = 0;
  std::array<long long, 6> coeff{};  // coeff[i] multiplies t^i
};

QuinticSpec quintic_spec(int n, int k, int a);

double quintic_eval(const QuinticSpec& spec, double t);

/// Largest real root: descending grid sign scan from the upper bound
/// (n-1) * diameter(D_{n,a}) followed by bisection to 1e-12.
double quintic_largest_root(const QuinticSpec& spec);

/// Coefficient-wise check of
///   g_a - g_{a-1} = (b+1-a)(k-1)^2 t (5t^2 + (3k+3)t + 2k)
/// in exact integers; requires a >= 2.
bool quintic_difference_identity_holds(int n, int k, int a);

struct QuinticMonotoneEntry {
  int a = 0;
  double rho_power = 0.0;  // power iteration on D_{n,a}
  double rho_root = 0.0;   // largest quintic root
};

struct QuinticMonotoneReport {
  int n = 0;
  int k = 0;
  std::vector<QuinticMonotoneEntry> entries;  // a = 1 .. floor((n-k)/(2(k-1)))
  Verdict increasing = Verdict::StrictPass;   // vacuous when < 2 entries
  double max_route_gap = 0.0;                 // max |rho_power - rho_root|
};

QuinticMonotoneReport verify_quintic_monotone(int n, int k, SpectralOptions opts = {});

}  // namespace hyperspec
