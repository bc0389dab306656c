#pragma once

#include <cstdint>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

struct Disconnected : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NotUnit : Error { using Error::Error; };

/// Dense symmetric matrix of pairwise hypergraph distances (hop counts).
struct DistanceMatrix {
  int n = 0;
  std::vector<int> d;  // row-major n*n

  int operator()(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
  const int* row(int u) const { return d.data() + static_cast<size_t>(u) * n; }
};

/// Certified output of the power iteration: perron is positive and
/// Euclidean-unit, residual is the infinity norm of D*perron - rho*perron.
struct SpectralResult {
  double rho = 0.0;
  std::vector<double> perron;
  double residual = 0.0;
  long iterations = 0;
};

struct SpectralOptions {
  double tol = 1e-10;    // infinity-norm residual target
  long max_iter = 200000;
};

/// Gaps at or below this are reported Indistinguishable, never pass/fail.
inline double strictness_threshold(const SpectralOptions& opts) {
  return opts.tol * 10.0 > 1e-8 ? opts.tol * 10.0 : 1e-8;
}

enum class Verdict { StrictPass, Indistinguishable, Violation };

const char* to_string(Verdict v);

/// Verdict for the claim "hi > lo strictly".
Verdict strict_verdict(double lo, double hi, double threshold);

/// Single-source hypergraph distances (BFS; every traversed edge adds 1).
std::vector<int> distances_from(const Hypergraph& g, int u);

/// All-pairs matrix via n BFS runs, one OpenMP task per source.
DistanceMatrix distance_matrix(const Hypergraph& g);

/// Serial reference for the kernel above; identical output bit for bit.
DistanceMatrix distance_matrix_serial(const Hypergraph& g);

int diameter(const Hypergraph& g);

/// y = D * x, rows in parallel; each row is accumulated serially so the
/// result is identical to the serial reference.
void dist_matvec(const DistanceMatrix& d, const double* x, double* y);
void dist_matvec_serial(const DistanceMatrix& d, const double* x, double* y);

/// Power iteration from the normalized all-ones vector (or x0 when given;
/// it must be entrywise positive). Convergence is declared on the residual,
/// not on successive rho differences. If the residual stalls (ratio > 0.9999
/// across 1000 iterations) the iteration switches to the squared operator.
SpectralResult spectral_radius(const DistanceMatrix& d, SpectralOptions opts = {},
                               const std::vector<double>* x0 = nullptr);
SpectralResult spectral_radius(const Hypergraph& g, SpectralOptions opts = {});

/// rho for each input, instances in parallel, merged in input order.
std::vector<SpectralResult> batch_spectral_radius(const std::vector<Hypergraph>& gs,
                                                  SpectralOptions opts = {});

/// x^T D x for unit x (norm within 1e-12 of 1, else NotUnit).
double rayleigh(const DistanceMatrix& d, const std::vector<double>& x);

/// Sum of Perron entries over X.
double sigma(const Hypergraph& g, const std::vector<int>& x, const SpectralResult& r);

/// Per-row residual |rho*x_u - sum_v d(u,v)*x_v|.
double eigenequation_check(const Hypergraph& g, const SpectralResult& r, int u);

}  // namespace hyperspec
