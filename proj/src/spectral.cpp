#include "hyperspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperspec/parallel.hpp"

namespace hyperspec {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::StrictPass: return "StrictPass";
    case Verdict::Indistinguishable: return "Indistinguishable";
    case Verdict::Violation: return "Violation";
  }
  return "?";
}

Verdict strict_verdict(double lo, double hi, double threshold) {
  const double gap = hi - lo;
  if (gap > threshold) return Verdict::StrictPass;
  if (gap < -threshold) return Verdict::Violation;
  return Verdict::Indistinguishable;
}

namespace {

// Single-source BFS over the incidence structure; every traversed edge
// contributes length 1. Returns false when some vertex is unreachable.
bool bfs_row(const Hypergraph& g, const std::vector<std::vector<int>>& inc,
             int source, int* dist) {
  const int n = g.n;
  std::fill(dist, dist + n, -1);
  dist[source] = 0;
  std::vector<int> frontier{source}, next;
  std::vector<char> edge_done(g.edges.size(), 0);
  int reached = 1;
  while (!frontier.empty()) {
    next.clear();
    for (int v : frontier) {
      for (int ei : inc[v]) {
        if (edge_done[ei]) continue;
        edge_done[ei] = 1;
        for (int w : g.edges[ei]) {
          if (dist[w] < 0) {
            dist[w] = dist[v] + 1;
            next.push_back(w);
            ++reached;
          }
        }
      }
    }
    frontier.swap(next);
  }
  return reached == n;
}

}  // namespace

std::vector<int> distances_from(const Hypergraph& g, int u) {
  if (u < 0 || u >= g.n) throw VertexOutOfRange("distances_from: vertex " + std::to_string(u));
  const auto inc = incidence_lists(g);
  std::vector<int> dist(g.n);
  if (!bfs_row(g, inc, u, dist.data())) {
    throw Disconnected("distances_from: unreachable vertex");
  }
  return dist;
}

DistanceMatrix distance_matrix_serial(const Hypergraph& g) {
  const int n = g.n;
  const auto inc = incidence_lists(g);
  DistanceMatrix d;
  d.n = n;
  d.d.resize(static_cast<size_t>(n) * n);
  bool ok = true;
  for (int s = 0; s < n; ++s) {
    ok = bfs_row(g, inc, s, d.d.data() + static_cast<size_t>(s) * n) && ok;
  }
  if (!ok) throw Disconnected("distance_matrix: hypergraph is not connected");
  return d;
}

DistanceMatrix distance_matrix(const Hypergraph& g) {
  const int n = g.n;
  if (n < 64) return distance_matrix_serial(g);
  const auto inc = incidence_lists(g);
  DistanceMatrix d;
  d.n = n;
  d.d.resize(static_cast<size_t>(n) * n);
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 8) num_threads(worker_count()) reduction(&& : ok)
  for (int s = 0; s < n; ++s) {
    ok = bfs_row(g, inc, s, d.d.data() + static_cast<size_t>(s) * n) && ok;
  }
  if (!ok) throw Disconnected("distance_matrix: hypergraph is not connected");
  return d;
}

int diameter(const Hypergraph& g) {
  const DistanceMatrix d = distance_matrix(g);
  return *std::max_element(d.d.begin(), d.d.end());
}

void dist_matvec_serial(const DistanceMatrix& d, const double* x, double* y) {
  const int n = d.n;
  for (int i = 0; i < n; ++i) {
    const int* row = d.row(i);
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void dist_matvec(const DistanceMatrix& d, const double* x, double* y) {
  const int n = d.n;
  if (n < 256) {
    dist_matvec_serial(d, x, y);
    return;
  }
#pragma omp parallel for schedule(static) num_threads(worker_count())
  for (int i = 0; i < n; ++i) {
    const int* row = d.row(i);
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

SpectralResult spectral_radius(const DistanceMatrix& d, SpectralOptions opts,
                               const std::vector<double>* x0) {
  const int n = d.n;
  if (n < 2) throw std::invalid_argument("spectral_radius: need n >= 2");
  if (opts.tol <= 0 || opts.max_iter < 1) {
    throw std::invalid_argument("spectral_radius: bad options");
  }

  std::vector<double> x(n), y(n), z(n);
  if (x0) {
    if (static_cast<int>(x0->size()) != n) {
      throw std::invalid_argument("spectral_radius: start vector size mismatch");
    }
    double norm = 0.0;
    for (double v : *x0) {
      if (!(v > 0.0)) throw std::invalid_argument("spectral_radius: start vector must be positive");
      norm += v * v;
    }
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) x[i] = (*x0)[i] / norm;
  } else {
    std::fill(x.begin(), x.end(), 1.0 / std::sqrt(static_cast<double>(n)));
  }

  // Plain power iteration converges: D has zero diagonal and positive
  // off-diagonal entries, hence is primitive. The squared operator is the
  // deterministic fallback when the residual stalls.
  bool squared = false;
  double checkpoint_residual = -1.0;
  double rho = 0.0, residual = 0.0;
  for (long it = 1; it <= opts.max_iter; ++it) {
    dist_matvec(d, x.data(), y.data());
    rho = 0.0;
    for (int i = 0; i < n; ++i) rho += x[i] * y[i];
    residual = 0.0;
    for (int i = 0; i < n; ++i) {
      residual = std::max(residual, std::abs(y[i] - rho * x[i]));
    }
    if (residual <= opts.tol) {
      SpectralResult r;
      r.rho = rho;
      r.perron = std::move(x);
      r.residual = residual;
      r.iterations = it;
      return r;
    }
    if (!squared && it % 1000 == 0) {
      if (checkpoint_residual >= 0.0 && residual > 0.9999 * checkpoint_residual) {
        squared = true;
      }
      checkpoint_residual = residual;
    }
    double* advanced = y.data();
    if (squared) {
      dist_matvec(d, y.data(), z.data());
      advanced = z.data();
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += advanced[i] * advanced[i];
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) x[i] = advanced[i] / norm;
  }
  throw NoConvergence("spectral_radius: residual " + std::to_string(residual) +
                      " > tol after " + std::to_string(opts.max_iter) + " iterations");
}

SpectralResult spectral_radius(const Hypergraph& g, SpectralOptions opts) {
  return spectral_radius(distance_matrix(g), opts);
}

std::vector<SpectralResult> batch_spectral_radius(const std::vector<Hypergraph>& gs,
                                                  SpectralOptions opts) {
  std::vector<SpectralResult> out(gs.size());
  std::vector<std::string> failures(gs.size());
  const int count = static_cast<int>(gs.size());
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
  for (int i = 0; i < count; ++i) {
    try {
      out[i] = spectral_radius(gs[i], opts);
    } catch (const std::exception& ex) {
      failures[i] = ex.what();
    }
  }
  for (int i = 0; i < count; ++i) {
    if (!failures[i].empty()) {
      throw Error("batch_spectral_radius: instance " + std::to_string(i) + ": " + failures[i]);
    }
  }
  return out;
}

double rayleigh(const DistanceMatrix& d, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != d.n) {
    throw std::invalid_argument("rayleigh: vector size mismatch");
  }
  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
    throw NotUnit("rayleigh: vector norm differs from 1 by more than 1e-12");
  }
  std::vector<double> y(d.n);
  dist_matvec(d, x.data(), y.data());
  double acc = 0.0;
  for (int i = 0; i < d.n; ++i) acc += x[i] * y[i];
  return acc;
}

double sigma(const Hypergraph& g, const std::vector<int>& x, const SpectralResult& r) {
  double acc = 0.0;
  for (int v : x) {
    if (v < 0 || v >= g.n || v >= static_cast<int>(r.perron.size())) {
      throw VertexOutOfRange("sigma: vertex " + std::to_string(v));
    }
    acc += r.perron[v];
  }
  return acc;
}

double eigenequation_check(const Hypergraph& g, const SpectralResult& r, int u) {
  if (static_cast<int>(r.perron.size()) != g.n) {
    throw std::invalid_argument("eigenequation_check: perron size mismatch");
  }
  const std::vector<int> row = distances_from(g, u);
  double acc = 0.0;
  for (int v = 0; v < g.n; ++v) acc += row[v] * r.perron[v];
  return std::abs(r.rho * r.perron[u] - acc);
}

}  // namespace hyperspec
