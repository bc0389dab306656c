#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace oracles {

using hyperspec::Edge;
using hyperspec::Hypergraph;

double largest_eigenvalue(const hyperspec::DistanceMatrix& d) {
  Eigen::MatrixXd m(d.n, d.n);
  for (int i = 0; i < d.n; ++i) {
    for (int j = 0; j < d.n; ++j) m(i, j) = d(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

Hypergraph permute(const Hypergraph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  edges.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    Edge mapped;
    mapped.reserve(e.size());
    for (int v : e) mapped.push_back(perm[v]);
    edges.push_back(std::move(mapped));
  }
  return hyperspec::build(g.n, std::move(edges), g.k);
}

namespace {

std::set<Edge> edge_set(const Hypergraph& g) {
  return {g.edges.begin(), g.edges.end()};
}

}  // namespace

bool isomorphic_by_permutations(const Hypergraph& g, const Hypergraph& h) {
  if (g.n != h.n || g.edges.size() != h.edges.size()) return false;
  const std::set<Edge> target = edge_set(h);
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::set<Edge> mapped;
    for (const auto& e : g.edges) {
      Edge me;
      me.reserve(e.size());
      for (int v : e) me.push_back(perm[v]);
      std::sort(me.begin(), me.end());
      mapped.insert(std::move(me));
    }
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Edge> permutation_min_code(const Hypergraph& g) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool first = true;
  do {
    std::vector<Edge> code;
    code.reserve(g.edges.size());
    for (const auto& e : g.edges) {
      Edge me;
      me.reserve(e.size());
      for (int v : e) me.push_back(perm[v]);
      std::sort(me.begin(), me.end());
      code.push_back(std::move(me));
    }
    std::sort(code.begin(), code.end());
    if (first || code < best) {
      best = std::move(code);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Hypergraph> brute_force_hypertrees(int k, int m) {
  const int n = 1 + (k - 1) * m;
  if (m == 0) return {hyperspec::build(1, {}, k)};

  // all k-subsets of 0..n-1
  std::vector<Edge> pool;
  std::vector<int> pick(k);
  const auto gen_subsets = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      pool.push_back(Edge(pick.begin(), pick.end()));
      return;
    }
    for (int v = start; v < n; ++v) {
      pick[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  gen_subsets(gen_subsets, 0, 0);

  std::map<std::vector<Edge>, Hypergraph> classes;
  std::vector<int> chosen(m);
  const auto gen_combos = [&](auto&& self, int start, int depth) -> void {
    if (depth == m) {
      std::vector<Edge> edges;
      for (int idx : chosen) edges.push_back(pool[idx]);
      Hypergraph g = hyperspec::build(n, std::move(edges), k);
      if (!hyperspec::is_hypertree(g)) return;
      classes.emplace(permutation_min_code(g), std::move(g));
      return;
    }
    for (int idx = start; idx < static_cast<int>(pool.size()); ++idx) {
      chosen[depth] = idx;
      self(self, idx + 1, depth + 1);
    }
  };
  gen_combos(gen_combos, 0, 0);

  std::vector<Hypergraph> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace oracles
