#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <set>

namespace hyperspec {

Hypergraph build(int n, std::vector<Edge> edges, std::optional<int> expected_k) {
  if (n < 0) throw VertexOutOfRange("build: negative vertex count");
  std::set<Edge> seen;
  for (auto& e : edges) {
    if (e.empty()) throw EmptyEdge("build: empty edge");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.front() < 0 || e.back() >= n) {
      throw EdgeOutOfRange("build: edge vertex " +
                           std::to_string(e.front() < 0 ? e.front() : e.back()) +
                           " outside 0.." + std::to_string(n - 1));
    }
    if (!seen.insert(e).second) throw DuplicateEdge("build: duplicate edge");
    if (expected_k && static_cast<int>(e.size()) != *expected_k) {
      throw NotUniform("build: edge size " + std::to_string(e.size()) +
                       " does not match k=" + std::to_string(*expected_k));
    }
  }

  Hypergraph g;
  g.n = n;
  g.edges = std::move(edges);
  if (expected_k) {
    g.k = expected_k;
  } else if (!g.edges.empty()) {
    const size_t k0 = g.edges.front().size();
    bool uniform = true;
    for (const auto& e : g.edges) uniform = uniform && e.size() == k0;
    if (uniform) g.k = static_cast<int>(k0);
  }
  return g;
}

int degree(const Hypergraph& g, int v) {
  if (v < 0 || v >= g.n) throw VertexOutOfRange("degree: vertex " + std::to_string(v));
  int d = 0;
  for (const auto& e : g.edges) {
    d += std::binary_search(e.begin(), e.end(), v) ? 1 : 0;
  }
  return d;
}

int max_degree(const Hypergraph& g) {
  std::vector<int> deg(g.n, 0);
  for (const auto& e : g.edges) {
    for (int v : e) ++deg[v];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<std::vector<int>> incidence_lists(const Hypergraph& g) {
  std::vector<std::vector<int>> inc(g.n);
  for (int i = 0; i < g.edge_count(); ++i) {
    for (int v : g.edges[i]) inc[v].push_back(i);
  }
  return inc;
}

ComponentPartition components(const Hypergraph& g) {
  const auto inc = incidence_lists(g);
  std::vector<char> vseen(g.n, 0), eseen(g.edges.size(), 0);
  ComponentPartition parts;
  for (int s = 0; s < g.n; ++s) {
    if (vseen[s]) continue;
    std::vector<int> block, queue{s};
    vseen[s] = 1;
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      block.push_back(v);
      for (int ei : inc[v]) {
        if (eseen[ei]) continue;
        eseen[ei] = 1;
        for (int w : g.edges[ei]) {
          if (!vseen[w]) {
            vseen[w] = 1;
            queue.push_back(w);
          }
        }
      }
    }
    std::sort(block.begin(), block.end());
    parts.blocks.push_back(std::move(block));
  }
  return parts;
}

bool is_connected(const Hypergraph& g) {
  return components(g).blocks.size() <= 1;
}

namespace {

// Extends a walk (v0, e1, v1, ...) with distinct edges and distinct inner
// vertices; closing back to v0 after >= 2 edges is a cycle.
bool cycle_dfs(const Hypergraph& g, const std::vector<std::vector<int>>& inc,
               int start, int cur, int length, std::vector<char>& vused,
               std::vector<char>& eused) {
  for (int ei : inc[cur]) {
    if (eused[ei]) continue;
    eused[ei] = 1;
    for (int w : g.edges[ei]) {
      if (w == cur) continue;
      if (w == start && length + 1 >= 2) return true;
      if (vused[w]) continue;
      vused[w] = 1;
      if (cycle_dfs(g, inc, start, w, length + 1, vused, eused)) return true;
      vused[w] = 0;
    }
    eused[ei] = 0;
  }
  return false;
}

}  // namespace

bool has_cycle(const Hypergraph& g) {
  const auto inc = incidence_lists(g);
  std::vector<char> vused(g.n, 0), eused(g.edges.size(), 0);
  for (int s = 0; s < g.n; ++s) {
    vused[s] = 1;
    if (cycle_dfs(g, inc, s, s, 0, vused, eused)) return true;
    vused[s] = 0;
  }
  return false;
}

bool is_hypertree(const Hypergraph& g) {
  if (!g.k) throw NotUniform("is_hypertree: no uniformity witness");
  if (!is_connected(g)) return false;
  return g.n == 1 + (*g.k - 1) * g.edge_count();
}

Hypergraph delete_vertex(const Hypergraph& g, int u) {
  if (u < 0 || u >= g.n) throw VertexOutOfRange("delete_vertex: vertex " + std::to_string(u));
  std::vector<Edge> edges;
  for (const auto& e : g.edges) {
    if (std::binary_search(e.begin(), e.end(), u)) continue;
    Edge mapped;
    mapped.reserve(e.size());
    for (int v : e) mapped.push_back(v > u ? v - 1 : v);
    edges.push_back(std::move(mapped));
  }
  return build(g.n - 1, std::move(edges));
}

Hypergraph delete_edge(const Hypergraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) {
    throw EdgeIndexOutOfRange("delete_edge: edge index " + std::to_string(e));
  }
  std::vector<Edge> edges = g.edges;
  edges.erase(edges.begin() + e);
  return build(g.n, std::move(edges), g.k);
}

Hypergraph induced(const Hypergraph& g, const std::vector<int>& x) {
  if (x.empty()) throw EmptySubset("induced: empty vertex subset");
  std::vector<int> xs = x;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.front() < 0 || xs.back() >= g.n) {
    throw VertexOutOfRange("induced: subset vertex outside 0.." + std::to_string(g.n - 1));
  }
  std::vector<int> remap(g.n, -1);
  for (size_t i = 0; i < xs.size(); ++i) remap[xs[i]] = static_cast<int>(i);

  std::set<Edge> edges;
  for (const auto& e : g.edges) {
    Edge cut;
    for (int v : e) {
      if (remap[v] >= 0) cut.push_back(remap[v]);
    }
    if (!cut.empty()) edges.insert(std::move(cut));
  }
  return build(static_cast<int>(xs.size()),
               std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace hyperspec
