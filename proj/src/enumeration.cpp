#include "hyperspec/enumeration.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hyperspec/families.hpp"

namespace hyperspec {

std::string CanonicalForm::str() const {
  std::ostringstream out;
  out << n << ":";
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) out << ";";
    for (size_t j = 0; j < edges[i].size(); ++j) {
      if (j) out << ",";
      out << edges[i][j];
    }
  }
  return out.str();
}

Hypergraph from_canonical(const CanonicalForm& c) {
  return build(c.n, c.edges);
}

namespace {

using detail::ColoredCode;

// Bipartite incidence graph: nodes 0..n-1 are vertices, n..n+m-1 are edges.
// For hypertrees (no walk-cycles) this graph is a tree.
struct IncGraph {
  int total = 0;
  std::vector<std::vector<int>> adj;
};

IncGraph incidence_graph(const Hypergraph& g) {
  IncGraph t;
  t.total = g.n + g.edge_count();
  t.adj.resize(t.total);
  for (int i = 0; i < g.edge_count(); ++i) {
    for (int v : g.edges[i]) {
      t.adj[v].push_back(g.n + i);
      t.adj[g.n + i].push_back(v);
    }
  }
  return t;
}

size_t incidence_size(const Hypergraph& g) {
  size_t s = 0;
  for (const auto& e : g.edges) s += e.size();
  return s;
}

std::vector<int> tree_centers(const IncGraph& t) {
  if (t.total == 1) return {0};
  std::vector<int> deg(t.total);
  std::vector<int> layer;
  for (int i = 0; i < t.total; ++i) {
    deg[i] = static_cast<int>(t.adj[i].size());
    if (deg[i] <= 1) layer.push_back(i);
  }
  int remaining = t.total;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : t.adj[v]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  return layer;
}

void rooted_codes(const IncGraph& t, int n, const std::vector<int>& colors,
                  int node, int parent, std::vector<std::string>& code) {
  std::vector<std::string> child_codes;
  for (int c : t.adj[node]) {
    if (c == parent) continue;
    rooted_codes(t, n, colors, c, node, code);
    child_codes.push_back(code[c]);
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string s = "(";
  if (node < n) {
    s += 'v';
    s += std::to_string(colors[node]);
  } else {
    s += 'e';
  }
  for (const auto& cc : child_codes) s += cc;
  s += ')';
  code[node] = std::move(s);
}

// Preorder numbering of vertex nodes, children visited in code order.
// Equal-code siblings carry isomorphic subtrees, so the tie order does not
// change the resulting edge list.
void assign_preorder(const IncGraph& t, int n, const std::vector<std::string>& code,
                     int node, int parent, int& next, std::vector<int>& perm) {
  if (node < n) perm[node] = next++;
  std::vector<int> children;
  for (int c : t.adj[node]) {
    if (c != parent) children.push_back(c);
  }
  std::sort(children.begin(), children.end(), [&](int a, int b) {
    return code[a] != code[b] ? code[a] < code[b] : a < b;
  });
  for (int c : children) assign_preorder(t, n, code, c, node, next, perm);
}

ColoredCode apply_perm(const Hypergraph& g, const std::vector<int>& colors,
                       const std::vector<int>& perm) {
  ColoredCode cc;
  cc.form.n = g.n;
  cc.form.edges.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    Edge mapped;
    mapped.reserve(e.size());
    for (int v : e) mapped.push_back(perm[v]);
    std::sort(mapped.begin(), mapped.end());
    cc.form.edges.push_back(std::move(mapped));
  }
  std::sort(cc.form.edges.begin(), cc.form.edges.end());
  cc.colors.resize(g.n);
  for (int v = 0; v < g.n; ++v) cc.colors[perm[v]] = colors[v];
  return cc;
}

// Exact canonization of a connected walk-cycle-free hypergraph: classic
// rooted-tree codes on the incidence tree, rooted at its center(s).
ColoredCode canonical_tree(const Hypergraph& g, const std::vector<int>& colors) {
  const IncGraph t = incidence_graph(g);
  std::optional<ColoredCode> best;
  for (int root : tree_centers(t)) {
    std::vector<std::string> code(t.total);
    rooted_codes(t, g.n, colors, root, -1, code);
    std::vector<int> perm(g.n, -1);
    int next = 0;
    assign_preorder(t, g.n, code, root, -1, next, perm);
    ColoredCode cand = apply_perm(g, colors, perm);
    if (!best || cand < *best) best = std::move(cand);
  }
  return *best;
}

// Iterated color refinement; the final class ids are ordered by signature,
// hence isomorphism-invariant.
std::vector<int> refine_colors(const Hypergraph& g, const std::vector<int>& colors0) {
  const auto inc = incidence_lists(g);
  std::vector<int> colors(g.n);
  {
    std::map<int, int> rank;
    for (int c : colors0) rank.emplace(c, 0);
    int next = 0;
    for (auto& [c, r] : rank) r = next++;
    for (int v = 0; v < g.n; ++v) colors[v] = rank.at(colors0[v]);
  }
  while (true) {
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<std::vector<int>> parts;
      for (int ei : inc[v]) {
        std::vector<int> p{static_cast<int>(g.edges[ei].size())};
        for (int w : g.edges[ei]) {
          if (w != v) p.push_back(colors[w]);
        }
        std::sort(p.begin() + 1, p.end());
        parts.push_back(std::move(p));
      }
      std::sort(parts.begin(), parts.end());
      sig[v].push_back(colors[v]);
      for (const auto& p : parts) {
        sig[v].push_back(-1);
        sig[v].insert(sig[v].end(), p.begin(), p.end());
      }
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    std::vector<int> refined(g.n);
    for (int v = 0; v < g.n; ++v) refined[v] = rank.at(sig[v]);
    const auto distinct = [](const std::vector<int>& c) {
      return std::set<int>(c.begin(), c.end()).size();
    };
    const bool stable = distinct(refined) == distinct(colors);
    colors = std::move(refined);
    if (stable) return colors;
  }
}

// Exact minimal code over refinement-compatible permutations. Only reached
// for cyclic hypergraphs, which stay small in this artifact.
ColoredCode canonical_general(const Hypergraph& g, const std::vector<int>& colors0) {
  const std::vector<int> refined = refine_colors(g, colors0);
  const int classes = 1 + *std::max_element(refined.begin(), refined.end());
  std::vector<std::vector<int>> members(classes);
  for (int v = 0; v < g.n; ++v) members[refined[v]].push_back(v);

  double leaves = 1.0;
  for (const auto& ms : members) {
    for (size_t i = 2; i <= ms.size(); ++i) leaves *= static_cast<double>(i);
    if (leaves > 5e6) {
      throw Error("canonical_form: refinement too coarse for exact search at this size");
    }
  }

  std::vector<int> label_class;  // label position -> class
  for (int c = 0; c < classes; ++c) {
    label_class.insert(label_class.end(), members[c].size(), c);
  }

  std::vector<int> perm(g.n, -1);
  std::vector<char> used(g.n, 0);
  std::optional<CanonicalForm> best;

  const auto leaf = [&] {
    CanonicalForm cand;
    cand.n = g.n;
    for (const auto& e : g.edges) {
      Edge mapped;
      mapped.reserve(e.size());
      for (int v : e) mapped.push_back(perm[v]);
      std::sort(mapped.begin(), mapped.end());
      cand.edges.push_back(std::move(mapped));
    }
    std::sort(cand.edges.begin(), cand.edges.end());
    if (!best || cand < *best) best = std::move(cand);
  };

  const auto search = [&](auto&& self, int pos) -> void {
    if (pos == g.n) {
      leaf();
      return;
    }
    for (int v : members[label_class[pos]]) {
      if (used[v]) continue;
      used[v] = 1;
      perm[v] = pos;
      self(self, pos + 1);
      used[v] = 0;
    }
  };
  search(search, 0);

  ColoredCode cc;
  cc.form = std::move(*best);
  cc.colors.resize(g.n);
  for (int pos = 0; pos < g.n; ++pos) {
    cc.colors[pos] = colors0[members[label_class[pos]].front()];
  }
  return cc;
}

ColoredCode canonical_connected(const Hypergraph& g, const std::vector<int>& colors) {
  if (incidence_size(g) == static_cast<size_t>(g.n) + g.edges.size() - 1) {
    return canonical_tree(g, colors);
  }
  return canonical_general(g, colors);
}

}  // namespace

namespace detail {

ColoredCode canonical_colored(const Hypergraph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.n) {
    throw std::invalid_argument("canonical_colored: color count mismatch");
  }
  if (g.n == 0) return {};
  const ComponentPartition comps = components(g);
  if (comps.blocks.size() == 1) return canonical_connected(g, colors);

  std::vector<ColoredCode> codes;
  for (const auto& block : comps.blocks) {
    std::vector<int> remap(g.n, -1);
    for (size_t i = 0; i < block.size(); ++i) remap[block[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& e : g.edges) {
      if (remap[e.front()] < 0) continue;  // components are edge-closed
      Edge mapped;
      mapped.reserve(e.size());
      for (int v : e) mapped.push_back(remap[v]);
      edges.push_back(std::move(mapped));
    }
    std::vector<int> sub_colors(block.size());
    for (size_t i = 0; i < block.size(); ++i) sub_colors[i] = colors[block[i]];
    codes.push_back(canonical_connected(build(static_cast<int>(block.size()), std::move(edges)),
                                        sub_colors));
  }
  std::sort(codes.begin(), codes.end());

  ColoredCode merged;
  merged.form.n = g.n;
  int offset = 0;
  for (const auto& c : codes) {
    for (const auto& e : c.form.edges) {
      Edge shifted;
      shifted.reserve(e.size());
      for (int v : e) shifted.push_back(v + offset);
      merged.form.edges.push_back(std::move(shifted));
    }
    merged.colors.insert(merged.colors.end(), c.colors.begin(), c.colors.end());
    offset += c.form.n;
  }
  std::sort(merged.form.edges.begin(), merged.form.edges.end());
  return merged;
}

}  // namespace detail

CanonicalForm canonical_form(const Hypergraph& g) {
  return detail::canonical_colored(g, std::vector<int>(g.n, 0)).form;
}

bool are_isomorphic(const Hypergraph& g, const Hypergraph& h) {
  if (g.n != h.n || g.edges.size() != h.edges.size()) return false;
  return canonical_form(g) == canonical_form(h);
}

OrbitPartition automorphism_orbits(const Hypergraph& g) {
  std::map<detail::ColoredCode, std::vector<int>> groups;
  std::vector<int> colors(g.n, 0);
  for (int u = 0; u < g.n; ++u) {
    colors[u] = 1;
    groups[detail::canonical_colored(g, colors)].push_back(u);
    colors[u] = 0;
  }
  OrbitPartition p;
  p.orbits.reserve(groups.size());
  for (auto& [code, vs] : groups) p.orbits.push_back(std::move(vs));
  std::sort(p.orbits.begin(), p.orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return p;
}

bool enumeration_feasible(int k, int m) {
  if (k < 2 || m < 0) return false;
  switch (k) {
    case 2: return m <= 12;
    case 3: return m <= 7;
    case 4: return m <= 5;
    default: return m <= 3;
  }
}

std::vector<Hypergraph> generate_hypertrees(int k, int m) {
  if (k < 2 || m < 0) {
    throw std::invalid_argument("generate_hypertrees: need k >= 2, m >= 0");
  }
  if (!enumeration_feasible(k, m)) {
    throw EnumerationTooLarge("generate_hypertrees: (k=" + std::to_string(k) +
                              ", m=" + std::to_string(m) + ") outside the documented budget");
  }
  std::vector<Hypergraph> current{build(1, {}, k)};
  for (int level = 1; level <= m; ++level) {
    std::set<CanonicalForm> seen;
    for (const auto& t : current) {
      for (int u = 0; u < t.n; ++u) {
        seen.insert(canonical_form(attach_pendant_path(t, u, 1)));
      }
    }
    current.clear();
    for (const auto& code : seen) {
      current.push_back(build(code.n, code.edges, k));
    }
  }
  return current;
}

}  // namespace hyperspec
