#include "hyperspec/families.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hyperspec {

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::LoosePath: return "loose-path";
    case FamilyKind::HyperStar: return "hyperstar";
    case FamilyKind::Broom: return "broom";
    case FamilyKind::FGraph: return "f-graph";
    case FamilyKind::DoubleBroom: return "double-broom";
    case FamilyKind::PendantAttach: return "pendant-attach";
    case FamilyKind::TwoPendantAttach: return "two-pendant-attach";
    case FamilyKind::EdgeSplit: return "edge-split";
  }
  return "?";
}

FamilyKind family_kind_from_string(const std::string& s) {
  for (FamilyKind kind : {FamilyKind::LoosePath, FamilyKind::HyperStar,
                          FamilyKind::Broom, FamilyKind::FGraph,
                          FamilyKind::DoubleBroom, FamilyKind::PendantAttach,
                          FamilyKind::TwoPendantAttach, FamilyKind::EdgeSplit}) {
    if (s == to_string(kind)) return kind;
  }
  throw std::invalid_argument("unknown family kind: " + s);
}

std::string to_json(const FamilySpec& spec) {
  std::ostringstream out;
  out << "{\"kind\":\"" << to_string(spec.kind) << "\",\"params\":{";
  bool first = true;
  for (const auto& [key, value] : spec.params) {
    if (!first) out << ",";
    first = false;
    out << "\"" << key << "\":" << value;
  }
  out << "}}";
  return out.str();
}

FamilySpec family_spec_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  FamilySpec spec;
  spec.kind = family_kind_from_string(j.at("kind").get<std::string>());
  for (const auto& [key, value] : j.at("params").items()) {
    spec.params[key] = value.get<long>();
  }
  return spec;
}

namespace {

// m = (n-1)/(k-1); throws unless the division is exact.
int uniform_edge_count(int n, int k, const char* who) {
  if (k < 2) throw BadDivisibility(std::string(who) + ": need k >= 2");
  if (n < 1) throw BadDivisibility(std::string(who) + ": need n >= 1");
  if ((n - 1) % (k - 1) != 0) {
    throw BadDivisibility(std::string(who) + ": n-1 = " + std::to_string(n - 1) +
                          " not divisible by k-1 = " + std::to_string(k - 1));
  }
  return (n - 1) / (k - 1);
}

}  // namespace

Hypergraph loose_path(int n, int k) {
  const int m = uniform_edge_count(n, k, "loose_path");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    Edge e(k);
    for (int j = 0; j < k; ++j) e[j] = i * (k - 1) + j;
    edges.push_back(std::move(e));
  }
  return build(n, std::move(edges), k);
}

Hypergraph hyperstar(int n, int k) {
  const int m = uniform_edge_count(n, k, "hyperstar");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    Edge e{0};
    for (int j = 0; j < k - 1; ++j) e.push_back(1 + i * (k - 1) + j);
    edges.push_back(std::move(e));
  }
  return build(n, std::move(edges), k);
}

Hypergraph broom(int n, int k, int delta) {
  const int m = uniform_edge_count(n, k, "broom");
  if (delta < 1 || delta > m) {
    throw BadDelta("broom: delta " + std::to_string(delta) + " outside 1.." + std::to_string(m));
  }
  Hypergraph g = loose_path(n - (delta - 1) * (k - 1), k);
  for (int i = 0; i < delta - 1; ++i) g = attach_pendant_path(g, 0, 1);
  return g;
}

Hypergraph f_graph(int n, int k) {
  const int m = uniform_edge_count(n, k, "f_graph");
  if (m < 3) throw TooSmall("f_graph: need (n-1)/(k-1) >= 3");
  if (k == 2) return broom(n, 2, 3);
  // First off-spine degree-1 vertex of e_2 is k; spine vertices of e_2 are
  // k-1 and 2(k-1).
  return attach_pendant_path(loose_path(n - k + 1, k), k, 1);
}

Hypergraph double_broom(int n, int k, int a) {
  const int m = uniform_edge_count(n, k, "double_broom");
  const int amax = (n - k) / (2 * (k - 1));
  if (m < 3 || a < 1 || a > amax) {
    throw BadA("double_broom: a " + std::to_string(a) + " outside 1.." +
               std::to_string(std::max(amax, 0)));
  }
  const int b = (n - k) / (k - 1) - a;
  std::vector<Edge> edges;
  const int u = 0;
  int next = 1;
  for (int i = 0; i < a; ++i) {
    Edge e{u};
    for (int j = 0; j < k - 1; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  const int v = next++;
  for (int i = 0; i < b; ++i) {
    Edge e{v};
    for (int j = 0; j < k - 1; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  Edge bridge{u, v};
  for (int j = 0; j < k - 2; ++j) bridge.push_back(next++);
  edges.push_back(std::move(bridge));
  return build(n, std::move(edges), k);
}

Hypergraph attach_pendant_path(const Hypergraph& g, int u, int p) {
  if (!g.k) throw NotUniform("attach_pendant_path: no uniformity witness");
  if (u < 0 || u >= g.n) {
    throw VertexOutOfRange("attach_pendant_path: vertex " + std::to_string(u));
  }
  if (p < 0) throw std::invalid_argument("attach_pendant_path: negative length");
  const int k = *g.k;
  std::vector<Edge> edges = g.edges;
  int n = g.n;
  int chain = u;
  for (int step = 0; step < p; ++step) {
    Edge e{chain};
    for (int j = 0; j < k - 1; ++j) e.push_back(n++);
    chain = n - 1;
    edges.push_back(std::move(e));
  }
  return build(n, std::move(edges), k);
}

Hypergraph attach_two_paths(const Hypergraph& g, int u, int p, int q) {
  return attach_pendant_path(attach_pendant_path(g, u, p), u, q);
}

Hypergraph attach_paths_at(const Hypergraph& g, int u, int p, int v, int q) {
  return attach_pendant_path(attach_pendant_path(g, u, p), v, q);
}

namespace {

// Disjoint union with root identified to target; part vertices other than
// the root are appended after g's range.
Hypergraph merge_at(const Hypergraph& g, int target, const Hypergraph& part, int root) {
  if (root < 0 || root >= part.n) {
    throw VertexOutOfRange("g_es: part root " + std::to_string(root));
  }
  std::vector<int> remap(part.n);
  int n = g.n;
  for (int v = 0; v < part.n; ++v) remap[v] = (v == root) ? target : n++;
  std::vector<Edge> edges = g.edges;
  for (const auto& e : part.edges) {
    Edge mapped;
    mapped.reserve(e.size());
    for (int v : e) mapped.push_back(remap[v]);
    edges.push_back(std::move(mapped));
  }
  return build(n, std::move(edges), g.k);
}

}  // namespace

Hypergraph g_es(const Hypergraph& g, int e, int s, const std::vector<RootedPart>& parts) {
  if (!g.k) throw NotUniform("g_es: base is not uniform");
  const int k = *g.k;
  if (e < 0 || e >= g.edge_count()) {
    throw EdgeIndexOutOfRange("g_es: edge index " + std::to_string(e));
  }
  if (s < 0 || s > k - 1) {
    throw BadS("g_es: s " + std::to_string(s) + " outside 0.." + std::to_string(k - 1));
  }
  if (static_cast<int>(parts.size()) != k - 1) {
    throw std::invalid_argument("g_es: expected " + std::to_string(k - 1) + " parts");
  }

  std::vector<int> anchors;
  int wk = -1;
  for (int v : g.edges[e]) {
    if (degree(g, v) == 1) {
      anchors.push_back(v);
    } else if (wk == -1) {
      wk = v;
    } else {
      throw BadAnchorDegrees("g_es: edge has more than one vertex of degree >= 2");
    }
  }
  if (wk == -1 || static_cast<int>(anchors.size()) != k - 1) {
    throw BadAnchorDegrees("g_es: edge needs k-1 vertices of degree 1 and one of degree >= 2");
  }

  Hypergraph result = g;
  for (int i = 0; i < k - 1; ++i) {
    if (parts[i].graph.k && *parts[i].graph.k != k) {
      throw NotUniform("g_es: part " + std::to_string(i + 1) + " is not " +
                       std::to_string(k) + "-uniform");
    }
    const int target = (i < s) ? wk : anchors[i];
    result = merge_at(result, target, parts[i].graph, parts[i].root);
  }
  return result;
}

Hypergraph g_es_stars(const Hypergraph& g, int e, int s, const std::vector<int>& t) {
  if (!g.k) throw NotUniform("g_es_stars: base is not uniform");
  const int k = *g.k;
  std::vector<RootedPart> parts;
  parts.reserve(t.size());
  for (int ti : t) {
    if (ti < 0) throw std::invalid_argument("g_es_stars: negative star size");
    parts.push_back({hyperstar(ti * (k - 1) + 1, k), 0});
  }
  return g_es(g, e, s, parts);
}

namespace {

long param(const FamilySpec& spec, const std::string& name) {
  const auto it = spec.params.find(name);
  if (it == spec.params.end()) {
    throw std::invalid_argument(std::string("family spec ") + to_string(spec.kind) +
                                ": missing parameter " + name);
  }
  return it->second;
}

long param_or(const FamilySpec& spec, const std::string& name, long fallback) {
  const auto it = spec.params.find(name);
  return it == spec.params.end() ? fallback : it->second;
}

}  // namespace

Hypergraph materialize(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::LoosePath:
      return loose_path(static_cast<int>(param(spec, "n")), static_cast<int>(param(spec, "k")));
    case FamilyKind::HyperStar:
      return hyperstar(static_cast<int>(param(spec, "n")), static_cast<int>(param(spec, "k")));
    case FamilyKind::Broom:
      return broom(static_cast<int>(param(spec, "n")), static_cast<int>(param(spec, "k")),
                   static_cast<int>(param(spec, "delta")));
    case FamilyKind::FGraph:
      return f_graph(static_cast<int>(param(spec, "n")), static_cast<int>(param(spec, "k")));
    case FamilyKind::DoubleBroom:
      return double_broom(static_cast<int>(param(spec, "n")),
                          static_cast<int>(param(spec, "k")),
                          static_cast<int>(param(spec, "a")));
    default:
      throw std::invalid_argument(std::string("family kind ") + to_string(spec.kind) +
                                  " needs a base hypergraph");
  }
}

Hypergraph materialize(const FamilySpec& spec, const Hypergraph& base) {
  switch (spec.kind) {
    case FamilyKind::PendantAttach:
      return attach_two_paths(base, static_cast<int>(param(spec, "u")),
                              static_cast<int>(param(spec, "p")),
                              static_cast<int>(param_or(spec, "q", 0)));
    case FamilyKind::TwoPendantAttach:
      return attach_paths_at(base, static_cast<int>(param(spec, "u")),
                             static_cast<int>(param(spec, "p")),
                             static_cast<int>(param(spec, "v")),
                             static_cast<int>(param(spec, "q")));
    case FamilyKind::EdgeSplit: {
      if (!base.k) throw NotUniform("edge-split: base is not uniform");
      std::vector<int> t;
      for (int i = 1; i < *base.k; ++i) {
        t.push_back(static_cast<int>(param(spec, "t" + std::to_string(i))));
      }
      return g_es_stars(base, static_cast<int>(param(spec, "e")),
                        static_cast<int>(param(spec, "s")), t);
    }
    default:
      return materialize(spec);
  }
}

}  // namespace hyperspec
