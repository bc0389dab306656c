#include "hyperspec/grafts.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hyperspec/parallel.hpp"

namespace hyperspec {

Hypergraph move_edges(const Hypergraph& g, const std::vector<int>& edge_ids,
                      int v, int u) {
  if (v < 0 || v >= g.n) throw VertexOutOfRange("move_edges: vertex " + std::to_string(v));
  if (u < 0 || u >= g.n) throw VertexOutOfRange("move_edges: vertex " + std::to_string(u));
  std::vector<char> selected(g.edges.size(), 0);
  for (int id : edge_ids) {
    if (id < 0 || id >= g.edge_count()) {
      throw EdgeIndexOutOfRange("move_edges: edge index " + std::to_string(id));
    }
    selected[id] = 1;
  }

  std::vector<Edge> edges = g.edges;
  for (int id = 0; id < g.edge_count(); ++id) {
    if (!selected[id]) continue;
    Edge& e = edges[id];
    if (!std::binary_search(e.begin(), e.end(), v)) {
      throw PreconditionViolated("move_edges: edge " + std::to_string(id) +
                                 " does not contain v=" + std::to_string(v));
    }
    if (std::binary_search(e.begin(), e.end(), u)) {
      throw PreconditionViolated("move_edges: edge " + std::to_string(id) +
                                 " already contains u=" + std::to_string(u));
    }
    e.erase(std::find(e.begin(), e.end(), v));
    e.insert(std::upper_bound(e.begin(), e.end(), u), u);
  }

  std::set<Edge> dedupe(edges.begin(), edges.end());
  if (dedupe.size() != edges.size()) {
    throw ResultingDuplicateEdge("move_edges: rewrite produced a duplicate edge");
  }
  return build(g.n, std::move(edges), g.k);
}

namespace {

FamilySpec pendant_spec(int u, int p, int q) {
  FamilySpec spec;
  spec.kind = FamilyKind::PendantAttach;
  spec.params = {{"u", u}, {"p", p}, {"q", q}};
  return spec;
}

FamilySpec two_pendant_spec(int u, int v, int p, int q) {
  FamilySpec spec;
  spec.kind = FamilyKind::TwoPendantAttach;
  spec.params = {{"u", u}, {"v", v}, {"p", p}, {"q", q}};
  return spec;
}

FamilySpec edge_split_spec(int e, int s, const std::vector<RootedPart>& parts) {
  FamilySpec spec;
  spec.kind = FamilyKind::EdgeSplit;
  spec.params = {{"e", e}, {"s", s}};
  for (size_t i = 0; i < parts.size(); ++i) {
    spec.params["t" + std::to_string(i + 1)] = parts[i].graph.edge_count();
  }
  return spec;
}

GraftReport make_report(double before, double after, double gap, double threshold,
                        FamilySpec before_spec, FamilySpec after_spec) {
  GraftReport r;
  r.before_rho = before;
  r.after_rho = after;
  r.gap = gap;
  r.verdict = strict_verdict(0.0, gap, threshold);
  r.before = std::move(before_spec);
  r.after = std::move(after_spec);
  return r;
}

}  // namespace

GraftReport graft1(const Hypergraph& g, int u, int p, int q, SpectralOptions opts) {
  if (!g.k) throw NotUniform("graft1: base is not uniform");
  if (g.edge_count() < 1) throw PreconditionViolated("graft1: base needs an edge");
  if (!(p >= q && q >= 1)) {
    throw PreconditionViolated("graft1: need p >= q >= 1, got p=" + std::to_string(p) +
                               " q=" + std::to_string(q));
  }
  const double before = spectral_radius(attach_two_paths(g, u, p, q), opts).rho;
  const double after = spectral_radius(attach_two_paths(g, u, p + 1, q - 1), opts).rho;
  return make_report(before, after, after - before, strictness_threshold(opts),
                     pendant_spec(u, p, q), pendant_spec(u, p + 1, q - 1));
}

Graft2Report graft2(const Hypergraph& g, int u, int v, int e, int p, int q,
                    SpectralOptions opts) {
  if (!g.k) throw NotUniform("graft2: base is not uniform");
  const int k = *g.k;
  if (g.edge_count() < 2) throw PreconditionViolated("graft2: base needs >= 2 edges");
  if (e < 0 || e >= g.edge_count()) {
    throw EdgeIndexOutOfRange("graft2: edge index " + std::to_string(e));
  }
  const Edge& anchor = g.edges[e];
  if (u == v || !std::binary_search(anchor.begin(), anchor.end(), u) ||
      !std::binary_search(anchor.begin(), anchor.end(), v)) {
    throw PreconditionViolated("graft2: u and v must be distinct vertices of edge e");
  }
  if (p < 1 || q < 1) throw PreconditionViolated("graft2: need p, q >= 1");
  const auto comps = components(delete_edge(g, e));
  if (static_cast<int>(comps.blocks.size()) != k) {
    throw ComponentHypothesisFailed("graft2: G-e has " + std::to_string(comps.blocks.size()) +
                                    " components, need " + std::to_string(k));
  }

  const double base = spectral_radius(attach_paths_at(g, u, p, v, q), opts).rho;
  const double toward_q = spectral_radius(attach_paths_at(g, u, p - 1, v, q + 1), opts).rho;
  const double toward_p = spectral_radius(attach_paths_at(g, u, p + 1, v, q - 1), opts).rho;
  const double threshold = strictness_threshold(opts);

  Graft2Report r;
  r.toward_q = make_report(base, toward_q, toward_q - base, threshold,
                           two_pendant_spec(u, v, p, q), two_pendant_spec(u, v, p - 1, q + 1));
  r.toward_p = make_report(base, toward_p, toward_p - base, threshold,
                           two_pendant_spec(u, v, p, q), two_pendant_spec(u, v, p + 1, q - 1));
  r.verdict = strict_verdict(0.0, std::max(r.toward_q.gap, r.toward_p.gap), threshold);
  return r;
}

GraftReport graft3(const Hypergraph& g, int e, int s,
                   const std::vector<RootedPart>& parts, SpectralOptions opts) {
  int j = -1;  // smallest 1-based part index carrying an edge
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].graph.edge_count() >= 1) {
      j = static_cast<int>(i) + 1;
      break;
    }
  }
  if (j != -1 && s < j) {
    throw PreconditionViolated("graft3: s=" + std::to_string(s) +
                               " below the first nonempty part j=" + std::to_string(j));
  }
  const double spread = spectral_radius(g_es(g, e, 0, parts), opts).rho;
  const double bunched = spectral_radius(g_es(g, e, s, parts), opts).rho;
  // theorem direction: the s=0 construction is strictly larger
  return make_report(spread, bunched, spread - bunched, strictness_threshold(opts),
                     edge_split_spec(e, 0, parts), edge_split_spec(e, s, parts));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// portable bounded draw (uniform_int_distribution is not stable across
// standard libraries)
int bounded(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

}  // namespace

Hypergraph random_hypertree(int k, int m, std::mt19937_64& rng) {
  Hypergraph t = build(1, {}, k);
  for (int i = 0; i < m; ++i) {
    t = attach_pendant_path(t, bounded(rng, t.n), 1);
  }
  return t;
}

namespace {

// Admissible random instances per graft type: k in {2,3,4}, base n <= 14.
GraftReport campaign_instance(int type, std::uint64_t instance_seed, SpectralOptions opts) {
  std::mt19937_64 rng(instance_seed);
  const int k = 2 + bounded(rng, 3);
  const int max_m = 13 / (k - 1);

  if (type == 1) {
    const int m = 1 + bounded(rng, max_m);
    const Hypergraph base = random_hypertree(k, m, rng);
    const int u = bounded(rng, base.n);
    const int q = 1 + bounded(rng, 2);
    const int p = q + bounded(rng, 3);
    GraftReport r = graft1(base, u, p, q, opts);
    r.seed = instance_seed;
    return r;
  }
  if (type == 2) {
    const int m = 2 + bounded(rng, max_m - 1);
    const Hypergraph base = random_hypertree(k, m, rng);
    const int e = bounded(rng, base.edge_count());
    const int ui = bounded(rng, k);
    int vi = bounded(rng, k - 1);
    if (vi >= ui) ++vi;
    const int p = 1 + bounded(rng, 2);
    const int q = 1 + bounded(rng, 2);
    Graft2Report r2 = graft2(base, base.edges[e][ui], base.edges[e][vi], e, p, q, opts);
    // record the winning comparison; the aggregate verdict is the theorem's
    GraftReport r = r2.toward_p.gap >= r2.toward_q.gap ? r2.toward_p : r2.toward_q;
    r.verdict = r2.verdict;
    r.seed = instance_seed;
    return r;
  }
  if (type == 3) {
    const int m = 2 + bounded(rng, max_m - 1);
    const Hypergraph base = random_hypertree(k, m, rng);
    std::vector<int> candidates;
    for (int e = 0; e < base.edge_count(); ++e) {
      int high = 0;
      for (int v : base.edges[e]) high += degree(base, v) >= 2 ? 1 : 0;
      if (high == 1) candidates.push_back(e);
    }
    const int e = candidates[bounded(rng, static_cast<int>(candidates.size()))];
    std::vector<int> t(k - 1, 0);
    for (int& ti : t) ti = bounded(rng, 3);
    const int forced = bounded(rng, k - 1);
    if (*std::max_element(t.begin(), t.end()) == 0) t[forced] = 1 + bounded(rng, 2);
    int j = 0;
    while (t[j] == 0) ++j;  // 0-based index of first nonempty part
    const int s = (j + 1) + bounded(rng, k - 1 - j);
    std::vector<RootedPart> parts;
    for (int ti : t) parts.push_back({hyperstar(ti * (k - 1) + 1, k), 0});
    GraftReport r = graft3(base, e, s, parts, opts);
    r.seed = instance_seed;
    return r;
  }
  throw std::invalid_argument("graft_campaign: type must be 1, 2 or 3");
}

}  // namespace

CampaignResult graft_campaign(int type, int count, std::uint64_t seed,
                              SpectralOptions opts) {
  if (type < 1 || type > 3) {
    throw std::invalid_argument("graft_campaign: type must be 1, 2 or 3");
  }
  CampaignResult result;
  result.type = type;
  result.total = count;
  result.reports.resize(count);
  std::vector<std::string> failures(count);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
  for (int i = 0; i < count; ++i) {
    try {
      result.reports[i] = campaign_instance(type, splitmix64(seed ^ splitmix64(i)), opts);
    } catch (const std::exception& ex) {
      failures[i] = ex.what();
    }
  }
  for (int i = 0; i < count; ++i) {
    if (!failures[i].empty()) {
      throw Error("graft_campaign: instance " + std::to_string(i) + ": " + failures[i]);
    }
  }
  for (const auto& r : result.reports) {
    switch (r.verdict) {
      case Verdict::StrictPass: ++result.strict_pass; break;
      case Verdict::Indistinguishable: ++result.indistinguishable; break;
      case Verdict::Violation: ++result.violation; break;
    }
  }
  return result;
}

}  // namespace hyperspec
