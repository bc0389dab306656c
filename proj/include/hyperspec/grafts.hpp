#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hyperspec/families.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

struct PreconditionViolated : Error { using Error::Error; };
struct ResultingDuplicateEdge : Error { using Error::Error; };
struct ComponentHypothesisFailed : Error { using Error::Error; };

/// Outcome of one graft comparison. gap is the margin of the claimed strict
/// inequality (positive when the theorem's direction held); before/after
/// describe the two constructions.
struct GraftReport {
  double before_rho = 0.0;
  double after_rho = 0.0;
  double gap = 0.0;
  Verdict verdict = Verdict::Indistinguishable;
  FamilySpec before;
  FamilySpec after;
  std::uint64_t seed = 0;
};

/// Each selected edge must contain v and not u; it is replaced by
/// (e \ {v}) ∪ {u}. Vertex set unchanged.
Hypergraph move_edges(const Hypergraph& g, const std::vector<int>& edge_ids,
                      int v, int u);

/// rho(G_u(p,q)) < rho(G_u(p+1,q-1)) for p >= q >= 1.
GraftReport graft1(const Hypergraph& g, int u, int p, int q,
                   SpectralOptions opts = {});

/// rho(G_{u,v}(p,q)) < rho(G_{u,v}(p-1,q+1)) or < rho(G_{u,v}(p+1,q-1)),
/// under the hypothesis that G-e has exactly k components. verdict
/// aggregates: at least one comparison must strictly increase.
struct Graft2Report {
  GraftReport toward_q;  // against G_{u,v}(p-1, q+1)
  GraftReport toward_p;  // against G_{u,v}(p+1, q-1)
  Verdict verdict = Verdict::Indistinguishable;
};
Graft2Report graft2(const Hypergraph& g, int u, int v, int e, int p, int q,
                    SpectralOptions opts = {});

/// rho(G_{e,0}(H_1..H_{k-1})) > rho(G_{e,s}(H_1..H_{k-1})) when some part
/// with an edge is among those moved (min such index j <= s).
GraftReport graft3(const Hypergraph& g, int e, int s,
                   const std::vector<RootedPart>& parts, SpectralOptions opts = {});

/// Uniform random attachment hypertree: each new edge hangs off a uniformly
/// random existing vertex.
Hypergraph random_hypertree(int k, int m, std::mt19937_64& rng);

struct CampaignResult {
  int type = 0;
  int total = 0;
  int strict_pass = 0;
  int indistinguishable = 0;
  int violation = 0;
  std::vector<GraftReport> reports;  // one per instance, in seed order
};

/// count random admissible instances of graft `type` (1, 2 or 3) over
/// k in {2,3,4}, base hypertrees with n <= 14. Instances run in parallel
/// and are merged deterministically by index.
CampaignResult graft_campaign(int type, int count, std::uint64_t seed,
                              SpectralOptions opts = {});

}  // namespace hyperspec
