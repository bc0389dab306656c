#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

struct BadDivisibility : Error { using Error::Error; };
struct BadDelta : Error { using Error::Error; };
struct TooSmall : Error { using Error::Error; };
struct BadA : Error { using Error::Error; };
struct BadAnchorDegrees : Error { using Error::Error; };
struct BadS : Error { using Error::Error; };

enum class FamilyKind {
  LoosePath,
  HyperStar,
  Broom,
  FGraph,
  DoubleBroom,
  PendantAttach,
  TwoPendantAttach,
  EdgeSplit,
};

const char* to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& s);

/// Parametric description of a named family instance. Parameter names are
/// the CLI flag names: n, k, delta, a, u, v, p, q, e, s, t1..t{k-1}.
struct FamilySpec {
  FamilyKind kind = FamilyKind::LoosePath;
  std::map<std::string, long> params;
};

std::string to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const std::string& text);

// Canonical labelings, fixed so file outputs are byte-stable:
//   loose_path: edge i covers i(k-1) .. i(k-1)+k-1; consecutive edges share
//     one vertex. hyperstar: center is 0, edge i adds leaves 1+i(k-1) ..
//     (i+1)(k-1). broom: loose path first, star edges appended at vertex 0.
//   double_broom: u=0, its leaf blocks, then v, its leaf blocks, then the
//     k-2 bridge vertices last. Fresh vertices of attached paths are always
//     appended after the existing range.

Hypergraph loose_path(int n, int k);

Hypergraph hyperstar(int n, int k);

/// Hyperstar of delta-1 edges glued at an end vertex of a loose path.
Hypergraph broom(int n, int k, int delta);

/// Loose path with a pendant edge at the first off-spine degree-1 vertex of
/// its second edge; for k=2 this is broom(n, 2, 3).
Hypergraph f_graph(int n, int k);

/// Two hyperstars (a and b = (n-k)/(k-1) - a edges) joined through their
/// centers by one bridging edge.
Hypergraph double_broom(int n, int k, int a);

/// Chains p fresh edges from u, each introducing k-1 new vertices; p=0 is
/// the identity.
Hypergraph attach_pendant_path(const Hypergraph& g, int u, int p);

/// Pendant paths of lengths p and q at the same vertex.
Hypergraph attach_two_paths(const Hypergraph& g, int u, int p, int q);

/// Pendant path of length p at u and of length q at v.
Hypergraph attach_paths_at(const Hypergraph& g, int u, int p, int v, int q);

struct RootedPart {
  Hypergraph graph;
  int root = 0;
};

/// Edge e must have exactly one vertex of degree >= 2 (call it w_k) and k-1
/// anchors of degree 1 (w_1..w_{k-1}, ascending). Part i is glued at w_k for
/// i <= s and at w_i otherwise (1-based i).
Hypergraph g_es(const Hypergraph& g, int e, int s, const std::vector<RootedPart>& parts);

/// g_es with hyperstar parts S_{t_i(k-1)+1,k} rooted at their centers.
Hypergraph g_es_stars(const Hypergraph& g, int e, int s, const std::vector<int>& t);

/// Materializes the five standalone kinds (LoosePath..DoubleBroom).
Hypergraph materialize(const FamilySpec& spec);

/// Materializes the anchored kinds (PendantAttach, TwoPendantAttach,
/// EdgeSplit) on top of a base hypergraph.
Hypergraph materialize(const FamilySpec& spec, const Hypergraph& base);

}  // namespace hyperspec
